#include <numeric>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "nsg/semigroup.hpp"
#include "oracles.hpp"

namespace nsg {
namespace {

std::vector<Int> gens_of(const NumericalSemigroup& s) {
  return s.min_generators();
}

TEST(FromGeneratorsTest, FullSemigroup) {
  const auto s = NumericalSemigroup::from_generators({1});
  EXPECT_EQ(s.conductor(), 0);
  EXPECT_EQ(s.genus(), 0);
  EXPECT_EQ(s.frobenius(), -1);
  EXPECT_EQ(gens_of(s), std::vector<Int>{1});
  EXPECT_TRUE(s.is_member(0));
  EXPECT_TRUE(s.is_member(1));
  EXPECT_EQ(s, NumericalSemigroup::full());
}

TEST(FromGeneratorsTest, FiveSevenEighteen) {
  const auto s = NumericalSemigroup::from_generators({5, 7, 18});
  EXPECT_EQ(s.conductor(), 17);
  EXPECT_EQ(s.genus(), 10);
  EXPECT_EQ(s.members_below(19),
            (std::vector<Int>{0, 5, 7, 10, 12, 14, 15, 17, 18}));
  EXPECT_EQ(s.gaps(), (std::vector<Int>{1, 2, 3, 4, 6, 8, 9, 11, 13, 16}));
  EXPECT_EQ(gens_of(s), (std::vector<Int>{5, 7, 18}));
}

TEST(FromGeneratorsTest, DropsRedundantGenerators) {
  const auto s = NumericalSemigroup::from_generators({4, 6, 10, 9});
  EXPECT_EQ(gens_of(s), (std::vector<Int>{4, 6, 9}));
  const auto t = NumericalSemigroup::from_generators({7, 5, 5, 12, 14, 18});
  EXPECT_EQ(gens_of(t), (std::vector<Int>{5, 7, 18}));
}

TEST(FromGeneratorsTest, Errors) {
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::InvalidArgument;
  };
  EXPECT_EQ(kind_of([] { NumericalSemigroup::from_generators(std::span<const Int>{}); }),
            ErrorKind::EmptyInput);
  EXPECT_EQ(kind_of([] { NumericalSemigroup::from_generators({4, 6}); }),
            ErrorKind::NonCoprimeGenerators);
  EXPECT_EQ(kind_of([] { NumericalSemigroup::from_generators({0, 3}); }),
            ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { NumericalSemigroup::from_generators({-2, 3}); }),
            ErrorKind::InvalidArgument);
}

TEST(IsMemberTest, Examples) {
  const auto s = NumericalSemigroup::from_generators({5, 7, 18});
  EXPECT_FALSE(s.is_member(16));
  EXPECT_TRUE(s.is_member(117));
  EXPECT_FALSE(s.is_member(-3));
  EXPECT_TRUE(is_member(s, 17));
}

TEST(FromGapsTest, RoundTripAndRejection) {
  const auto s = NumericalSemigroup::from_gaps(
      std::vector<Int>{1, 2, 3, 4, 6, 8, 9, 11, 13, 16});
  EXPECT_EQ(s, NumericalSemigroup::from_generators({5, 7, 18}));
  EXPECT_EQ(gens_of(s), (std::vector<Int>{5, 7, 18}));
  EXPECT_EQ(s.genus(), 10);
  // 2 and 3 members but 5 a gap.
  EXPECT_THROW(NumericalSemigroup::from_gaps(std::vector<Int>{1, 5}), Error);
  EXPECT_EQ(NumericalSemigroup::from_gaps(std::vector<Int>{}),
            NumericalSemigroup::full());
}

TEST(TwoGenTest, MembershipExamples) {
  const auto s = TwoGenSemigroup::make(5, 7);
  EXPECT_EQ(s.c(), 3);  // 7 * 3 = 21 = 1 mod 5
  EXPECT_TRUE(is_member_two_gen(s, 12));
  EXPECT_FALSE(is_member_two_gen(s, 23));
  EXPECT_TRUE(is_member_two_gen(s, 24));
  EXPECT_FALSE(is_member_two_gen(s, -1));
  EXPECT_TRUE(is_member_two_gen(s, 0));
}

TEST(TwoGenTest, RepresentationExamples) {
  const auto s = TwoGenSemigroup::make(5, 7);
  EXPECT_EQ(unique_representation(s, 0), (Representation{0, 0}));
  EXPECT_EQ(unique_representation(s, 24), (Representation{2, 2}));
  EXPECT_FALSE(unique_representation(s, 23).has_value());
  EXPECT_FALSE(unique_representation(s, -7).has_value());
}

TEST(TwoGenTest, RejectsInvalidPairs) {
  EXPECT_THROW(TwoGenSemigroup::make(1, 3), Error);
  EXPECT_THROW(TwoGenSemigroup::make(5, 5), Error);
  EXPECT_THROW(TwoGenSemigroup::make(7, 5), Error);
  EXPECT_THROW(TwoGenSemigroup::make(4, 6), Error);
  EXPECT_FALSE(
      TwoGenSemigroup::from(NumericalSemigroup::from_generators({5, 7, 18})));
  const auto t =
      TwoGenSemigroup::from(NumericalSemigroup::from_generators({7, 5, 12}));
  ASSERT_TRUE(t);
  EXPECT_EQ(t->a(), 5);
  EXPECT_EQ(t->b(), 7);
}

TEST(ConsecutiveTest, Examples) {
  EXPECT_FALSE(is_member_consecutive(3, 5));
  EXPECT_TRUE(is_member_consecutive(3, 6));
  EXPECT_FALSE(is_member_consecutive(2, 1));
  EXPECT_FALSE(is_member_consecutive(4, -4));
  EXPECT_THROW(is_member_consecutive(1, 4), Error);
}

// Fast path, bitmap path, and the double-loop oracle agree everywhere below
// a*b (everything from (a-1)(b-1) on is a member anyway).
TEST(TwoGenProperty, MembershipAgreesWithBitmapAndOracle) {
  for (Int a = 2; a <= 40; ++a) {
    for (Int b = a + 1; b <= 40; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const auto fast = TwoGenSemigroup::make(a, b);
      const auto general = NumericalSemigroup::from_generators({a, b});
      for (Int i = 0; i < a * b; ++i) {
        const bool expected = oracle::two_gen_member(a, b, i);
        ASSERT_EQ(fast.is_member(i), expected) << a << "," << b << " i=" << i;
        ASSERT_EQ(general.is_member(i), expected) << a << "," << b << " i=" << i;
      }
    }
  }
}

TEST(TwoGenProperty, ConsecutiveMatchesFastPath) {
  for (Int a = 2; a <= 40; ++a) {
    const auto s = TwoGenSemigroup::make(a, a + 1);
    for (Int i = 0; i < a * (a + 1); ++i)
      ASSERT_EQ(is_member_consecutive(a, i), s.is_member(i)) << a << " " << i;
  }
}

TEST(TwoGenProperty, GenusFormula) {
  for (Int a = 2; a <= 40; ++a) {
    for (Int b = a + 1; b <= 40; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const auto s = NumericalSemigroup::from_generators({a, b});
      EXPECT_EQ(s.genus(), (a - 1) * (b - 1) / 2);
      EXPECT_EQ(s.genus(), TwoGenSemigroup::make(a, b).genus());
      EXPECT_EQ(s.conductor(), (a - 1) * (b - 1));
    }
  }
}

TEST(TwoGenProperty, RepresentationIsUnique) {
  for (Int a = 2; a <= 25; ++a) {
    for (Int b = a + 1; b <= 30; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const auto s = TwoGenSemigroup::make(a, b);
      for (Int i = 0; i < a * b + b; ++i) {
        const auto rep = s.representation(i);
        const auto all = oracle::two_gen_representations(a, b, i);
        if (!rep) {
          EXPECT_TRUE(all.empty()) << a << "," << b << " i=" << i;
          continue;
        }
        EXPECT_EQ(rep->m * a + rep->n * b, i);
        EXPECT_GE(rep->m, 0);
        EXPECT_GE(rep->n, 0);
        EXPECT_LE(rep->n, a - 1);
        ASSERT_EQ(all.size(), 1u) << a << "," << b << " i=" << i;
        EXPECT_EQ(all[0].first, rep->m);
        EXPECT_EQ(all[0].second, rep->n);
      }
    }
  }
}

// Random generating sets: every structural invariant of the canonical form,
// checked against explicit sums.
TEST(SemigroupProperty, CanonicalFormInvariants) {
  std::mt19937_64 rng(20240611);
  int built = 0;
  while (built < 300) {
    std::uniform_int_distribution<Int> count(1, 5);
    std::uniform_int_distribution<Int> value(2, 40);
    std::vector<Int> gens(static_cast<std::size_t>(count(rng)));
    for (auto& g : gens) g = value(rng);
    Int g = 0;
    for (Int x : gens) g = std::gcd(g, x);
    if (g != 1) {
      EXPECT_THROW(NumericalSemigroup::from_generators(gens), Error);
      continue;
    }
    ++built;
    const auto s = NumericalSemigroup::from_generators(gens);
    const Int c = s.conductor();
    const Int max_gen = *std::max_element(gens.begin(), gens.end());
    const auto sums = oracle::sums_below(gens, c + max_gen + 1);

    // Membership matches explicit sums on [0, c + max_gen].
    for (Int i = 0; i <= c + max_gen; ++i)
      ASSERT_EQ(s.is_member(i), sums.count(i) > 0) << s.to_string() << " i=" << i;
    // Conductor: c - 1 is a gap, everything from c on is a member.
    EXPECT_TRUE(s.is_member(0));
    if (c > 0) { EXPECT_FALSE(sums.count(c - 1)); }
    // Genus counts unset bits.
    const auto& bits = s.member_bitmap();
    EXPECT_EQ(s.genus(), std::count(bits.begin(), bits.end(), false));
    // Minimal generators re-derived from membership.
    EXPECT_EQ(s.min_generators(),
              oracle::minimal_generators(
                  [&](Int x) { return sums.count(x) > 0; }, c + max_gen + 1));
    Int gg = 0;
    for (Int x : s.min_generators()) gg = std::gcd(gg, x);
    EXPECT_EQ(gg, 1);
    // Closure inside the window.
    for (Int x = 0; x < c; ++x)
      for (Int y = x; x + y < c; ++y)
        if (s.is_member(x) && s.is_member(y)) { ASSERT_TRUE(s.is_member(x + y)); }
    // Canonical: rebuilding from the minimal generators or the gaps is equal.
    EXPECT_EQ(NumericalSemigroup::from_generators(s.min_generators()), s);
    EXPECT_EQ(NumericalSemigroup::from_gaps(s.gaps()), s);
  }
}

TEST(SemigroupTest, LargeTwoGeneratorWindowStillBuilds) {
  const auto s = NumericalSemigroup::from_generators({101, 1009});
  EXPECT_EQ(s.genus(), 100 * 1008 / 2);
  EXPECT_EQ(s.conductor(), 100 * 1008);
}

}  // namespace
}  // namespace nsg
