#include <numeric>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "nsg/bounds.hpp"
#include "oracles.hpp"

namespace nsg {
namespace {

const std::vector<Int> kQs{2,  3,  4,  5,  7,  8,  9,  11,  13,
                           16, 25, 27, 32, 49, 64, 81, 128, 256};

NumericalSemigroup sg(std::initializer_list<Int> gens) {
  return NumericalSemigroup::from_generators(gens);
}

std::vector<NumericalSemigroup> population(Int genus) {
  std::vector<NumericalSemigroup> out;
  for (const auto& gaps : oracle::gap_sets_of_genus(genus))
    out.push_back(NumericalSemigroup::from_gaps(gaps));
  return out;
}

std::vector<Int> expected_5_7_18_q9() {
  std::vector<Int> v{0, 5, 7, 10, 12, 14, 15};
  for (Int i = 17; i <= 44; ++i) v.push_back(i);
  for (Int i : {46, 47, 48, 49, 51, 53, 54, 56, 58, 61}) v.push_back(i);
  return v;
}

TEST(LewittesTest, Examples) {
  EXPECT_EQ(lewittes_bound(sg({5, 7, 18}), 9), 46);
  EXPECT_EQ(lewittes_bound(sg({2, 3}), 2), 5);
  EXPECT_EQ(lewittes_bound(sg({6, 7}), 256), 1537);
  EXPECT_THROW(lewittes_bound(sg({2, 3}), 0), Error);
}

TEST(SerreTest, Examples) {
  EXPECT_EQ(serre_bound(0, 9), 10);
  EXPECT_EQ(serre_bound(3, 2), 9);
  EXPECT_EQ(serre_bound(10, 16), 97);
  // floor(2 sqrt(q)) at perfect and non-perfect squares.
  EXPECT_EQ(serre_bound(1, 256), 256 + 1 + 32);
  EXPECT_EQ(serre_bound(1, 3), 3 + 1 + 3);
  EXPECT_THROW(serre_bound(-1, 3), Error);
}

TEST(GmGenericTest, Examples) {
  EXPECT_EQ(gm_generic(sg({5, 7, 18}), 9), 46);
  EXPECT_EQ(gm_generic(sg({2, 3}), 2), 5);
  EXPECT_EQ(gm_generic(sg({5, 7}), 9), 44);
}

TEST(GmSetTest, Examples) {
  const auto s = sg({5, 7, 18});
  const auto expected = expected_5_7_18_q9();
  ASSERT_EQ(expected.size(), 45u);
  EXPECT_EQ(gm_set(s, 9), expected);
  const std::vector<std::size_t> first{0};
  EXPECT_EQ(gm_set(s, 9, first), expected);
  EXPECT_EQ(gm_set(sg({2, 3}), 2, first), (std::vector<Int>{0, 2, 3, 5}));
  const std::vector<std::size_t> none;
  try {
    gm_set(s, 9, none);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyIndexSet);
  }
  const std::vector<std::size_t> bad{7};
  EXPECT_THROW(gm_set(s, 9, bad), Error);
}

TEST(TwoGenFormulaTest, Examples) {
  const auto s57 = TwoGenSemigroup::make(5, 7);
  const auto s23 = TwoGenSemigroup::make(2, 3);
  const auto s45 = TwoGenSemigroup::make(4, 5);
  EXPECT_EQ(gm_two_gen_sum(s57, 9), 44);
  EXPECT_EQ(gm_two_gen_sum(s23, 2), 5);
  EXPECT_EQ(gm_two_gen_sum(s45, 7), 27);
  EXPECT_EQ(gm_two_gen_closed(s57, 9), 44);
  EXPECT_EQ(gm_two_gen_closed(s23, 2), 5);
  EXPECT_EQ(gm_two_gen_closed(s45, 7), 27);
}

TEST(TwoGenFormulaTest, QSmallerThanA) {
  // q < a: several (q - n) numerators are non-positive.
  const auto s = TwoGenSemigroup::make(7, 10);
  for (Int q = 1; q < 7; ++q) {
    EXPECT_EQ(gm_two_gen_sum(s, q), gm_generic(s.to_semigroup(), q)) << q;
    EXPECT_EQ(gm_two_gen_closed(s, q), gm_generic(s.to_semigroup(), q)) << q;
  }
}

// Closed form, summation, and set difference agree; the set difference in
// turn agrees with explicit set arithmetic on small cases.
TEST(TwoGenFormulaProperty, ThreeRoutesAgree) {
  for (Int a = 2; a <= 30; ++a) {
    for (Int b = a + 1; b <= 30; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const auto t = TwoGenSemigroup::make(a, b);
      const auto s = t.to_semigroup();
      for (Int q : kQs) {
        const Int generic = gm_generic(s, q);
        ASSERT_EQ(gm_two_gen_sum(t, q), generic) << a << "," << b << " q=" << q;
        ASSERT_EQ(gm_two_gen_closed(t, q), generic) << a << "," << b << " q=" << q;
      }
    }
  }
}

TEST(GmSetProperty, MatchesExplicitSetArithmetic) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Int> value(2, 14);
  std::uniform_int_distribution<Int> count(2, 4);
  int checked = 0;
  while (checked < 150) {
    std::vector<Int> gens(static_cast<std::size_t>(count(rng)));
    for (auto& g : gens) g = value(rng);
    Int g = 0;
    for (Int x : gens) g = std::gcd(g, x);
    if (g != 1) continue;
    ++checked;
    const auto s = NumericalSemigroup::from_generators(gens);
    for (Int q : {2, 3, 4, 5, 9}) {
      // The oracle unions over the generating set as given (possibly
      // redundant); that must equal the union over minimal generators.
      const auto expected =
          oracle::gm_set(gens, gens, q, oracle::gm_window(gens, q));
      ASSERT_EQ(gm_set(s, q), expected) << s.to_string() << " q=" << q;
      ASSERT_EQ(gm_generic(s, q), static_cast<Int>(expected.size()) + 1);
    }
  }
}

TEST(CoincidenceTest, Examples) {
  EXPECT_TRUE(coincidence_criterion(sg({5, 7, 18}), 9));
  EXPECT_FALSE(coincidence_criterion(sg({5, 7}), 9));
  EXPECT_TRUE(coincidence_criterion(sg({2, 3}), 2));
}

TEST(SufficientConditionTest, Examples) {
  EXPECT_FALSE(sufficient_condition(sg({5, 7, 18}), 9));
  EXPECT_TRUE(sufficient_condition(sg({2, 3}), 2));
  EXPECT_FALSE(sufficient_condition(sg({3, 4}), 2));
  try {
    sufficient_condition(NumericalSemigroup::full(), 3);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingleGenerator);
  }
}

TEST(LemmaQdTest, Examples) {
  EXPECT_FALSE(lemma_qd_condition(5, 7, 9));
  EXPECT_TRUE(lemma_qd_condition(4, 6, 5));
  EXPECT_TRUE(lemma_qd_condition(2, 3, 2));
  EXPECT_THROW(lemma_qd_condition(7, 5, 2), Error);
}

// The condition decides membership of q(li - l1) in d<l1/d, li/d>.
TEST(LemmaQdProperty, MatchesScaledTwoGeneratorMembership) {
  for (Int l1 = 2; l1 <= 20; ++l1) {
    for (Int li = l1 + 1; li <= 30; ++li) {
      const Int d = oracle::gcd(l1, li);
      for (Int q = 1; q <= 40; ++q) {
        const Int target = q * (li - l1);
        const bool expected =
            target % d == 0 &&
            (l1 / d == 1 || oracle::two_gen_member(l1 / d, li / d, target / d));
        ASSERT_EQ(lemma_qd_condition(l1, li, q), expected)
            << l1 << "," << li << " q=" << q;
      }
    }
  }
}

TEST(ClassifyTest, Examples) {
  auto c = classify_generators(sg({2, 5}), 7);
  EXPECT_EQ(c.gm_generators, std::vector<Int>{2});
  EXPECT_EQ(c.non_gm_generators, std::vector<Int>{5});

  c = classify_generators(sg({3, 4, 5}), 2);
  EXPECT_EQ(c.gm_generators, (std::vector<Int>{3, 4}));
  EXPECT_EQ(c.non_gm_generators, std::vector<Int>{5});
  // lambda1 >= q: all indices.
  EXPECT_EQ(c.reduced_index_set, (std::vector<std::size_t>{0, 1, 2}));

  c = classify_generators(sg({5, 7, 18}), 9);
  EXPECT_EQ(c.gm_generators, (std::vector<Int>{5, 7}));
  EXPECT_EQ(c.non_gm_generators, std::vector<Int>{18});
  // 9 / floor(9/5) = 9: generators below 9 are 5 and 7.
  EXPECT_EQ(c.reduced_index_set, (std::vector<std::size_t>{0, 1}));

  // lambda1 divides q: only the multiplicity is needed.
  c = classify_generators(sg({3, 4, 5}), 9);
  EXPECT_EQ(c.reduced_index_set, std::vector<std::size_t>{0});
  EXPECT_EQ(gm_set(sg({3, 4, 5}), 9, c.reduced_index_set),
            gm_set(sg({3, 4, 5}), 9));
}

TEST(VerifyIndexReductionTest, Examples) {
  const std::vector<std::size_t> first{0};
  EXPECT_TRUE(verify_index_reduction(sg({5, 7, 18}), 9, first));
  EXPECT_FALSE(verify_index_reduction(sg({5, 7}), 9, first));
  const std::vector<std::size_t> all{0, 1, 2, 3};
  EXPECT_TRUE(verify_index_reduction(sg({6, 7, 8, 9}), 4, all));
  const std::vector<std::size_t> none;
  EXPECT_THROW(verify_index_reduction(sg({5, 7}), 9, none), Error);
}

TEST(BoundReportTest, Examples) {
  auto r = bound_report(sg({5, 7, 18}), 9);
  EXPECT_EQ(r.lewittes, 46);
  EXPECT_EQ(r.gm, 46);
  EXPECT_TRUE(r.coincide);
  EXPECT_FALSE(r.sufficient_condition_holds);
  EXPECT_EQ(r.gm_method, GmMethod::GenericSetDifference);

  r = bound_report(sg({5, 7}), 9);
  EXPECT_EQ(r.lewittes, 46);
  EXPECT_EQ(r.gm, 44);
  EXPECT_FALSE(r.coincide);
  EXPECT_EQ(r.gm_method, GmMethod::TwoGenClosed);

  r = bound_report(sg({2, 3}), 2);
  EXPECT_EQ(r.lewittes, 5);
  EXPECT_EQ(r.gm, 5);
  EXPECT_EQ(r.serre, 5);  // genus 1: 2 + 1 + isqrt(8)
  EXPECT_TRUE(r.coincide);
}

TEST(BoundReportTest, MethodSelection) {
  ReportOptions sum{MethodChoice::Sum, true};
  EXPECT_EQ(bound_report(sg({5, 7}), 9, sum).gm_method, GmMethod::TwoGenSum);
  ReportOptions generic{MethodChoice::Generic, true};
  EXPECT_EQ(bound_report(sg({5, 7}), 9, generic).gm, 44);
  ReportOptions closed{MethodChoice::Closed, false};
  EXPECT_THROW(bound_report(sg({5, 7, 18}), 9, closed), Error);
  const auto full = bound_report(NumericalSemigroup::full(), 4);
  EXPECT_TRUE(full.trivial_multiplicity);
  EXPECT_EQ(full.gm, 5);
  EXPECT_EQ(full.lewittes, 5);
}

// Population-level properties on every semigroup of genus <= 8, drawn from
// the gap-subset oracle rather than the tree enumerator.
class PopulationTest : public ::testing::TestWithParam<Int> {};

TEST_P(PopulationTest, BoundIdentities) {
  const Int genus = GetParam();
  for (const auto& s : population(genus)) {
    const Int l1 = s.multiplicity();
    for (Int q : {2, 3, 4, 5, 9, 16}) {
      const std::vector<std::size_t> first{0};
      // |S \ (q l1 + S)| = q l1.
      ASSERT_EQ(static_cast<Int>(gm_set(s, q, first).size()), q * l1);

      const Int gm = gm_generic(s, q);
      const Int lew = lewittes_bound(s, q);
      ASSERT_LE(gm, lew);
      const bool crit = coincidence_criterion(s, q);
      ASSERT_EQ(crit, gm == lew) << s.to_string() << " q=" << q;
      if (s.is_member(q)) { ASSERT_TRUE(crit) << s.to_string() << " q=" << q; }
      if (s.embedding_dimension() >= 2 && sufficient_condition(s, q)) {
        ASSERT_TRUE(crit) << s.to_string() << " q=" << q;
      }
      if (const auto t = TwoGenSemigroup::from(s)) {
        ASSERT_EQ(crit, q <= (q / t->a()) * t->b());
      }

      const auto report = bound_report(s, q, {MethodChoice::Auto, true});
      ASSERT_EQ(report.gm, gm);
      ASSERT_EQ(report.coincide, crit);

      const auto all = gm_set(s, q);
      const auto cls = classify_generators(s, q);
      if (l1 < q) {
        ASSERT_TRUE(verify_index_reduction(s, q, cls.reduced_index_set));
        ASSERT_EQ(gm_set(s, q, cls.reduced_index_set), all) << s.to_string();
        const auto gm_idx = gm_generator_indices(s);
        ASSERT_TRUE(verify_index_reduction(s, q, gm_idx));
        ASSERT_EQ(gm_set(s, q, gm_idx), all) << s.to_string();
      }
      ASSERT_EQ(cls.gm_generators.size() + cls.non_gm_generators.size(),
                s.embedding_dimension());
      if (l1 >= 2) { ASSERT_EQ(cls.gm_generators.front(), l1); }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(GenusUpTo8, PopulationTest,
                         ::testing::Range<Int>(1, 9));

// The reduction criterion and the set equality agree on arbitrary index
// sets, not only on the ones the classification proposes.
TEST(IndexReductionProperty, CriterionMatchesSetEquality) {
  for (Int genus = 3; genus <= 7; ++genus) {
    for (const auto& s : population(genus)) {
      const std::size_t n = s.embedding_dimension();
      for (Int q : {2, 3, 7}) {
        const auto all = gm_set(s, q);
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
          std::vector<std::size_t> idx;
          for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i);
          ASSERT_EQ(verify_index_reduction(s, q, idx), gm_set(s, q, idx) == all)
              << s.to_string() << " q=" << q << " mask=" << mask;
        }
      }
    }
  }
}

TEST(SufficientConditionProperty, ConverseFailsOnKnownCounterexample) {
  const auto s = sg({5, 7, 18});
  EXPECT_TRUE(coincidence_criterion(s, 9));
  EXPECT_FALSE(sufficient_condition(s, 9));
  // 9 * (7 - 5) = 18 is outside <5, 7> but inside <5, 7, 18>.
  EXPECT_FALSE(TwoGenSemigroup::make(5, 7).is_member(18));
  EXPECT_TRUE(s.is_member(18));
}

}  // namespace
}  // namespace nsg
