#ifndef NSG_SEMIGROUP_HPP
#define NSG_SEMIGROUP_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nsg/arith.hpp"
#include "nsg/error.hpp"

namespace nsg {

namespace detail {
struct SemigroupAccess;
}

/// A numerical semigroup: a cofinite additive submonoid of the non-negative
/// integers, stored canonically by its minimal generators and the membership
/// bitmap of [0, conductor).
///
/// Values are immutable after construction; two semigroups compare equal iff
/// they contain the same integers.
class NumericalSemigroup {
 public:
  // Closure windows larger than this are refused with ResourceLimit.
  static constexpr Int kMaxWindow = Int{1} << 28;

  /// Canonicalizes an arbitrary generating set (order, duplicates and
  /// redundant generators are all accepted). Throws EmptyInput,
  /// InvalidArgument for non-positive entries, NonCoprimeGenerators when the
  /// gcd exceeds 1.
  static NumericalSemigroup from_generators(std::span<const Int> gens);

  static NumericalSemigroup from_generators(std::initializer_list<Int> gens) {
    return from_generators(std::span<const Int>(gens.begin(), gens.size()));
  }

  /// Builds the semigroup whose complement is exactly `gaps`. Throws
  /// InvalidArgument unless the complement is closed under addition.
  static NumericalSemigroup from_gaps(std::span<const Int> gaps);

  /// The full semigroup of all non-negative integers.
  static NumericalSemigroup full() {
    return NumericalSemigroup({}, {1}, 0);
  }

  const std::vector<Int>& min_generators() const noexcept { return gens_; }
  std::size_t embedding_dimension() const noexcept { return gens_.size(); }
  Int multiplicity() const noexcept { return gens_.front(); }
  Int conductor() const noexcept { return static_cast<Int>(members_.size()); }
  Int frobenius() const noexcept { return conductor() - 1; }
  Int genus() const noexcept { return genus_; }
  const std::vector<bool>& member_bitmap() const noexcept { return members_; }

  bool is_member(Int x) const noexcept {
    if (x < 0) return false;
    if (x >= conductor()) return true;
    return members_[static_cast<std::size_t>(x)];
  }

  std::vector<Int> gaps() const {
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(genus_));
    for (Int i = 0; i < conductor(); ++i)
      if (!members_[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
  }

  /// Members below `limit`, ascending.
  std::vector<Int> members_below(Int limit) const {
    std::vector<Int> out;
    for (Int i = 0; i < limit; ++i)
      if (is_member(i)) out.push_back(i);
    return out;
  }

  std::string to_string() const {
    std::string s = "<";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(gens_[i]);
    }
    return s + ">";
  }

  friend bool operator==(const NumericalSemigroup& a,
                         const NumericalSemigroup& b) {
    return a.members_ == b.members_;
  }

 private:
  friend struct detail::SemigroupAccess;

  NumericalSemigroup(std::vector<bool> members, std::vector<Int> gens,
                     Int genus)
      : members_(std::move(members)), gens_(std::move(gens)), genus_(genus) {}

  std::vector<bool> members_;  // length == conductor
  std::vector<Int> gens_;
  Int genus_ = 0;
};

namespace detail {
// Trusted construction for the enumerator, which already knows the minimal
// generators of every node.
struct SemigroupAccess {
  static NumericalSemigroup make(std::vector<bool> members,
                                 std::vector<Int> gens, Int genus) {
    return NumericalSemigroup(std::move(members), std::move(gens), genus);
  }
};
}  // namespace detail

inline NumericalSemigroup NumericalSemigroup::from_generators(
    std::span<const Int> input) {
  if (input.empty())
    throw Error(ErrorKind::EmptyInput, "generator list is empty");
  std::vector<Int> gens(input.begin(), input.end());
  Int g = 0;
  for (Int x : gens) {
    if (x <= 0)
      throw Error(ErrorKind::InvalidArgument,
                  "generators must be positive, got " + std::to_string(x));
    g = std::gcd(g, x);
  }
  if (g != 1)
    throw Error(ErrorKind::NonCoprimeGenerators,
                "generators have gcd " + std::to_string(g) +
                    ", the complement would be infinite");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.front() == 1) return full();

  const Int smallest = gens.front();
  const Int largest = gens.back();
  // Schur: Frobenius <= (a1-1)(al-1) - 1 for any gcd-1 set, so a run of
  // `smallest` consecutive members starts by (a1-1)(al-1) and ends before
  // this bound.
  const Int bound =
      checked_add(checked_mul(smallest - 1, largest - 1), largest);
  const Int window = std::min(bound, kMaxWindow);

  std::vector<bool> members;
  members.reserve(static_cast<std::size_t>(std::min<Int>(window, 1 << 16)));
  members.push_back(true);
  Int run = 1;
  Int conductor = -1;
  for (Int x = 1; x <= window; ++x) {
    bool in = false;
    for (Int gen : gens) {
      if (gen > x) break;
      if (members[static_cast<std::size_t>(x - gen)]) {
        in = true;
        break;
      }
    }
    members.push_back(in);
    run = in ? run + 1 : 0;
    if (run == smallest) {
      conductor = x - smallest + 1;
      break;
    }
  }
  if (conductor < 0)
    throw ResourceLimitError("membership window exceeds " +
                             std::to_string(kMaxWindow) + " integers");
  members.resize(static_cast<std::size_t>(conductor));
  const Int genus = static_cast<Int>(
      std::count(members.begin(), members.end(), false));

  NumericalSemigroup tmp(std::move(members), {}, genus);
  // A generator is redundant iff removing a smaller generator from it leaves
  // a member.
  std::vector<Int> minimal;
  for (Int gen : gens) {
    bool redundant = false;
    for (Int other : gens) {
      if (other >= gen) break;
      if (tmp.is_member(gen - other)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(gen);
  }
  tmp.gens_ = std::move(minimal);
  return tmp;
}

inline NumericalSemigroup NumericalSemigroup::from_gaps(
    std::span<const Int> input) {
  std::vector<Int> gaps(input.begin(), input.end());
  std::sort(gaps.begin(), gaps.end());
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
  if (gaps.empty()) return full();
  if (gaps.front() <= 0)
    throw Error(ErrorKind::InvalidArgument, "gaps must be positive");
  const Int conductor = gaps.back() + 1;
  if (conductor > kMaxWindow) throw ResourceLimitError("gap set too large");

  std::vector<bool> members(static_cast<std::size_t>(conductor), true);
  for (Int gap : gaps) members[static_cast<std::size_t>(gap)] = false;
  NumericalSemigroup tmp(std::move(members), {}, static_cast<Int>(gaps.size()));

  for (Int x = 1; x < conductor; ++x) {
    if (!tmp.is_member(x)) continue;
    for (Int y = x; x + y < conductor; ++y) {
      if (tmp.is_member(y) && !tmp.is_member(x + y))
        throw Error(ErrorKind::InvalidArgument,
                    "complement of the gap set is not closed: " +
                        std::to_string(x) + " + " + std::to_string(y) +
                        " is a gap");
    }
  }
  // Every minimal generator lies in [m, conductor + m).
  const Int m = [&] {
    Int i = 1;
    while (!tmp.is_member(i)) ++i;
    return i;
  }();
  std::vector<Int> gens;
  for (Int x = m; x < conductor + m; ++x) {
    if (!tmp.is_member(x)) continue;
    bool decomposable = false;
    for (Int y = m; 2 * y <= x; ++y) {
      if (tmp.is_member(y) && tmp.is_member(x - y)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) gens.push_back(x);
  }
  tmp.gens_ = std::move(gens);
  return tmp;
}

inline bool is_member(const NumericalSemigroup& s, Int x) noexcept {
  return s.is_member(x);
}

/// Unique decomposition i = m*a + n*b with m >= 0 and 0 <= n <= a-1.
struct Representation {
  Int m;
  Int n;
  friend bool operator==(const Representation&, const Representation&) = default;
};

/// The semigroup <a, b> with coprime 2 <= a < b, carrying the inverse of b
/// modulo a so that membership is a constant-time test.
class TwoGenSemigroup {
 public:
  static TwoGenSemigroup make(Int a, Int b) {
    if (a < 2 || b <= a)
      throw Error(ErrorKind::InvalidArgument,
                  "two-generator semigroup needs 2 <= a < b, got a=" +
                      std::to_string(a) + " b=" + std::to_string(b));
    if (std::gcd(a, b) != 1)
      throw Error(ErrorKind::NonCoprimeGenerators,
                  "gcd(" + std::to_string(a) + ", " + std::to_string(b) +
                      ") != 1");
    return TwoGenSemigroup(a, b, mod_inverse(b, a));
  }

  /// Succeeds iff `s` has exactly two minimal generators.
  static std::optional<TwoGenSemigroup> from(const NumericalSemigroup& s) {
    const auto& g = s.min_generators();
    if (g.size() != 2) return std::nullopt;
    return make(g[0], g[1]);
  }

  Int a() const noexcept { return a_; }
  Int b() const noexcept { return b_; }
  /// Inverse of b modulo a.
  Int c() const noexcept { return c_; }

  Int genus() const { return checked_mul(a_ - 1, b_ - 1) / 2; }

  /// i is a member iff b * ((i*c) mod a) <= i.
  bool is_member(Int i) const {
    if (i < 0) return false;
    return checked_mul(b_, coefficient_of_b(i)) <= i;
  }

  std::optional<Representation> representation(Int i) const {
    if (i < 0) return std::nullopt;
    const Int n = coefficient_of_b(i);
    const Int nb = checked_mul(n, b_);
    if (nb > i) return std::nullopt;
    return Representation{(i - nb) / a_, n};
  }

  NumericalSemigroup to_semigroup() const {
    return NumericalSemigroup::from_generators({a_, b_});
  }

 private:
  TwoGenSemigroup(Int a, Int b, Int c) : a_(a), b_(b), c_(c) {}

  Int coefficient_of_b(Int i) const {
    return mod(checked_mul(mod(i, a_), c_), a_);
  }

  Int a_;
  Int b_;
  Int c_;
};

inline bool is_member_two_gen(const TwoGenSemigroup& s, Int i) {
  return s.is_member(i);
}

inline std::optional<Representation> unique_representation(
    const TwoGenSemigroup& s, Int i) {
  return s.representation(i);
}

/// Membership in <a, a+1>: the remainder of i by a is at most its quotient.
inline bool is_member_consecutive(Int a, Int i) {
  if (a < 2)
    throw Error(ErrorKind::InvalidArgument, "a must be at least 2");
  if (i < 0) return false;
  return i % a <= i / a;
}

}  // namespace nsg

#endif  // NSG_SEMIGROUP_HPP
