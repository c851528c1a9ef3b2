#ifndef NSG_BOUNDS_HPP
#define NSG_BOUNDS_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nsg/arith.hpp"
#include "nsg/error.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

enum class GmMethod { GenericSetDifference, TwoGenSum, TwoGenClosed };

/// Which route bound_report takes to the Geil-Matsumoto value. Auto uses the
/// closed formula for two generators and the set difference otherwise.
enum class MethodChoice { Auto, Generic, Sum, Closed };

inline const char* to_string(GmMethod m) {
  switch (m) {
    case GmMethod::GenericSetDifference: return "generic";
    case GmMethod::TwoGenSum: return "sum";
    case GmMethod::TwoGenClosed: return "closed";
  }
  return "?";
}

struct BoundReport {
  Int q = 0;
  Int lewittes = 0;
  Int serre = 0;
  Int gm = 0;
  GmMethod gm_method = GmMethod::GenericSetDifference;
  bool coincide = false;
  bool sufficient_condition_holds = false;
  // Multiplicity 1, i.e. the full semigroup: not a Weierstrass semigroup of
  // positive genus, reported anyway.
  bool trivial_multiplicity = false;
};

/// Generator indices are 0-based positions in min_generators().
struct GenClassification {
  std::vector<Int> gm_generators;
  std::vector<Int> non_gm_generators;
  std::vector<std::size_t> reduced_index_set;
};

namespace detail {

inline void require_q(Int q) {
  if (q < 1)
    throw Error(ErrorKind::InvalidArgument,
                "q must be positive, got " + std::to_string(q));
}

inline std::vector<std::size_t> all_indices(const NumericalSemigroup& s) {
  std::vector<std::size_t> idx(s.embedding_dimension());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return idx;
}

inline std::vector<Int> shifts_for(const NumericalSemigroup& s, Int q,
                                   std::span<const std::size_t> index_set) {
  if (index_set.empty())
    throw Error(ErrorKind::EmptyIndexSet, "index set is empty");
  const auto& gens = s.min_generators();
  std::vector<Int> shifts;
  shifts.reserve(index_set.size());
  for (std::size_t i : index_set) {
    if (i >= gens.size())
      throw Error(ErrorKind::InvalidArgument,
                  "generator index " + std::to_string(i) + " out of range");
    shifts.push_back(checked_mul(q, gens[i]));
  }
  std::sort(shifts.begin(), shifts.end());
  shifts.erase(std::unique(shifts.begin(), shifts.end()), shifts.end());
  return shifts;
}

// Visits the members of S minus the union of (shift + S). For i at or beyond
// min(shift) + conductor, i - min(shift) >= conductor is a member, so i lies
// in the union; the scan stops there.
template <class F>
void for_each_surviving(const NumericalSemigroup& s,
                        std::span<const Int> shifts, F&& f) {
  const Int limit = checked_add(shifts.front(), s.conductor());
  for (Int i = 0; i < limit; ++i) {
    if (!s.is_member(i)) continue;
    bool covered = false;
    for (Int shift : shifts) {
      if (shift > i) break;
      if (s.is_member(i - shift)) {
        covered = true;
        break;
      }
    }
    if (!covered) f(i);
  }
}

}  // namespace detail

/// q * multiplicity + 1.
inline Int lewittes_bound(const NumericalSemigroup& s, Int q) {
  detail::require_q(q);
  return checked_add(checked_mul(q, s.multiplicity()), 1);
}

/// q + 1 + g * floor(2 sqrt(q)), with floor(2 sqrt(q)) = isqrt(4q).
inline Int serre_bound(Int genus, Int q) {
  detail::require_q(q);
  if (genus < 0)
    throw Error(ErrorKind::InvalidArgument, "genus must be non-negative");
  const Int two_sqrt_q = isqrt(checked_mul(4, q));
  return checked_add(checked_add(q, 1), checked_mul(genus, two_sqrt_q));
}

/// The surviving set S \ U_{i in I} (q*lambda_i + S), ascending. All minimal
/// generators when `index_set` is absent.
inline std::vector<Int> gm_set(
    const NumericalSemigroup& s, Int q,
    std::optional<std::span<const std::size_t>> index_set = std::nullopt) {
  detail::require_q(q);
  const auto all = detail::all_indices(s);
  const auto shifts = detail::shifts_for(
      s, q, index_set ? *index_set : std::span<const std::size_t>(all));
  std::vector<Int> out;
  detail::for_each_surviving(s, shifts, [&](Int i) { out.push_back(i); });
  return out;
}

/// Geil-Matsumoto bound by direct set difference: one plus the number of
/// members i with i - q*lambda_j outside S for every minimal generator.
inline Int gm_generic(const NumericalSemigroup& s, Int q) {
  detail::require_q(q);
  const auto all = detail::all_indices(s);
  const auto shifts = detail::shifts_for(s, q, all);
  Int count = 0;
  detail::for_each_surviving(s, shifts, [&](Int) { ++count; });
  return count + 1;
}

/// 1 + sum_{n=0}^{a-1} min(q, ceil((q-n)/a) * b).
inline Int gm_two_gen_sum(const TwoGenSemigroup& s, Int q) {
  detail::require_q(q);
  Int total = 1;
  for (Int n = 0; n < s.a(); ++n) {
    const Int term = checked_mul(ceil_div(q - n, s.a()), s.b());
    total = checked_add(total, std::min(q, term));
  }
  return total;
}

/// Closed form of the two-generator Geil-Matsumoto bound.
inline Int gm_two_gen_closed(const TwoGenSemigroup& s, Int q) {
  detail::require_q(q);
  const Int a = s.a();
  const Int b = s.b();
  const Int fl = q / a;
  const Int r = q % a;
  if (q <= checked_mul(fl, b)) return checked_add(checked_mul(q, a), 1);
  // ceil(q/a) * b >= (q/a) * b > q because b > a, so this always holds and
  // the "q > ceil(q/a) * b" case never occurs.
  if (q > checked_mul(ceil_div(q, a), b))
    throw std::logic_error("gm_two_gen_closed: unreachable case for a < b");
  return checked_add(
      checked_add(checked_mul(r, q), 1),
      checked_mul(checked_mul(a - r, fl), b));
}

/// True iff q * (lambda_i - lambda_1) is a member for every minimal generator
/// lambda_i other than the multiplicity.
inline bool coincidence_criterion(const NumericalSemigroup& s, Int q) {
  detail::require_q(q);
  const auto& gens = s.min_generators();
  for (std::size_t i = 1; i < gens.size(); ++i) {
    if (!s.is_member(checked_mul(q, gens[i] - gens[0]))) return false;
  }
  return true;
}

/// q <= floor(q / lambda_1) * lambda_2.
inline bool sufficient_condition(const NumericalSemigroup& s, Int q) {
  detail::require_q(q);
  const auto& gens = s.min_generators();
  if (gens.size() < 2)
    throw Error(ErrorKind::SingleGenerator,
                "sufficient condition needs two minimal generators");
  return q <= checked_mul(q / gens[0], gens[1]);
}

/// With d = gcd(lambda1, lambda_i): q*d <= floor(q*d / lambda1) * lambda_i,
/// which holds iff q * (lambda_i - lambda1) lies in d * <lambda1/d, lambda_i/d>.
inline bool lemma_qd_condition(Int lambda1, Int lambda_i, Int q) {
  detail::require_q(q);
  if (lambda1 < 1 || lambda_i <= lambda1)
    throw Error(ErrorKind::InvalidArgument,
                "need 1 <= lambda1 < lambda_i");
  const Int qd = checked_mul(q, std::gcd(lambda1, lambda_i));
  return qd <= checked_mul(qd / lambda1, lambda_i);
}

/// Splits the minimal generators at the 2*lambda_1 - 1 cutoff. When
/// lambda_1 < q the reduced index set keeps the multiplicity plus every
/// generator strictly below q / floor(q / lambda_1); otherwise it is all
/// indices.
inline GenClassification classify_generators(const NumericalSemigroup& s,
                                             Int q) {
  detail::require_q(q);
  const auto& gens = s.min_generators();
  const Int lambda1 = gens.front();
  const Int cutoff = 2 * lambda1 - 1;
  GenClassification out;
  for (Int g : gens) {
    (g < cutoff ? out.gm_generators : out.non_gm_generators).push_back(g);
  }
  if (lambda1 < q) {
    const Int fl = q / lambda1;
    out.reduced_index_set.push_back(0);
    for (std::size_t j = 1; j < gens.size(); ++j) {
      if (checked_mul(gens[j], fl) < q) out.reduced_index_set.push_back(j);
    }
  } else {
    out.reduced_index_set = detail::all_indices(s);
  }
  return out;
}

/// Indices of the generators below 2*lambda_1 - 1, plus index 0 so the set is
/// never empty.
inline std::vector<std::size_t> gm_generator_indices(
    const NumericalSemigroup& s) {
  const auto& gens = s.min_generators();
  std::vector<std::size_t> idx{0};
  for (std::size_t j = 1; j < gens.size(); ++j)
    if (gens[j] < 2 * gens[0] - 1) idx.push_back(j);
  return idx;
}

/// For every index i outside I there is j in I with q*(lambda_i - lambda_j)
/// a member. Equivalent to gm_set(S, q, I) == gm_set(S, q).
inline bool verify_index_reduction(const NumericalSemigroup& s, Int q,
                                   std::span<const std::size_t> index_set) {
  detail::require_q(q);
  if (index_set.empty())
    throw Error(ErrorKind::EmptyIndexSet, "index set is empty");
  const auto& gens = s.min_generators();
  std::vector<bool> in_set(gens.size(), false);
  for (std::size_t j : index_set) {
    if (j >= gens.size())
      throw Error(ErrorKind::InvalidArgument,
                  "generator index " + std::to_string(j) + " out of range");
    in_set[j] = true;
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (in_set[i]) continue;
    bool dominated = false;
    for (std::size_t j : index_set) {
      if (s.is_member(checked_mul(q, gens[i] - gens[j]))) {
        dominated = true;
        break;
      }
    }
    if (!dominated) return false;
  }
  return true;
}

struct ReportOptions {
  MethodChoice method = MethodChoice::Auto;
  // Recompute GM by full set scan and throw std::logic_error on any
  // disagreement with the route actually used.
  bool verify = false;
};

inline BoundReport bound_report(const NumericalSemigroup& s, Int q,
                                ReportOptions opts = {}) {
  BoundReport r;
  r.q = q;
  r.lewittes = lewittes_bound(s, q);
  r.serre = serre_bound(s.genus(), q);
  r.trivial_multiplicity = s.multiplicity() == 1;
  r.coincide = coincidence_criterion(s, q);
  r.sufficient_condition_holds =
      s.embedding_dimension() >= 2 && sufficient_condition(s, q);

  const auto two_gen = TwoGenSemigroup::from(s);
  MethodChoice method = opts.method;
  if (method == MethodChoice::Auto)
    method = two_gen ? MethodChoice::Closed : MethodChoice::Generic;
  if ((method == MethodChoice::Sum || method == MethodChoice::Closed) &&
      !two_gen)
    throw Error(ErrorKind::InvalidArgument,
                "the sum and closed formulas need exactly two minimal "
                "generators, " + s.to_string() + " has " +
                    std::to_string(s.embedding_dimension()));

  switch (method) {
    case MethodChoice::Sum:
      r.gm_method = GmMethod::TwoGenSum;
      r.gm = gm_two_gen_sum(*two_gen, q);
      break;
    case MethodChoice::Closed:
      r.gm_method = GmMethod::TwoGenClosed;
      r.gm = gm_two_gen_closed(*two_gen, q);
      break;
    default:
      r.gm_method = GmMethod::GenericSetDifference;
      // Coincidence means the surviving set is exactly S \ (q*lambda_1 + S),
      // which has q*lambda_1 elements; skip the scan unless asked for it.
      if (r.coincide && opts.method == MethodChoice::Auto)
        r.gm = r.lewittes;
      else
        r.gm = gm_generic(s, q);
      break;
  }

  if (opts.verify) {
    const Int scanned = gm_generic(s, q);
    if (scanned != r.gm || r.coincide != (scanned == r.lewittes))
      throw std::logic_error("bound_report: " + std::string(to_string(r.gm_method)) +
                             " route gave " + std::to_string(r.gm) +
                             ", full scan gave " + std::to_string(scanned) +
                             " for " + s.to_string() + ", q=" +
                             std::to_string(q));
  }
  return r;
}

}  // namespace nsg

#endif  // NSG_BOUNDS_HPP
