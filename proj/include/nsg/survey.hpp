#ifndef NSG_SURVEY_HPP
#define NSG_SURVEY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "nsg/arith.hpp"
#include "nsg/bounds.hpp"
#include "nsg/enumeration.hpp"
#include "nsg/error.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

using u128 = unsigned __int128;

inline std::string to_decimal(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

/// Exact non-negative rational kept in lowest terms.
struct Fraction {
  u128 numerator = 0;
  u128 denominator = 1;

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

namespace detail {
inline u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline u128 mul128(u128 a, u128 b) {
  u128 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorKind::Overflow, "128-bit overflow in exact rational");
  return r;
}

inline Fraction reduce(u128 num, u128 den) {
  const u128 g = gcd128(num, den);
  return g == 0 ? Fraction{0, 1} : Fraction{num / g, den / g};
}
}  // namespace detail

/// scale * num / den with exactly two decimals, rounded half away from zero,
/// in integer arithmetic. num >= 0, den > 0.
inline std::string render_fixed2(u128 num, u128 den, u128 scale = 1) {
  if (den == 0)
    throw Error(ErrorKind::InvalidArgument, "denominator must be positive");
  const u128 scaled = detail::mul128(detail::mul128(num, scale), 100);
  u128 hundredths = scaled / den;
  if (2 * (scaled % den) >= den) ++hundredths;
  const auto frac = static_cast<unsigned>(hundredths % 100);
  return to_decimal(hundredths / 100) + "." + (frac < 10 ? "0" : "") +
         std::to_string(frac);
}

/// 100 * num / den with two decimals; 0 <= num <= den, den > 0.
inline std::string render_percent(std::uint64_t num, std::uint64_t den) {
  if (den == 0 || num > den)
    throw Error(ErrorKind::InvalidArgument,
                "render_percent needs 0 <= num <= den, den > 0");
  return render_fixed2(num, den, 100);
}

// ---------------------------------------------------------------------------
// Lewittes = Geil-Matsumoto coincidence table

struct QTally {
  Int q;
  std::uint64_t numerator;
  std::uint64_t denominator;
  std::string percent;
};

struct LgmTableRow {
  Int genus;
  std::uint64_t semigroups;
  std::vector<QTally> per_q_coincide;
  std::vector<QTally> per_q_sufficient;
};

struct SurveyOptions {
  EnumerationOptions enumeration;
};

namespace detail {
struct LgmCounts {
  std::uint64_t semigroups = 0;
  std::vector<std::uint64_t> coincide;
  std::vector<std::uint64_t> sufficient;

  void merge(const LgmCounts& o) {
    semigroups += o.semigroups;
    for (std::size_t i = 0; i < coincide.size(); ++i) {
      coincide[i] += o.coincide[i];
      sufficient[i] += o.sufficient[i];
    }
  }
};
}  // namespace detail

inline LgmTableRow build_lgm_row(Int genus, const std::vector<Int>& qs,
                                 const SurveyOptions& opts = {}) {
  if (qs.empty()) throw Error(ErrorKind::InvalidArgument, "q list is empty");
  for (Int q : qs) detail::require_q(q);
  detail::LgmCounts init;
  init.coincide.assign(qs.size(), 0);
  init.sufficient.assign(qs.size(), 0);
  const auto counts = fold_genus(
      genus, init,
      [&](detail::LgmCounts& acc, const NumericalSemigroup& s) {
        ++acc.semigroups;
        const bool two_plus = s.embedding_dimension() >= 2;
        for (std::size_t i = 0; i < qs.size(); ++i) {
          acc.coincide[i] += coincidence_criterion(s, qs[i]);
          acc.sufficient[i] += two_plus && sufficient_condition(s, qs[i]);
        }
      },
      [](detail::LgmCounts& total, const detail::LgmCounts& part) {
        total.merge(part);
      },
      opts.enumeration);

  LgmTableRow row{genus, counts.semigroups, {}, {}};
  for (std::size_t i = 0; i < qs.size(); ++i) {
    row.per_q_coincide.push_back(
        {qs[i], counts.coincide[i], counts.semigroups,
         render_percent(counts.coincide[i], counts.semigroups)});
    row.per_q_sufficient.push_back(
        {qs[i], counts.sufficient[i], counts.semigroups,
         render_percent(counts.sufficient[i], counts.semigroups)});
  }
  return row;
}

inline std::vector<LgmTableRow> build_lgm_table(Int genus_lo, Int genus_hi,
                                                const std::vector<Int>& qs,
                                                const SurveyOptions& opts = {}) {
  std::vector<LgmTableRow> rows;
  for (Int g = genus_lo; g <= genus_hi; ++g)
    rows.push_back(build_lgm_row(g, qs, opts));
  return rows;
}

// ---------------------------------------------------------------------------
// Geil-Matsumoto generator statistics

/// Number of minimal generators strictly below 2 * multiplicity - 1.
inline std::size_t count_gm_generators(const NumericalSemigroup& s) {
  const auto& gens = s.min_generators();
  const Int cutoff = 2 * gens.front() - 1;
  return static_cast<std::size_t>(
      std::lower_bound(gens.begin(), gens.end(), cutoff) - gens.begin());
}

struct GmGenTableRow {
  Int genus;
  std::uint64_t semigroups;
  std::uint64_t gm_gens;      // summed over the population
  std::uint64_t non_gm_gens;
  // non_gm_by_dimension[n] sums the non-GM generator counts of the
  // semigroups with exactly n minimal generators.
  std::vector<std::uint64_t> non_gm_by_dimension;
  // Mean over semigroups of non_gm / total generators.
  Fraction mean_portion_non_gm;

  std::string mean_gm_gens;
  std::string mean_non_gm_gens;
  std::string portion_gm_total;
  std::string portion_non_gm_total;
  std::string mean_portion_non_gm_percent;

  std::uint64_t total_gens() const { return gm_gens + non_gm_gens; }
};

namespace detail {
struct GmGenCounts {
  std::uint64_t semigroups = 0;
  std::uint64_t gm = 0;
  std::uint64_t non_gm = 0;
  std::vector<std::uint64_t> non_gm_by_dimension;

  void add(const NumericalSemigroup& s) {
    const std::size_t n = s.embedding_dimension();
    const std::size_t k = count_gm_generators(s);
    ++semigroups;
    gm += k;
    non_gm += n - k;
    if (non_gm_by_dimension.size() <= n) non_gm_by_dimension.resize(n + 1, 0);
    non_gm_by_dimension[n] += n - k;
  }

  void merge(const GmGenCounts& o) {
    semigroups += o.semigroups;
    gm += o.gm;
    non_gm += o.non_gm;
    if (non_gm_by_dimension.size() < o.non_gm_by_dimension.size())
      non_gm_by_dimension.resize(o.non_gm_by_dimension.size(), 0);
    for (std::size_t i = 0; i < o.non_gm_by_dimension.size(); ++i)
      non_gm_by_dimension[i] += o.non_gm_by_dimension[i];
  }
};
}  // namespace detail

/// (1 / count) * sum_n non_gm_by_dimension[n] / n, exactly.
inline Fraction mean_portion(const std::vector<std::uint64_t>& by_dimension,
                             std::uint64_t count) {
  if (count == 0)
    throw Error(ErrorKind::InvalidArgument, "empty population");
  u128 lcm = 1;
  for (std::size_t n = 1; n < by_dimension.size(); ++n) {
    if (by_dimension[n] == 0) continue;
    lcm = detail::mul128(lcm / detail::gcd128(lcm, n), n);
  }
  u128 num = 0;
  for (std::size_t n = 1; n < by_dimension.size(); ++n) {
    if (by_dimension[n] == 0) continue;
    num += detail::mul128(by_dimension[n], lcm / n);
  }
  return detail::reduce(num, detail::mul128(lcm, count));
}

inline GmGenTableRow build_gmgen_row(Int genus,
                                     const SurveyOptions& opts = {}) {
  const auto c = fold_genus(
      genus, detail::GmGenCounts{},
      [](detail::GmGenCounts& acc, const NumericalSemigroup& s) { acc.add(s); },
      [](detail::GmGenCounts& total, const detail::GmGenCounts& part) {
        total.merge(part);
      },
      opts.enumeration);

  GmGenTableRow row;
  row.genus = genus;
  row.semigroups = c.semigroups;
  row.gm_gens = c.gm;
  row.non_gm_gens = c.non_gm;
  row.non_gm_by_dimension = c.non_gm_by_dimension;
  row.mean_portion_non_gm = mean_portion(c.non_gm_by_dimension, c.semigroups);
  row.mean_gm_gens = render_fixed2(c.gm, c.semigroups);
  row.mean_non_gm_gens = render_fixed2(c.non_gm, c.semigroups);
  row.portion_gm_total = render_percent(c.gm, c.gm + c.non_gm);
  row.portion_non_gm_total = render_percent(c.non_gm, c.gm + c.non_gm);
  row.mean_portion_non_gm_percent =
      render_fixed2(row.mean_portion_non_gm.numerator,
                    row.mean_portion_non_gm.denominator, 100);
  return row;
}

inline std::vector<GmGenTableRow> build_gmgen_table(
    Int genus_lo, Int genus_hi, const SurveyOptions& opts = {}) {
  std::vector<GmGenTableRow> rows;
  for (Int g = genus_lo; g <= genus_hi; ++g)
    rows.push_back(build_gmgen_row(g, opts));
  return rows;
}

// ---------------------------------------------------------------------------
// Sampled cross-check of the coincidence criterion against full scans

struct SampleCheck {
  std::uint64_t population = 0;
  std::uint64_t sampled = 0;
  std::uint64_t mismatches = 0;
  // Per q: criterion count and full-scan count over the sample.
  std::vector<std::uint64_t> criterion_hits;
  std::vector<std::uint64_t> scan_hits;
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Selection depends only on (seed, semigroup), never on traversal order.
inline bool sampled(const NumericalSemigroup& s, std::uint64_t seed,
                    unsigned per_mille) {
  const auto h = std::hash<std::vector<bool>>{}(s.member_bitmap());
  return splitmix64(seed ^ splitmix64(h ^ static_cast<std::uint64_t>(
                                              s.conductor()))) %
             1000 <
         per_mille;
}
}  // namespace detail

/// For a seeded sample (per_mille / 1000 of the population), compares
/// coincidence_criterion against gm_generic == lewittes_bound.
inline SampleCheck sample_coincidence_check(Int genus,
                                            const std::vector<Int>& qs,
                                            std::uint64_t seed,
                                            unsigned per_mille = 10,
                                            const SurveyOptions& opts = {}) {
  SampleCheck init;
  init.criterion_hits.assign(qs.size(), 0);
  init.scan_hits.assign(qs.size(), 0);
  return fold_genus(
      genus, init,
      [&](SampleCheck& acc, const NumericalSemigroup& s) {
        ++acc.population;
        if (!detail::sampled(s, seed, per_mille)) return;
        ++acc.sampled;
        for (std::size_t i = 0; i < qs.size(); ++i) {
          const bool crit = coincidence_criterion(s, qs[i]);
          const bool scan = gm_generic(s, qs[i]) == lewittes_bound(s, qs[i]);
          acc.criterion_hits[i] += crit;
          acc.scan_hits[i] += scan;
          acc.mismatches += crit != scan;
        }
      },
      [](SampleCheck& total, const SampleCheck& part) {
        total.population += part.population;
        total.sampled += part.sampled;
        total.mismatches += part.mismatches;
        for (std::size_t i = 0; i < total.criterion_hits.size(); ++i) {
          total.criterion_hits[i] += part.criterion_hits[i];
          total.scan_hits[i] += part.scan_hits[i];
        }
      },
      opts.enumeration);
}

}  // namespace nsg

#endif  // NSG_SURVEY_HPP
