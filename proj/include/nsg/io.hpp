#ifndef NSG_IO_HPP
#define NSG_IO_HPP

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "nsg/bounds.hpp"
#include "nsg/semigroup.hpp"
#include "nsg/survey.hpp"

// CSV: UTF-8, comma separated, LF line endings, one header row, percentages
// without the percent sign. JSON: one object per line, exact tallies next to
// the rendered strings; values that may exceed 64 bits are decimal strings.

namespace nsg::io {

inline void write_lgm_csv_header(std::ostream& os, const std::vector<Int>& qs) {
  os << "Genus";
  for (Int q : qs) os << ",Lewittes = Geil-Matsumoto (q=" << q << ")";
  for (Int q : qs)
    os << ",q \xE2\x89\xA4 \xE2\x8C\x8Aq/\xCE\xBB\xE2\x82\x81\xE2\x8C\x8B"
          "\xCE\xBB\xE2\x82\x82 (q="
       << q << ")";
  os << '\n';
}

inline void write_lgm_csv_row(std::ostream& os, const LgmTableRow& row) {
  os << row.genus;
  for (const auto& t : row.per_q_coincide) os << ',' << t.percent;
  for (const auto& t : row.per_q_sufficient) os << ',' << t.percent;
  os << '\n';
}

inline void write_gmgen_csv_header(std::ostream& os) {
  os << "Genus"
        ",Mean of the number of GM generators per semigroup"
        ",Mean of the number of non-GM generators per semigroup"
        ",Total number of GM generators divided by the total number of "
        "generators"
        ",Total number of non-GM generators divided by the total number of "
        "generators"
        ",Mean of the portion of non-GM generators per semigroup\n";
}

inline void write_gmgen_csv_row(std::ostream& os, const GmGenTableRow& row) {
  os << row.genus << ',' << row.mean_gm_gens << ',' << row.mean_non_gm_gens
     << ',' << row.portion_gm_total << ',' << row.portion_non_gm_total << ','
     << row.mean_portion_non_gm_percent << '\n';
}

inline nlohmann::json to_json(const QTally& t) {
  return {{"q", t.q},
          {"numerator", t.numerator},
          {"denominator", t.denominator},
          {"percent", t.percent}};
}

inline nlohmann::json to_json(const LgmTableRow& row) {
  nlohmann::json co = nlohmann::json::array();
  nlohmann::json su = nlohmann::json::array();
  for (const auto& t : row.per_q_coincide) co.push_back(to_json(t));
  for (const auto& t : row.per_q_sufficient) su.push_back(to_json(t));
  return {{"table", "lgm"},
          {"genus", row.genus},
          {"semigroups", row.semigroups},
          {"coincide", co},
          {"sufficient", su}};
}

inline nlohmann::json to_json(const GmGenTableRow& row) {
  return {
      {"table", "gmgens"},
      {"genus", row.genus},
      {"semigroups", row.semigroups},
      {"gm_generators", row.gm_gens},
      {"non_gm_generators", row.non_gm_gens},
      {"total_generators", row.total_gens()},
      {"non_gm_by_dimension", row.non_gm_by_dimension},
      {"mean_gm_generators", row.mean_gm_gens},
      {"mean_non_gm_generators", row.mean_non_gm_gens},
      {"portion_gm_total", row.portion_gm_total},
      {"portion_non_gm_total", row.portion_non_gm_total},
      {"mean_portion_non_gm",
       {{"numerator", to_decimal(row.mean_portion_non_gm.numerator)},
        {"denominator", to_decimal(row.mean_portion_non_gm.denominator)},
        {"percent", row.mean_portion_non_gm_percent}}},
  };
}

inline nlohmann::json to_json(const BoundReport& r) {
  return {{"q", r.q},
          {"lewittes", r.lewittes},
          {"serre", r.serre},
          {"gm", r.gm},
          {"gm_method", to_string(r.gm_method)},
          {"coincide", r.coincide},
          {"sufficient_condition", r.sufficient_condition_holds},
          {"trivial_multiplicity", r.trivial_multiplicity}};
}

inline nlohmann::json to_json(const GenClassification& c) {
  return {{"gm_generators", c.gm_generators},
          {"non_gm_generators", c.non_gm_generators},
          {"reduced_index_set", c.reduced_index_set}};
}

}  // namespace nsg::io

#endif  // NSG_IO_HPP
