#ifndef NSG_REFERENCE_TABLES_HPP
#define NSG_REFERENCE_TABLES_HPP

#include <array>
#include <cstdlib>
#include <optional>
#include <string_view>

namespace nsg::reference {

// Published statistics for genus 2..30, cells exactly as printed (percent
// signs dropped). An exact 100% is printed as "100".

inline constexpr std::array<int, 5> kLgmQs{2, 3, 9, 16, 256};

struct LgmRow {
  int genus;
  std::array<std::string_view, 5> coincide;
  std::array<std::string_view, 5> sufficient;
};

struct GmGenRow {
  int genus;
  std::string_view mean_gm;
  std::string_view mean_non_gm;
  std::string_view portion_gm;
  std::string_view portion_non_gm;
  std::string_view mean_portion_non_gm;
};

inline constexpr std::array<LgmRow, 29> kLgm{{
    {2,
     {"50.00", "100", "100", "100", "100"},
     {"50.00", "100", "100", "100", "100"}},
    {3,
     {"25.00", "75.00", "100", "100", "100"},
     {"25.00", "75.00", "100", "100", "100"}},
    {4,
     {"42.86", "57.14", "100", "100", "100"},
     {"14.29", "42.86", "85.71", "100", "100"}},
    {5,
     {"33.33", "41.67", "91.67", "100", "100"},
     {"8.33", "25.00", "58.33", "91.67", "100"}},
    {6,
     {"21.74", "43.48", "86.96", "100", "100"},
     {"4.35", "17.39", "43.48", "82.61", "100"}},
    {7,
     {"17.95", "41.03", "87.18", "100", "100"},
     {"2.56", "10.26", "38.46", "84.62", "100"}},
    {8,
     {"14.93", "37.31", "85.07", "100", "100"},
     {"1.49", "5.97", "53.73", "91.04", "100"}},
    {9,
     {"11.02", "33.05", "88.14", "98.31", "100"},
     {"0.85", "4.24", "72.03", "87.29", "100"}},
    {10,
     {"8.82", "29.90", "88.24", "95.59", "100"},
     {"0.49", "2.45", "79.90", "78.92", "100"}},
    {11,
     {"7.58", "25.95", "84.55", "92.71", "100"},
     {"0.29", "1.46", "78.13", "65.89", "100"}},
    {12,
     {"6.59", "23.48", "78.89", "90.88", "100"},
     {"0.17", "1.01", "69.93", "54.05", "100"}},
    {13,
     {"5.69", "21.48", "73.73", "89.81", "100"},
     {"0.10", "0.60", "59.64", "42.76", "100"}},
    {14,
     {"5.02", "18.90", "69.76", "88.66", "100"},
     {"0.06", "0.35", "49.26", "33.73", "100"}},
    {15,
     {"4.10", "16.63", "66.26", "87.68", "100"},
     {"0.04", "0.25", "39.38", "28.35", "100"}},
    {16,
     {"3.45", "14.77", "63.23", "87.22", "100"},
     {"0.02", "0.15", "30.86", "28.67", "100"}},
    {17,
     {"2.92", "13.10", "60.66", "87.00", "100"},
     {"0.01", "0.09", "23.79", "35.23", "100"}},
    {18,
     {"2.38", "11.66", "58.74", "87.03", "100"},
     {"0.01", "0.06", "18.33", "45.70", "100"}},
    {19,
     {"1.93", "10.40", "57.06", "86.71", "100"},
     {"0.00", "0.04", "13.93", "55.89", "100"}},
    {20,
     {"1.60", "9.28", "55.71", "85.43", "100"},
     {"0.00", "0.02", "10.55", "62.47", "99.95"}},
    {21,
     {"1.31", "8.34", "54.67", "83.03", "100"},
     {"0.00", "0.01", "7.93", "64.51", "99.75"}},
    {22,
     {"1.09", "7.48", "53.95", "80.14", "100"},
     {"0.00", "0.01", "5.93", "62.93", "99.19"}},
    {23,
     {"0.90", "6.70", "53.29", "77.41", "100"},
     {"0.00", "0.01", "4.39", "59.00", "98.09"}},
    {24,
     {"0.75", "6.02", "52.46", "75.16", "100"},
     {"0.00", "0.00", "3.25", "53.67", "96.50"}},
    {25,
     {"0.63", "5.42", "51.33", "73.37", "100"},
     {"0.00", "0.00", "2.38", "47.63", "94.73"}},
    {26,
     {"0.53", "4.90", "49.94", "71.94", "100"},
     {"0.00", "0.00", "1.74", "41.35", "93.12"}},
    {27,
     {"0.45", "4.45", "48.39", "70.75", "100"},
     {"0.00", "0.00", "1.27", "35.24", "91.84"}},
    {28,
     {"0.38", "4.07", "46.81", "69.73", "100"},
     {"0.00", "0.00", "0.92", "29.58", "90.87"}},
    {29,
     {"0.32", "3.74", "45.25", "68.76", "100"},
     {"0.00", "0.00", "0.67", "24.52", "90.06"}},
    {30,
     {"0.27", "3.44", "43.76", "67.80", "100"},
     {"0.00", "0.00", "0.48", "20.12", "89.25"}},
}};

inline constexpr std::array<GmGenRow, 29> kGmGen{{
    {2, "1.50", "1.00", "60.00", "40.00", "41.67"},
    {3, "1.75", "1.00", "63.64", "36.36", "35.42"},
    {4, "2.00", "1.14", "63.64", "36.36", "38.57"},
    {5, "2.33", "1.42", "62.22", "37.78", "40.14"},
    {6, "2.52", "1.43", "63.74", "36.26", "37.43"},
    {7, "2.79", "1.62", "63.37", "36.63", "39.13"},
    {8, "3.07", "1.76", "63.58", "36.42", "39.03"},
    {9, "3.32", "1.89", "63.74", "36.26", "38.58"},
    {10, "3.57", "2.00", "64.03", "35.97", "38.39"},
    {11, "3.85", "2.17", "63.96", "36.04", "38.76"},
    {12, "4.10", "2.27", "64.34", "35.66", "38.26"},
    {13, "4.38", "2.41", "64.54", "35.46", "38.17"},
    {14, "4.65", "2.53", "64.75", "35.25", "37.99"},
    {15, "4.92", "2.65", "65.01", "34.99", "37.73"},
    {16, "5.20", "2.76", "65.30", "34.70", "37.45"},
    {17, "5.48", "2.88", "65.56", "34.44", "37.21"},
    {18, "5.76", "2.98", "65.88", "34.12", "36.87"},
    {19, "6.05", "3.09", "66.19", "33.81", "36.55"},
    {20, "6.35", "3.20", "66.49", "33.51", "36.25"},
    {21, "6.64", "3.30", "66.79", "33.21", "35.93"},
    {22, "6.94", "3.40", "67.11", "32.89", "35.59"},
    {23, "7.24", "3.50", "67.43", "32.57", "35.26"},
    {24, "7.55", "3.59", "67.76", "32.24", "34.91"},
    {25, "7.86", "3.68", "68.08", "31.92", "34.56"},
    {26, "8.17", "3.77", "68.41", "31.59", "34.21"},
    {27, "8.49", "3.86", "68.74", "31.26", "33.86"},
    {28, "8.81", "3.94", "69.07", "30.93", "33.50"},
    {29, "9.13", "4.03", "69.40", "30.60", "33.14"},
    {30, "9.46", "4.10", "69.74", "30.26", "32.77"},
}};

/// Hundredths encoded by a rendered cell ("42.86" -> 4286, "100" -> 10000).
inline std::optional<long> hundredths(std::string_view cell) {
  if (cell.empty()) return std::nullopt;
  long whole = 0;
  std::size_t i = 0;
  for (; i < cell.size() && cell[i] != '.'; ++i) {
    if (cell[i] < '0' || cell[i] > '9') return std::nullopt;
    whole = whole * 10 + (cell[i] - '0');
  }
  long frac = 0;
  if (i < cell.size()) {
    if (cell.size() - i != 3) return std::nullopt;
    for (std::size_t j = i + 1; j < cell.size(); ++j) {
      if (cell[j] < '0' || cell[j] > '9') return std::nullopt;
      frac = frac * 10 + (cell[j] - '0');
    }
  }
  return whole * 100 + frac;
}

/// Same value as printed: "100" and "100.00" are the same cell.
inline bool same_cell(std::string_view rendered, std::string_view published) {
  const auto a = hundredths(rendered);
  const auto b = hundredths(published);
  return a && b && *a == *b;
}

/// Within one unit in the last printed digit.
inline bool within_one_ulp(std::string_view rendered,
                           std::string_view published) {
  const auto a = hundredths(rendered);
  const auto b = hundredths(published);
  return a && b && std::labs(*a - *b) <= 1;
}

inline const LgmRow* lgm_row(int genus) {
  for (const auto& r : kLgm)
    if (r.genus == genus) return &r;
  return nullptr;
}

inline const GmGenRow* gmgen_row(int genus) {
  for (const auto& r : kGmGen)
    if (r.genus == genus) return &r;
  return nullptr;
}

}  // namespace nsg::reference

#endif  // NSG_REFERENCE_TABLES_HPP
