#include "powersum/reference_tables.hpp"

#include <stdexcept>

namespace powersum {

const char* to_string(BoundCase c) {
  switch (c) {
    case BoundCase::I: return "I";
    case BoundCase::II: return "II";
    case BoundCase::III: return "III";
  }
  return "?";
}

// Certified bound targets per x: n0 (y > 4x^2), n1 (y > 10^6), k1 (y <= 4x^2).
const std::array<BoundTargets, 6> kBoundTargets = {{
    {2, 7500, 3200, 45000},
    {3, 21000, 10000, 120000},
    {6, 94000, 53000, 540000},
    {7, 128000, 74200, 740000},
    {10, 253000, 157000, 1450000},
    {11, 301000, 190000, 1750000},
}};

// h = log v + eps; one table per case.
const std::array<EpsEntry, 6> kEpsTable[3] = {
    // case I (v = n, y floor 4x^2)
    {{{2, 0.3560}, {3, 0.0995}, {6, -0.2275}, {7, -0.2877}, {10, -0.4144}, {11, -0.4458}}},
    // case II (v = n, y floor 10^6)
    {{{2, 0.0324}, {3, -0.1870}, {6, -0.4620}, {7, -0.5122}, {10, -0.6079}, {11, -0.6339}}},
    // case III (v = k, y ceiling 4x^2)
    {{{2, -0.1099}, {3, -0.3665}, {6, -0.6935}, {7, -0.7537}, {10, -0.8805}, {11, -0.9118}}},
};

// Lower bound H, upper bounds omega..h'-constant; one table per case.
const std::array<ConstantsEntry, 6> kConstantsTable[3] = {
    // case I
    {{{2, 6.11, 4.0067, 1.0852, 2.3688, 0.2341, 0.51, 2.3974},
      {3, 6.52, 4.0059, 1.0797, 2.2241, 0.2198, 0.50, 2.1409},
      {6, 7.16, 4.0049, 1.0723, 2.0867, 0.2062, 0.50, 1.8139},
      {7, 7.29, 4.0047, 1.0710, 2.0662, 0.2042, 0.50, 1.7537},
      {10, 7.59, 4.0044, 1.0681, 2.0271, 0.2003, 0.50, 1.6270},
      {11, 7.67, 4.0043, 1.0674, 2.0182, 0.1994, 0.50, 1.5956}}},
    // case II
    {{{2, 5.04, 4.0099, 1.1042, 2.1846, 0.1587, 0.36, 2.2943},
      {3, 5.49, 4.0083, 1.0953, 2.1067, 0.1531, 0.36, 2.0749},
      {6, 6.17, 4.0066, 1.0844, 2.0259, 0.1472, 0.36, 1.7999},
      {7, 6.31, 4.0063, 1.0824, 2.0130, 0.1463, 0.36, 1.7497},
      {10, 6.71, 4.0056, 1.0773, 1.9871, 0.1506, 0.36, 1.6222},
      {11, 6.79, 4.0055, 1.0764, 1.9813, 0.1502, 0.36, 1.5962}}},
    // case III
    {{{2, 7.50, 4.0045, 1.0689, 2.1294, 0.2947, 0.67, 1.7145},
      {3, 7.94, 4.0040, 1.0650, 2.0435, 0.2828, 0.67, 1.4580},
      {6, 8.65, 4.0034, 1.0595, 1.9620, 0.2715, 0.67, 1.1309},
      {7, 8.80, 4.0033, 1.0585, 1.9498, 0.2698, 0.67, 1.0708},
      {10, 9.13, 4.0030, 1.0563, 1.9265, 0.2666, 0.67, 0.9440},
      {11, 9.23, 4.0030, 1.0557, 1.9212, 0.2659, 0.67, 0.9127}}},
};

double rho_for(BoundCase c, int x) {
  switch (c) {
    case BoundCase::I:
      return 7.7;
    case BoundCase::II:
      return (x == 10 || x == 11) ? 9.3 : 9.6;
    case BoundCase::III:
      return 6.2;
  }
  throw std::invalid_argument("rho_for: bad case");
}

namespace {
template <typename T, std::size_t N>
const T& row_for(const std::array<T, N>& table, int x, const char* what) {
  for (const auto& row : table) {
    if (row.x == x) return row;
  }
  throw std::invalid_argument(std::string(what) + ": unsupported x");
}
}  // namespace

const BoundTargets& bound_targets_for(int x) {
  return row_for(kBoundTargets, x, "bound_targets_for");
}
const EpsEntry& eps_entry_for(BoundCase c, int x) {
  return row_for(kEpsTable[static_cast<int>(c)], x, "eps_entry_for");
}
const ConstantsEntry& constants_entry_for(BoundCase c, int x) {
  return row_for(kConstantsTable[static_cast<int>(c)], x, "constants_entry_for");
}

}  // namespace powersum
