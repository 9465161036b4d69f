#pragma once

#include <array>
#include <cstdint>

namespace powersum {

// The three bound regimes for the x in {2,3,6,7,10,11} certifications:
//   I   : y > 4x^2          (bounds the exponent n by n0)
//   II  : y > 10^6          (bounds the exponent n by n1)
//   III : y <= 4x^2         (bounds the power-sum length k by k1)
enum class BoundCase { I, II, III };

const char* to_string(BoundCase c);

// Reference values the tables command diffs against and the certifier must
// reproduce. Each row is keyed by x; columns follow the published layout:
// a lower bound for H and upper bounds for omega, theta, C0, C, C', and the
// additive constant of h' (h' = log v + hprime_const).

struct BoundTargets {
  int x;
  std::uint64_t n0;  // case I target
  std::uint64_t n1;  // case II target
  std::uint64_t k1;  // case III target
};

struct EpsEntry {
  int x;
  double eps;  // chosen h = log v + eps
};

struct ConstantsEntry {
  int x;
  double H, omega, theta, C0, C, Cprime, hprime_const;
};

inline constexpr std::array<int, 6> kBakerX = {2, 3, 6, 7, 10, 11};

extern const std::array<BoundTargets, 6> kBoundTargets;
extern const std::array<EpsEntry, 6> kEpsTable[3];          // indexed by BoundCase
extern const std::array<ConstantsEntry, 6> kConstantsTable[3];

// rho parameter per case (mu = 57/100 throughout)
double rho_for(BoundCase c, int x);

const BoundTargets& bound_targets_for(int x);
const EpsEntry& eps_entry_for(BoundCase c, int x);
const ConstantsEntry& constants_entry_for(BoundCase c, int x);

}  // namespace powersum
