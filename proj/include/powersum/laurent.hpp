#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "powersum/directed_real.hpp"
#include "powersum/integers.hpp"
#include "powersum/reference_tables.hpp"

namespace powersum {

inline constexpr int kDefaultDigits = 60;
mpfr_prec_t bits_for_digits(int digits);

// sigma = (1 + 2*mu - mu^2)/2 (exact in the rationals), lambda = sigma*log(rho).
struct SigmaLambda {
  Rat sigma_exact;
  Dual sigma;
  Dual lambda;
};
SigmaLambda sigma_lambda(const Rat& rho, const Rat& mu, int digits = kDefaultDigits);

// Thrown when the a1*a2 >= lambda^2 hypothesis fails; distinct from plain
// domain errors so callers can report it verbatim.
struct HypothesisViolation : std::runtime_error {
  explicit HypothesisViolation(const std::string& what) : std::runtime_error(what) {}
};

// One-directional view of the constant set: H is a certified lower bound,
// everything else a certified upper bound.
struct LaurentConstants {
  DirectedReal sigma;    // Up
  DirectedReal lambda;   // Up
  DirectedReal H;        // Down
  DirectedReal omega;    // Up
  DirectedReal theta;    // Up
  DirectedReal C0;       // Up
  DirectedReal C;        // Up
  DirectedReal Cprime;   // Up
  DirectedReal hprime;   // Up
};

// Full two-sided bundle used by the certifier.
struct LaurentBundle {
  SigmaLambda sl;
  Dual a1, a2, h, H, omega, theta, C0, C, Cprime, hprime;
  LaurentConstants view() const;
};

// Core constant chain: H = h/lambda + 1/sigma, omega/theta from H, C0 from
// its radical, C = C0*mu/(lambda^3*sigma), C' = sqrt(C*sigma*omega*theta /
// (lambda^3*mu)), h' = h + lambda/sigma. Checks the a1*a2 >= lambda^2
// hypothesis and throws HypothesisViolation when it fails.
LaurentBundle laurent_constants(const Rat& rho, const Rat& mu, const Dual& a1,
                                const Dual& a2, const Dual& h, int digits = kDefaultDigits);

// y-floor convention. Closed evaluates at y = 4x^2 / 10^6 exactly (the
// convention behind the published epsilon tables); OpenInteger uses the least
// admissible integers 4x^2+1 / 10^6+1 (used by the certifier).
enum class FloorMode { Closed, OpenInteger };

Rat rho_rat_for(BoundCase c, int x);
Int y_floor_for(BoundCase c, int x, FloorMode mode);

// a1/a2 for the worst-case substitutions: cases I/II take b1 = v, b2 = (v-1)/2
// and y at its floor; case III takes b1 = k, b2 = floor(k/2) with y <= 4x^2
// folded into the a's.
struct APair {
  Dual a1, a2;
};
APair a_parameters(int x, BoundCase c, FloorMode mode, int digits = kDefaultDigits);

// eps with h = log v + eps: the max-expression of the h hypothesis evaluated
// upward, minus log v.
DirectedReal h_parameter_eps(int x, BoundCase c, FloorMode mode, int digits = kDefaultDigits);

// Everything the contradiction inequality needs at a fixed v (v = n for
// cases I/II, v = k for case III).
struct RhsEvaluation {
  LaurentBundle bundle;
  DirectedReal rhs;          // Up: v must exceed this for a solution to exist
  bool hypotheses_ok;
  std::vector<std::string> hypothesis_failures;
};
RhsEvaluation contradiction_rhs(int x, BoundCase c, std::uint64_t v, FloorMode mode,
                                int digits = kDefaultDigits);

// Display-precision constants row for reports.
struct LaurentValues {
  double H, omega, theta, C0, C, Cprime, hprime_const;
};

struct BoundReport {
  int x = 0;
  BoundCase c = BoundCase::I;
  double rho = 0, mu = 0;
  double epsilon = 0;        // certification eps (open integer floor)
  double epsilon_table = 0;  // closed-floor eps diffed against the reference table
  LaurentValues constants{};  // at v = reference bound, closed floor
  std::uint64_t reference_bound = 0;
  std::uint64_t derived_bound = 0;
  bool certified = false;
  double rhs_at_reference_plus_1 = 0;
  double margin = 0;  // (v - rhs)/v at v = reference_bound + 1
  std::vector<std::string> notes;
};

// Verifies the contradiction inequality at reference_bound + 1 and the
// persistence conditions that extend it to every larger v; fills the report.
// reproduced == certified && derived_bound <= reference_bound.
BoundReport certify_bound(int x, BoundCase c, int digits = kDefaultDigits);

// Table diffing: directional comparison of recomputed entries against the
// reference rows (lower bounds must not fall below reference - 5e-5, upper
// bounds must not exceed reference + 5e-5).
inline constexpr double kTableSlack = 5e-5;

struct TableEntryDiff {
  std::string field;
  double computed = 0;
  double reference = 0;
  bool lower_bound = false;  // true: computed must be >= reference - slack
  bool sound = false;
  double gap = 0;  // reference - computed (how loose the reference is)
};
struct TableRowDiff {
  int x = 0;
  BoundCase c = BoundCase::I;
  std::vector<TableEntryDiff> entries;
  bool all_sound = true;
};
TableRowDiff reproduce_table_row(int x, BoundCase c, int digits = kDefaultDigits);

// y-parity precheck P(y odd) used for multiplicative independence: v2(T_k(x))
// must vanish for every k class at the given x.
bool y_parity_precheck(int x);

}  // namespace powersum
