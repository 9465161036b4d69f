#pragma once

#include "powersum/integers.hpp"
#include "powersum/rational_poly.hpp"

namespace powersum {

// Evaluation routes for the power sums. Direct is plain summation; Bernoulli
// goes through the Bernoulli-polynomial closed form; Difference computes the
// upper sum as S_k(2x) - S_k(x). Each route is the others' oracle, and the
// route-verification flag keeps them permanently cross-checkable.
enum class SumRoute { Direct, Bernoulli, Difference };

// When enabled, every evaluation recomputes through a second route and throws
// std::logic_error on disagreement.
void set_route_verification(bool on);
bool route_verification();

// S_k(x) = 1^k + ... + x^k, k >= 1, x >= 0.
Int power_sum(unsigned long k, const Int& x, SumRoute route = SumRoute::Bernoulli);

// T_k(x) = (x+1)^k + ... + (2x)^k, k >= 1, x >= 1.
Int power_sum_upper(unsigned long k, const Int& x, SumRoute route = SumRoute::Bernoulli);

// Degree k+1 polynomial P with P(x) = T_k(x).
RationalPoly power_sum_upper_poly(unsigned long k);

// For k >= 2: as rational polynomials, x(2x+1) divides T_k for even k and
// x^2(3x+1) divides it for odd k.
bool structural_factor_check(unsigned long k);

}  // namespace powersum
