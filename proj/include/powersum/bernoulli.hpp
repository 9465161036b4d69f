#pragma once

#include "powersum/integers.hpp"
#include "powersum/rational_poly.hpp"

namespace powersum {

// B_m under the convention B_m = B_m(0), so B_1 = -1/2. Computed by the
// defining convolution sum(i<m) C(m+1,i) B_i = -(m+1) B_m with a mutex-guarded
// cache; safe to call from many threads.
Rat bernoulli_number(unsigned long m);

// Exact value of the Bernoulli polynomial B_q(t) = sum C(q,i) B_i t^(q-i).
Rat bernoulli_poly(unsigned long q, const Rat& t);

// B_q as a RationalPoly.
RationalPoly bernoulli_polynomial(unsigned long q);

}  // namespace powersum
