#include "powersum/power_sums.hpp"

#include <atomic>
#include <stdexcept>

#include "powersum/bernoulli.hpp"

namespace powersum {

namespace {

std::atomic<bool> g_verify{false};

Int sum_direct(unsigned long k, const Int& lo, const Int& hi) {
  Int s(0);
  for (Int j = lo; j <= hi; ++j) s += pow_int(j, k);
  return s;
}

Int rat_to_int_exact(const Rat& r, const char* what) {
  if (r.get_den() != 1) throw std::logic_error(std::string(what) + ": non-integer value");
  return r.get_num();
}

Int s_bernoulli(unsigned long k, const Int& x) {
  // S_k(x) = (B_{k+1}(x+1) - B_{k+1}(0)) / (k+1)
  Rat v = (bernoulli_poly(k + 1, Rat(x + 1)) - bernoulli_number(k + 1)) /
          Rat(static_cast<unsigned long>(k + 1));
  v.canonicalize();
  return rat_to_int_exact(v, "power_sum");
}

Int t_bernoulli(unsigned long k, const Int& x) {
  // T_k(x) = (B_{k+1}(2x+1) - B_{k+1}(x+1)) / (k+1)
  Rat v = (bernoulli_poly(k + 1, Rat(2 * x + 1)) - bernoulli_poly(k + 1, Rat(x + 1))) /
          Rat(static_cast<unsigned long>(k + 1));
  v.canonicalize();
  return rat_to_int_exact(v, "power_sum_upper");
}

}  // namespace

void set_route_verification(bool on) { g_verify.store(on); }
bool route_verification() { return g_verify.load(); }

Int power_sum(unsigned long k, const Int& x, SumRoute route) {
  if (k < 1) throw std::invalid_argument("power_sum: k must be >= 1");
  if (x < 0) throw std::invalid_argument("power_sum: x must be >= 0");
  if (x == 0) return Int(0);
  Int r;
  switch (route) {
    case SumRoute::Direct:
      r = sum_direct(k, Int(1), x);
      break;
    case SumRoute::Bernoulli:
    case SumRoute::Difference:
      r = s_bernoulli(k, x);
      break;
  }
  if (g_verify.load()) {
    Int check = (route == SumRoute::Direct) ? s_bernoulli(k, x) : sum_direct(k, Int(1), x);
    if (check != r) throw std::logic_error("power_sum: route disagreement");
  }
  return r;
}

Int power_sum_upper(unsigned long k, const Int& x, SumRoute route) {
  if (k < 1) throw std::invalid_argument("power_sum_upper: k must be >= 1");
  if (x < 1) throw std::invalid_argument("power_sum_upper: x must be >= 1");
  Int r;
  switch (route) {
    case SumRoute::Direct:
      r = sum_direct(k, x + 1, 2 * x);
      break;
    case SumRoute::Bernoulli:
      r = t_bernoulli(k, x);
      break;
    case SumRoute::Difference:
      r = power_sum(k, 2 * x, SumRoute::Bernoulli) - power_sum(k, x, SumRoute::Bernoulli);
      break;
  }
  if (g_verify.load()) {
    Int check = (route == SumRoute::Direct) ? t_bernoulli(k, x) : sum_direct(k, x + 1, 2 * x);
    if (check != r) throw std::logic_error("power_sum_upper: route disagreement");
  }
  return r;
}

RationalPoly power_sum_upper_poly(unsigned long k) {
  if (k < 1) throw std::invalid_argument("power_sum_upper_poly: k must be >= 1");
  RationalPoly b = bernoulli_polynomial(k + 1);
  RationalPoly diff = b.compose_linear(Rat(2), Rat(1)) - b.compose_linear(Rat(1), Rat(1));
  return diff * Rat(Int(1), Int(static_cast<unsigned long>(k + 1)));
}

bool structural_factor_check(unsigned long k) {
  if (k < 2) throw std::invalid_argument("structural_factor_check: k must be >= 2");
  RationalPoly t = power_sum_upper_poly(k);
  RationalPoly divisor = (k % 2 == 0)
                             ? RationalPoly({Rat(0), Rat(1), Rat(2)})            // x(2x+1)
                             : RationalPoly({Rat(0), Rat(0), Rat(1), Rat(3)});   // x^2(3x+1)
  return t.divisible_by(divisor);
}

}  // namespace powersum
