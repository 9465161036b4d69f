#include <doctest.h>

#include "powersum/power_sums.hpp"

using namespace powersum;

TEST_CASE("power sum examples") {
  CHECK(power_sum(1, Int(4)) == 10);
  CHECK(power_sum(2, Int(24)) == 4900);  // 70^2
  CHECK(power_sum(3, Int(3)) == 36);     // direct-summation oracle value
  CHECK(power_sum(3, Int(3), SumRoute::Direct) == 36);
  CHECK(power_sum(5, Int(0)) == 0);
  CHECK_THROWS_AS(power_sum(0, Int(3)), std::invalid_argument);
}

TEST_CASE("upper power sum examples") {
  CHECK(power_sum_upper(1, Int(2)) == 7);   // 3 + 4
  CHECK(power_sum_upper(2, Int(2)) == 25);  // 9 + 16, the n=2 witness 5^2
  CHECK(power_sum_upper(3, Int(3)) == 405); // 64 + 125 + 216
  // closed form x^2(5x+3)(3x+1)/4 at x=3: 9*18*10/4
  CHECK(power_sum_upper(3, Int(3)) == Int(9) * 18 * 10 / 4);
  CHECK_THROWS_AS(power_sum_upper(1, Int(0)), std::invalid_argument);
}

TEST_CASE("route agreement with verification enabled") {
  set_route_verification(true);
  for (unsigned long k = 1; k <= 12; ++k) {
    for (unsigned long x = 1; x <= 20; ++x) {
      Int a = power_sum_upper(k, Int(x), SumRoute::Direct);
      Int b = power_sum_upper(k, Int(x), SumRoute::Bernoulli);
      Int c = power_sum_upper(k, Int(x), SumRoute::Difference);
      CHECK(a == b);
      CHECK(b == c);
    }
  }
  set_route_verification(false);
}

TEST_CASE("polynomial form matches values") {
  // T_1 = (3/2)x^2 + (1/2)x
  RationalPoly t1 = power_sum_upper_poly(1);
  CHECK(t1.coeff(0) == 0);
  CHECK(t1.coeff(1) == Rat(1, 2));
  CHECK(t1.coeff(2) == Rat(3, 2));

  // T_3 = x^2(5x+3)(3x+1)/4
  RationalPoly t3 = power_sum_upper_poly(3);
  RationalPoly expect =
      RationalPoly({Rat(0), Rat(0), Rat(1)}) * RationalPoly({Rat(3), Rat(5)}) *
      RationalPoly({Rat(1), Rat(3)}) * Rat(1, 4);
  CHECK(t3 == expect);

  RationalPoly t2 = power_sum_upper_poly(2);
  CHECK(t2.eval(Rat(2)) == 25);

  for (unsigned long k = 1; k <= 12; ++k) {
    RationalPoly p = power_sum_upper_poly(k);
    CHECK(p.degree() == static_cast<long>(k) + 1);
    for (unsigned long x = 1; x <= 8; ++x) {
      CHECK(p.eval(Rat(Int(x))) == Rat(power_sum_upper(k, Int(x))));
    }
  }
}

TEST_CASE("structural factor check") {
  for (unsigned long k = 2; k <= 40; ++k) {
    CHECK(structural_factor_check(k));
  }
  CHECK_THROWS_AS(structural_factor_check(1), std::invalid_argument);
}

TEST_CASE("rational poly division") {
  RationalPoly p({Rat(-1), Rat(0), Rat(1)});  // x^2 - 1
  RationalPoly d({Rat(1), Rat(1)});           // x + 1
  auto qr = p.divrem(d);
  CHECK(qr.remainder.is_zero());
  CHECK(qr.quotient == RationalPoly({Rat(-1), Rat(1)}));
  CHECK_FALSE(p.divisible_by(RationalPoly({Rat(1), Rat(0), Rat(0), Rat(1)})));
  CHECK_THROWS_AS(p.divrem(RationalPoly()), std::invalid_argument);
}
