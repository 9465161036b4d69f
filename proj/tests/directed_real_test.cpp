#include <doctest.h>

#include "powersum/directed_real.hpp"

using namespace powersum;
using Dir = DirectedReal::Dir;

namespace {
constexpr mpfr_prec_t kPrec = 232;
}

TEST_CASE("conversions bracket non-dyadic rationals") {
  Rat r(1, 3);
  auto dn = DirectedReal::from_rational(r, Dir::Down, kPrec);
  auto up = DirectedReal::from_rational(r, Dir::Up, kPrec);
  CHECK(dn.cmp(up) < 0);
  CHECK(dn.to_double() == doctest::Approx(1.0 / 3).epsilon(1e-12));
}

TEST_CASE("mismatched directions are contract violations") {
  auto a = DirectedReal::from_long(2, Dir::Down, kPrec);
  auto b = DirectedReal::from_long(3, Dir::Up, kPrec);
  CHECK_THROWS_AS(a + b, std::logic_error);
  CHECK_THROWS_AS(a * b, std::logic_error);
  CHECK_THROWS_AS(a - a, std::logic_error);  // subtrahend must be opposite
  CHECK_THROWS_AS(a / a, std::logic_error);  // denominator must be opposite
  CHECK_NOTHROW(a - b);
  CHECK_NOTHROW(a / b);
}

TEST_CASE("log and sqrt honor the direction") {
  Dual seven = Dual::from_long(7, kPrec);
  Dual l = seven.log();
  CHECK(l.dn.cmp(l.up) <= 0);
  Dual s = seven.sqrt();
  CHECK(s.dn.cmp(s.up) <= 0);
  // squaring the enclosure straddles 7
  Dual sq = s * s;
  CHECK(sq.dn.cmp(DirectedReal::from_long(7, Dir::Up, kPrec)) <= 0);
  CHECK(sq.up.cmp(DirectedReal::from_long(7, Dir::Down, kPrec)) >= 0);
}

TEST_CASE("pow with dyadic exponents") {
  Dual four = Dual::from_long(4, kPrec);
  Dual p = four.pow(Rat(5, 4));
  // 4^(5/4) = 4 * sqrt(2) = 5.65685...
  CHECK(p.dn.to_double() == doctest::Approx(5.656854249).epsilon(1e-9));
  CHECK_THROWS_AS(four.pow(Rat(1, 3)), std::logic_error);
}

TEST_CASE("interval arithmetic keeps enclosures ordered") {
  Dual a = Dual::from_rational(Rat(57, 100), kPrec);
  Dual b = Dual::from_rational(Rat(77, 10), kPrec);
  Dual c = (a * b + a / b).sqrt().log() + Dual::from_long(2, kPrec);
  CHECK(c.dn.cmp(c.up) <= 0);
}

TEST_CASE("negative multiplication is rejected") {
  auto neg = DirectedReal::from_long(-2, Dir::Down, kPrec);
  auto pos = DirectedReal::from_long(2, Dir::Down, kPrec);
  CHECK_THROWS_AS(neg * pos, std::logic_error);
}
