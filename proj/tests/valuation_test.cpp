#include <doctest.h>

#include "powersum/power_sums.hpp"
#include "powersum/valuation.hpp"

using namespace powersum;

TEST_CASE("v2 predictor examples") {
  // oracle: vp(T_5(8), 2)
  CHECK(vp(power_sum_upper(5, Int(8)), 2ul) == 4);
  auto p = predict_v2_T(Int(8), 5);
  CHECK(p.covered);
  CHECK(p.value == 4);  // 2t - 2 with t = 3

  CHECK(vp(power_sum_upper(7, Int(13)), 2ul) == 3);
  p = predict_v2_T(Int(13), 7);
  CHECK(p.covered);
  CHECK(p.value == 3);  // v2(3x+1) = v2(40)

  p = predict_v2_T(Int(3), 6);
  CHECK(p.covered);
  CHECK(p.value == 0);

  p = predict_v2_T(Int(33), 4);
  CHECK_FALSE(p.covered);
  CHECK(p.case_label == branch::v2_not_covered);
}

TEST_CASE("v3 predictor examples") {
  CHECK(power_sum_upper(1, Int(3)) == 15);
  auto p = predict_v3_T(Int(3), 1);
  CHECK(p.covered);
  CHECK(p.value == 1);

  CHECK(vp(power_sum_upper(2, Int(4)), 3ul) == 1);  // T_2(4) = 174
  p = predict_v3_T(Int(4), 2);
  CHECK(p.covered);
  CHECK(p.value == 1);  // v3(2x+1) - 1 = v3(9) - 1

  p = predict_v3_T(Int(2), 4);
  CHECK(p.covered);
  CHECK(p.value == 0);

  p = predict_v3_T(Int(5), 2);
  CHECK_FALSE(p.covered);
}

TEST_CASE("v3 of the plain power sum") {
  auto p = predict_v3_S(Int(3), 1);
  CHECK(p.covered);
  CHECK(p.value == 1);
  CHECK(vp(power_sum(1, Int(3)), 3ul) == 1);  // S_1(3) = 6

  p = predict_v3_S(Int(1), 3);
  CHECK(p.covered);
  CHECK(p.value == 0);

  // S_2(2) = 5: predicted v3(2*3*5) - 1 = 0, oracle agrees
  p = predict_v3_S(Int(2), 2);
  CHECK(p.covered);
  CHECK(p.value == 0);
  CHECK(vp(power_sum(2, Int(2)), 3ul) == 0);
}

TEST_CASE("spot check x=9 k=4") {
  Int t = power_sum_upper(4, Int(9), SumRoute::Direct);
  CHECK(t == 417012);
  auto p = predict_v2_T(Int(9), 4);
  CHECK(p.covered);
  CHECK(p.value == 2);
  CHECK(vp(t, 2ul) == 2);
}

TEST_CASE("oracle harness, fast tier") {
  ValuationSurvey s = verify_valuation_lemmas(64, 6);
  CHECK(s.mismatches.empty());
  CHECK(s.checked > 0);
}

TEST_CASE("exponent bound examples") {
  auto o = exponent_bound(Int(4), 2);
  CHECK(o.kind == BoundOutcome::Kind::NoSolutionForNGe2);

  o = exponent_bound(Int(8), 5);
  CHECK(o.kind == BoundOutcome::Kind::UpperBound);
  CHECK(o.n_max == 4);  // 2 v2(8) - 2

  o = exponent_bound(Int(9), 4);
  CHECK(o.kind == BoundOutcome::Kind::UpperBound);
  CHECK(o.n_max == 2);

  o = exponent_bound(Int(13), 6);
  CHECK(o.kind == BoundOutcome::Kind::NoSolutionForNGe2);

  o = exponent_bound(Int(33), 4);
  CHECK(o.kind == BoundOutcome::Kind::NotCovered);
}

TEST_CASE("exponent bound never returns a bound below 2") {
  for (unsigned long x = 1; x <= 300; ++x) {
    for (unsigned long k = 1; k <= 12; ++k) {
      auto o = exponent_bound(Int(x), k);
      if (o.kind == BoundOutcome::Kind::UpperBound) CHECK(o.n_max >= 2);
    }
  }
}

TEST_CASE("bound is consistent with actual perfect powers") {
  for (unsigned long x = 1; x <= 200; ++x) {
    for (unsigned long k = 1; k <= 10; ++k) {
      auto o = exponent_bound(Int(x), k);
      if (o.kind == BoundOutcome::Kind::NotCovered) continue;
      Int t = power_sum_upper(k, Int(x));
      if (t < 4) continue;
      std::size_t bits = mpz_sizeinbase(t.get_mpz_t(), 2);
      for (const auto& w : perfect_power_witnesses(t, 2, bits)) {
        if (o.kind == BoundOutcome::Kind::NoSolutionForNGe2) {
          CHECK(w.n < 2);  // no witness with n >= 2 may exist at all
        } else {
          CHECK(w.n <= o.n_max);
        }
      }
    }
  }
}

TEST_CASE("congruence checks come back clean") {
  CongruenceRanges r;
  CHECK(verify_congruence_lemmas(3, r).empty());
  r.d_max = 2;
  CHECK(verify_congruence_lemmas(5, r).empty());
  CHECK(verify_congruence_lemmas(7, r).empty());
  CHECK_THROWS_AS(verify_congruence_lemmas(4, r), std::invalid_argument);
}

TEST_CASE("half-residue congruence genuinely needs even exponents") {
  // S_1(7) = 28 = 1 (mod 3), not 0: the odd-exponent variant is false, which
  // is why the checker restricts that case to even k.
  CHECK(power_sum(1, Int(7)) % 3 == 1);
  CHECK(power_sum(3, Int(2)) % 5 == 4);  // same shape at p = 5
}
