#include <doctest.h>

#include <random>

#include "powersum/integers.hpp"

using namespace powersum;

TEST_CASE("decimal round trip") {
  for (const char* s : {"0", "-1", "170141183460469231731687303715884105727",
                        "-998899889988998899889988"}) {
    CHECK(to_decimal(int_from_decimal(s)) == s);
  }
  CHECK_THROWS_AS(int_from_decimal("12a"), std::invalid_argument);
  // canonical zero compares positive-signed
  CHECK(int_from_decimal("-0") == 0);
  CHECK(to_decimal(int_from_decimal("-0")) == "0");
}

TEST_CASE("vp basics") {
  CHECK(vp(Int(174), 2ul) == 1);  // 174 = 2 * 87
  CHECK(vp(Int(7), 2ul) == 0);
  CHECK(vp(Int(40), 2ul) == 3);
  CHECK(vp(Int(-48), 2ul) == 4);
  CHECK_THROWS_AS(vp(Int(0), 2ul), std::invalid_argument);
}

TEST_CASE("vp is additive on products") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    Int a = Int(static_cast<unsigned long>(rng() % 1000000 + 1));
    Int b = Int(static_cast<unsigned long>(rng() % 1000000 + 1));
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
      CHECK(vp(a * b, p) == vp(a, p) + vp(b, p));
    }
  }
}

TEST_CASE("exact nth root") {
  CHECK(exact_nth_root(Int(4900), 2).value() == 70);
  CHECK(exact_nth_root(Int(1), 7).value() == 1);
  CHECK_FALSE(exact_nth_root(Int(405), 3).has_value());  // 7^3 = 343 < 405 < 512 = 8^3
  CHECK_THROWS_AS(exact_nth_root(Int(0), 2), std::invalid_argument);
  CHECK_THROWS_AS(exact_nth_root(Int(8), 1), std::invalid_argument);
}

TEST_CASE("nth root round trip, cross-checked against the library root") {
  for (unsigned long y = 2; y <= 50; ++y) {
    for (unsigned long n = 2; n <= 12; ++n) {
      Int m = pow_int(Int(y), n);
      auto r = exact_nth_root(m, n);
      REQUIRE(r.has_value());
      CHECK(*r == y);
      Int g;
      int exactp = mpz_root(g.get_mpz_t(), m.get_mpz_t(), n);
      CHECK(exactp != 0);
      CHECK(g == *r);
      CHECK_FALSE(exact_nth_root(m + 1, n).has_value());
    }
  }
}

TEST_CASE("perfect power witnesses") {
  auto w = perfect_power_witnesses(Int(64), 2, 6);
  REQUIRE(w.size() == 3);
  CHECK(w[0] == PowerWitness{Int(8), 2});
  CHECK(w[1] == PowerWitness{Int(4), 3});
  CHECK(w[2] == PowerWitness{Int(2), 6});

  CHECK(perfect_power_witnesses(Int(25), 3, 5).empty());
  auto w2 = perfect_power_witnesses(Int(4900), 2, 3);
  REQUIRE(w2.size() == 1);
  CHECK(w2[0] == PowerWitness{Int(70), 2});
}

TEST_CASE("witness enumeration equals brute force on small inputs") {
  for (unsigned long m = 2; m <= 2000; ++m) {
    auto fast = perfect_power_witnesses(Int(m), 2, 16);
    std::vector<PowerWitness> slow;
    for (unsigned long n = 2; n <= 16; ++n) {
      for (Int y = 2;; ++y) {
        Int p = pow_int(y, n);
        if (p > m) break;
        if (p == m) slow.push_back({y, n});
      }
    }
    CHECK(fast == slow);
  }
}

TEST_CASE("factor digest") {
  FactorDigest d = factor_digest(Int(174), 1000);
  REQUIRE(d.factors.size() == 3);  // 2 * 3 * 29
  CHECK(d.factors[0] == std::pair<std::uint64_t, unsigned long>{2, 1});
  CHECK(d.cofactor == 1);
}

TEST_CASE("u64 primality") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(7));
  CHECK(is_prime_u64(104729));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(104730));
  auto ps = primes_up_to(100);
  CHECK(ps.size() == 25);
}
