#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace powersum {

// Exact arbitrary-precision scalars. Int is sign+magnitude with a canonical
// positive zero; Rat is always kept in lowest terms with positive denominator.
using Int = mpz_class;
using Rat = mpq_class;

std::string to_decimal(const Int& v);
Int int_from_decimal(const std::string& s);

// Largest v with p^v | m. Rejects m == 0; p >= 2 (primality is the caller's
// contract, composite p would just count divisions).
unsigned long vp(const Int& m, const Int& p);
unsigned long vp(const Int& m, unsigned long p);

Int pow_int(const Int& base, unsigned long e);

// Exact integer n-th root: y with y^n == m, if any. Binary search on the
// bit-length bracket [2^floor((bits-1)/n), 2^ceil(bits/n)].
std::optional<Int> exact_nth_root(const Int& m, unsigned long n);

struct PowerWitness {
  Int y;
  unsigned long n = 0;
  bool operator==(const PowerWitness& o) const { return y == o.y && n == o.n; }
};

// All (y, n) with y^n == m, y >= 2, n_min <= n <= n_max. Finds the minimal
// base b and maximal exponent e with m == b^e by scanning prime exponents,
// then enumerates the divisors of e in range.
std::vector<PowerWitness> perfect_power_witnesses(const Int& m, unsigned long n_min,
                                                  unsigned long n_max);

bool is_prime_u64(std::uint64_t n);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t m);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

// Small prime factor digest: trial division by primes <= limit.
struct FactorDigest {
  std::vector<std::pair<std::uint64_t, unsigned long>> factors;  // (p, multiplicity)
  Int cofactor;           // remaining part, 1 when fully factored
  bool cofactor_prime = false;  // probable-prime flag for the cofactor
};
FactorDigest factor_digest(const Int& m, std::uint64_t prime_limit);

// Primes <= limit, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

}  // namespace powersum
