#include "powersum/integers.hpp"

#include <algorithm>
#include <stdexcept>

namespace powersum {

std::string to_decimal(const Int& v) { return v.get_str(10); }

Int int_from_decimal(const std::string& s) {
  Int v;
  if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0) {
    throw std::invalid_argument("int_from_decimal: not a decimal integer: " + s);
  }
  return v;
}

unsigned long vp(const Int& m, const Int& p) {
  if (m == 0) throw std::invalid_argument("vp: argument must be nonzero");
  if (p < 2) throw std::invalid_argument("vp: p must be >= 2");
  Int q;
  return static_cast<unsigned long>(
      mpz_remove(q.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t()));
}

unsigned long vp(const Int& m, unsigned long p) { return vp(m, Int(p)); }

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

std::optional<Int> exact_nth_root(const Int& m, unsigned long n) {
  if (m < 1) throw std::invalid_argument("exact_nth_root: m must be >= 1");
  if (n < 2) throw std::invalid_argument("exact_nth_root: n must be >= 2");
  const std::size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);  // m in [2^(bits-1), 2^bits)
  Int lo = Int(1) << static_cast<unsigned long>((bits - 1) / n);
  Int hi = Int(1) << static_cast<unsigned long>((bits + n - 1) / n);
  while (lo < hi) {
    Int mid = (lo + hi + 1) / 2;
    if (pow_int(mid, n) <= m) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  if (pow_int(lo, n) == m) return lo;
  return std::nullopt;
}

std::vector<PowerWitness> perfect_power_witnesses(const Int& m, unsigned long n_min,
                                                  unsigned long n_max) {
  if (m < 2) throw std::invalid_argument("perfect_power_witnesses: m must be >= 2");
  if (n_min < 2 || n_min > n_max) {
    throw std::invalid_argument("perfect_power_witnesses: need 2 <= n_min <= n_max");
  }
  const std::size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
  // y >= 2 forces n <= bitlength(m); anything above cannot match.
  const unsigned long n_cap = std::min<unsigned long>(n_max, bits);

  // Peel prime exponents off m to reach the minimal base b with m == b^e.
  Int base = m;
  unsigned long e = 1;
  for (std::uint64_t p : primes_up_to(bits)) {
    for (;;) {
      if (p > mpz_sizeinbase(base.get_mpz_t(), 2)) break;
      auto r = exact_nth_root(base, static_cast<unsigned long>(p));
      if (!r) break;
      base = *r;
      e *= static_cast<unsigned long>(p);
    }
  }

  std::vector<PowerWitness> out;
  for (unsigned long d = n_min; d <= n_cap; ++d) {
    if (e % d == 0) out.push_back({pow_int(base, e / d), d});
  }
  return out;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  for (std::uint64_t d = 17; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t r = 1;
  base %= m;
  while (e > 0) {
    if (e & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

FactorDigest factor_digest(const Int& m, std::uint64_t prime_limit) {
  if (m < 1) throw std::invalid_argument("factor_digest: m must be >= 1");
  FactorDigest d;
  Int rest = m;
  for (std::uint64_t p : primes_up_to(prime_limit)) {
    if (rest == 1) break;
    if (mpz_cmp_ui(rest.get_mpz_t(), p) < 0) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      unsigned long v = vp(rest, p);
      d.factors.emplace_back(p, v);
      Int pv = pow_int(Int(static_cast<unsigned long>(p)), v);
      rest /= pv;
    }
  }
  d.cofactor = rest;
  if (rest > 1) {
    d.cofactor_prime = mpz_probab_prime_p(rest.get_mpz_t(), 25) > 0;
  }
  return d;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> comp(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (!comp[i]) {
      out.push_back(i);
      for (std::uint64_t j = i * i; j <= limit; j += i) comp[j] = true;
    }
  }
  return out;
}

}  // namespace powersum
