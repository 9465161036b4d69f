#include "powersum/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace powersum {

Rat bernoulli_number(unsigned long m) {
  static std::mutex mtx;
  static std::vector<Rat> cache{Rat(1)};
  std::scoped_lock lock(mtx);
  while (cache.size() <= m) {
    const unsigned long n = cache.size();
    // sum_{i=0}^{n} C(n+1, i) B_i = 0 for n >= 1
    Rat s(0);
    Int binom(1);  // C(n+1, 0)
    for (unsigned long i = 0; i < n; ++i) {
      s += Rat(binom) * cache[i];
      binom = binom * static_cast<unsigned long>(n + 1 - i) / (i + 1);
    }
    Rat b = -s / Rat(static_cast<unsigned long>(n + 1));
    b.canonicalize();
    cache.push_back(b);
  }
  Rat r = cache[m];
  return r;
}

Rat bernoulli_poly(unsigned long q, const Rat& t) {
  Rat s(0);
  Int binom(1);
  std::vector<Rat> powers(q + 1, Rat(1));
  for (unsigned long j = 1; j <= q; ++j) powers[j] = powers[j - 1] * t;
  for (unsigned long i = 0; i <= q; ++i) {
    s += Rat(binom) * bernoulli_number(i) * powers[q - i];
    if (i < q) binom = binom * static_cast<unsigned long>(q - i) / (i + 1);
  }
  s.canonicalize();
  return s;
}

RationalPoly bernoulli_polynomial(unsigned long q) {
  std::vector<Rat> coeffs(q + 1, Rat(0));
  Int binom(1);
  for (unsigned long i = 0; i <= q; ++i) {
    coeffs[q - i] = Rat(binom) * bernoulli_number(i);
    if (i < q) binom = binom * static_cast<unsigned long>(q - i) / (i + 1);
  }
  return RationalPoly(std::move(coeffs));
}

}  // namespace powersum
