#include <doctest.h>

#include <thread>
#include <vector>

#include "powersum/bernoulli.hpp"

using namespace powersum;

namespace {

// Independent oracle: series inversion of (e^z - 1)/z. The m-th number is
// m! times the m-th coefficient of the reciprocal series.
std::vector<Rat> bernoulli_by_series(unsigned long m_max) {
  std::vector<Rat> e(m_max + 1), g(m_max + 1);
  Int fact(1);
  for (unsigned long j = 0; j <= m_max; ++j) {
    fact *= static_cast<unsigned long>(j + 1);
    e[j] = Rat(Int(1), fact);  // 1/(j+1)!
    e[j].canonicalize();
  }
  g[0] = 1;
  for (unsigned long m = 1; m <= m_max; ++m) {
    Rat s(0);
    for (unsigned long j = 1; j <= m; ++j) s += e[j] * g[m - j];
    g[m] = -s;
    g[m].canonicalize();
  }
  std::vector<Rat> b(m_max + 1);
  Int mf(1);
  for (unsigned long m = 0; m <= m_max; ++m) {
    if (m > 0) mf *= m;
    b[m] = g[m] * Rat(mf);
    b[m].canonicalize();
  }
  return b;
}

}  // namespace

TEST_CASE("bernoulli numbers against the series oracle") {
  auto oracle = bernoulli_by_series(24);
  for (unsigned long m = 0; m <= 24; ++m) {
    CHECK(bernoulli_number(m) == oracle[m]);
  }
  CHECK(bernoulli_number(0) == 1);
  CHECK(bernoulli_number(1) == Rat(-1, 2));
  CHECK(bernoulli_number(12) == Rat(-691, 2730));
  for (unsigned long m = 3; m <= 23; m += 2) CHECK(bernoulli_number(m) == 0);
}

TEST_CASE("bernoulli polynomial values") {
  CHECK(bernoulli_poly(1, Rat(1)) == Rat(1, 2));   // B_1(t) = t - 1/2
  CHECK(bernoulli_poly(3, Rat(1)) == 0);
  CHECK(bernoulli_poly(2, Rat(1, 2)) == Rat(-1, 12));  // B_2(t) = t^2 - t + 1/6
  // polynomial form evaluates identically
  for (unsigned long q = 0; q <= 12; ++q) {
    for (long num = -4; num <= 4; ++num) {
      Rat t(num, 3);
      t.canonicalize();
      CHECK(bernoulli_polynomial(q).eval(t) == bernoulli_poly(q, t));
    }
  }
}

TEST_CASE("reflection identity") {
  // B_q(1 - t) = (-1)^q B_q(t)
  for (unsigned long q = 0; q <= 20; ++q) {
    for (long num = -6; num <= 6; ++num) {
      for (long den : {1L, 2L, 3L, 5L}) {
        Rat t(num, den);
        t.canonicalize();
        Rat lhs = bernoulli_poly(q, Rat(1) - t);
        Rat rhs = bernoulli_poly(q, t);
        if (q % 2 == 1) rhs = -rhs;
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("cache is safe under concurrent first access") {
  std::vector<std::thread> threads;
  std::vector<Rat> results(8);
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back([i, &results] { results[i] = bernoulli_number(60 + i % 3); });
  }
  for (auto& t : threads) t.join();
  for (int i = 0; i < 8; ++i) CHECK(results[i] == bernoulli_number(60 + i % 3));
}

TEST_CASE("duplication identity") {
  // B_q(t) + B_q(t + 1/2) = 2^(1-q) B_q(2t)
  for (unsigned long q = 0; q <= 20; ++q) {
    Rat scale = (q == 0) ? Rat(2) : Rat(Int(1), pow_int(Int(2), q - 1));
    scale.canonicalize();
    for (long num = -5; num <= 5; ++num) {
      Rat t(num, 4);
      t.canonicalize();
      Rat lhs = bernoulli_poly(q, t) + bernoulli_poly(q, t + Rat(1, 2));
      CHECK(lhs == scale * bernoulli_poly(q, 2 * t));
    }
  }
}
