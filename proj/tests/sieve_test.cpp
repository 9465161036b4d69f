#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "powersum/checkpoint.hpp"
#include "powersum/power_sums.hpp"
#include "powersum/sieve.hpp"

using namespace powersum;

namespace {

// enumeration oracle for n-th power residues
std::set<std::uint64_t> residues_oracle(std::uint64_t p, std::uint64_t n) {
  std::set<std::uint64_t> s;
  for (std::uint64_t a = 0; a < p; ++a) {
    std::uint64_t v = 1 % p;
    for (std::uint64_t i = 0; i < n; ++i) v = (v * a) % p;
    s.insert(v);
  }
  return s;
}

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("nth power residues") {
  auto r = nth_power_residues(7, 3);
  CHECK(r == std::vector<std::uint64_t>{0, 1, 6});
  r = nth_power_residues(13, 3);
  CHECK(r == std::vector<std::uint64_t>{0, 1, 5, 8, 12});
  r = nth_power_residues(11, 1);
  CHECK(r.size() == 11);
  for (std::uint64_t p : {5ull, 7ull, 13ull, 31ull}) {
    for (std::uint64_t n : {2ull, 3ull, 4ull, 5ull}) {
      auto fast = nth_power_residues(p, n);
      auto oracle = residues_oracle(p, n);
      CHECK(std::set<std::uint64_t>(fast.begin(), fast.end()) == oracle);
    }
  }
}

TEST_CASE("t mod table") {
  auto t = t_mod_table(2, 7);
  CHECK(t == std::vector<std::uint64_t>{0, 4, 0, 1, 0, 2});
  CHECK(t_mod_table(2, 13)[0] == 7);
  for (auto v : t_mod_table(5, 11)) CHECK(v < 11);
}

TEST_CASE("t mod table is periodic with period p-1, exact-reduction oracle") {
  for (std::uint64_t x = 1; x <= 13; ++x) {
    for (std::uint64_t p : primes_up_to(100)) {
      if (p < 3) continue;
      auto table = t_mod_table(x, p);
      for (std::uint64_t k = 1; k <= 3 * (p - 1); ++k) {
        Int exact = power_sum_upper(k, Int(x), SumRoute::Direct);
        std::uint64_t want = mpz_fdiv_ui(exact.get_mpz_t(), p);
        CHECK(table[(k - 1) % (p - 1)] == want);
      }
    }
  }
}

TEST_CASE("admissible residues") {
  auto adm = admissible_k_residues(2, 7, 3);
  CHECK(adm == std::vector<std::uint64_t>{1, 3, 4, 5});
  // residue 1 mod 12 is inadmissible at p=13 (T_1(2) = 7 is not a cube)
  auto adm13 = admissible_k_residues(2, 13, 3);
  CHECK(std::find(adm13.begin(), adm13.end(), 1) == adm13.end());
  // n = 1: every residue is a first power
  auto all = admissible_k_residues(3, 11, 1);
  CHECK(all.size() == 10);
}

TEST_CASE("lift and filter") {
  SieveConfig cfg;
  SieveState st;
  st.x = 2;
  st.n = 3;
  st.modulus = 6;
  st.residues = {1, 3, 4, 5};
  st.primes_used = {7};
  st.status = SieveState::Status::Running;

  SieveState next = lift_and_filter(st, 13, cfg);
  CHECK(next.modulus == 12);
  CHECK(next.residues == std::vector<std::uint64_t>{3, 4, 9, 10});
  CHECK(next.status == SieveState::Status::Running);

  // empty input stays empty and is proven
  SieveState empty = st;
  empty.residues.clear();
  empty.status = SieveState::Status::Proven;
  SieveState lifted = lift_and_filter(empty, 13, cfg);
  CHECK(lifted.residues.empty());
  CHECK(lifted.status == SieveState::Status::Proven);

  // p with p-1 | o keeps the modulus and residues only shrink
  SieveState same = lift_and_filter(next, 5, cfg);  // 5 - 1 = 4 divides 12
  CHECK(same.modulus == 12);
  for (auto r : same.residues) {
    CHECK(std::find(next.residues.begin(), next.residues.end(), r) !=
          next.residues.end());
  }
}

TEST_CASE("lift rejects a consumed prime") {
  SieveState st;
  st.x = 2;
  st.n = 3;
  st.modulus = 6;
  st.residues = {1};
  st.primes_used = {7};
  CHECK_THROWS_AS(lift_and_filter(st, 7, SieveConfig{}), std::invalid_argument);
}

TEST_CASE("modulus cap surfaces as the dedicated error") {
  SieveState st;
  st.x = 2;
  st.n = 3;
  st.modulus = 6;
  st.residues = {1, 3};
  st.primes_used = {7};
  SieveConfig cfg;
  cfg.max_modulus = 10;
  CHECK_THROWS_AS(lift_and_filter(st, 13, cfg), ModulusCapExceeded);
}

TEST_CASE("run_sieve proves the small regressions") {
  SieveConfig cfg;
  SieveState s = run_sieve(2, 3, cfg);
  CHECK(s.status == SieveState::Status::Proven);
  CHECK(s.primes_used.front() == 7);

  s = run_sieve(4, 3, cfg);
  CHECK(s.status == SieveState::Status::Proven);

  s = run_sieve(5, 4, cfg);
  CHECK(s.status == SieveState::Status::Proven);

  CHECK_THROWS_AS(run_sieve(2, 1, cfg), std::invalid_argument);
  CHECK_THROWS_AS(run_sieve(2, 9, cfg), std::invalid_argument);  // composite: reduce first
}

TEST_CASE("prime budget exhaustion reports undecided") {
  SieveConfig cfg;
  cfg.max_primes = 1;
  SieveState s = run_sieve(2, 3, cfg);
  CHECK(s.status == SieveState::Status::Undecided);
  CHECK(!s.diagnostic.empty());
}

TEST_CASE("order independence of the final state") {
  SieveConfig cfg;
  auto apply = [&](const std::vector<std::uint64_t>& primes) {
    SieveState st;
    st.x = 3;
    st.n = 3;
    st.modulus = primes[0] - 1;
    st.residues = admissible_k_residues(3, primes[0], 3);
    st.primes_used = {primes[0]};
    st.status = SieveState::Status::Running;
    for (std::size_t i = 1; i < primes.size(); ++i) {
      if (st.status != SieveState::Status::Running) break;
      st = lift_and_filter(st, primes[i], cfg);
    }
    return st;
  };
  // 7, 13, 19, 31 in two different orders (seed prime differs, final state not)
  SieveState a = apply({7, 13, 19, 31});
  SieveState b = apply({13, 31, 7, 19});
  CHECK(a.modulus == b.modulus);
  CHECK(a.residues == b.residues);
  std::vector<std::uint64_t> pa = a.primes_used, pb = b.primes_used;
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  CHECK(pa == pb);
}

TEST_CASE("residue count never grows faster than the modulus") {
  SieveConfig cfg;
  SieveRunner runner(3, 3, cfg);
  SieveState prev = runner.state();
  bool more = runner.step();
  prev = runner.state();
  while (more) {
    more = runner.step();
    const SieveState& cur = runner.state();
    if (prev.modulus > 0 && cur.modulus >= prev.modulus) {
      // |K(o')| <= |K(o)| * (o'/o)
      CHECK(cur.residues.size() * prev.modulus <= prev.residues.size() * cur.modulus);
    }
    prev = cur;
  }
}

TEST_CASE("proven runs reject every exponent class, exact-reduction spot check") {
  SieveConfig cfg;
  for (auto [x, n] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{3, 3},
                                                                          {2, 5}}) {
    SieveState s = run_sieve(x, n, cfg);
    REQUIRE(s.status == SieveState::Status::Proven);
    std::vector<std::vector<bool>> table;
    for (std::uint64_t p : s.primes_used) {
      std::vector<bool> is_pow(p, false);
      for (std::uint64_t r : nth_power_residues(p, n)) is_pow[r] = true;
      table.push_back(std::move(is_pow));
    }
    for (std::uint64_t k = 1; k <= 2000; ++k) {
      Int t = power_sum_upper(k, Int(x), SumRoute::Direct);
      bool rejected = false;
      for (std::size_t i = 0; i < s.primes_used.size() && !rejected; ++i) {
        std::uint64_t r = mpz_fdiv_ui(t.get_mpz_t(), s.primes_used[i]);
        if (!table[i][r]) rejected = true;
      }
      REQUIRE(rejected);
    }
  }
}

TEST_CASE("checkpoint round trip") {
  SieveConfig cfg;
  SieveRunner runner(2, 5, cfg);
  runner.step();
  runner.step();
  const SieveState& mid = runner.state();
  const std::string path = temp_path("ps_ckpt_roundtrip.ckpt");
  checkpoint_save(mid, path);
  SieveState loaded = checkpoint_load(path);
  CHECK(loaded == mid);
  std::remove(path.c_str());
}

TEST_CASE("checkpoint rejects corrupt and mismatched files") {
  const std::string path = temp_path("ps_ckpt_bad.ckpt");
  {
    std::ofstream out(path);
    out << "format_version 999\nx 2\nn 3\nmodulus 6\nstatus running\nprimes_used 7\n"
           "residues 1 3\n";
  }
  CHECK_THROWS_AS(checkpoint_load(path), std::runtime_error);
  {
    std::ofstream out(path);
    out << "x 2\nn 3\nmodulus 6\nstatus running\nprimes_used 7\nresidues 1 3\n";
  }
  CHECK_THROWS_AS(checkpoint_load(path), std::runtime_error);
  {
    // status claims proven but residues remain
    std::ofstream out(path);
    out << "format_version 1\nx 2\nn 3\nmodulus 6\nstatus proven\nprimes_used 7\n"
           "residues 1 3\n";
  }
  CHECK_THROWS_AS(checkpoint_load(path), std::runtime_error);
  std::remove(path.c_str());
}

TEST_CASE("interrupted and resumed run matches the uninterrupted one") {
  SieveConfig cfg;
  SieveState full = run_sieve(3, 3, cfg);

  SieveRunner stepper(3, 3, cfg);
  std::vector<SieveState> snapshots;
  snapshots.push_back(stepper.state());
  while (stepper.step()) snapshots.push_back(stepper.state());

  for (const SieveState& snap : snapshots) {
    if (snap.primes_used.empty()) continue;  // pre-seed state
    SieveRunner resumed(snap, cfg);
    SieveState end = resumed.run();
    CHECK(end == full);
  }
}
