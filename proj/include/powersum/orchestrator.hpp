#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "powersum/laurent.hpp"
#include "powersum/sieve.hpp"
#include "powersum/valuation.hpp"

namespace powersum {

using json = nlohmann::json;

struct OrchestratorOptions {
  int digits = kDefaultDigits;
  SieveConfig sieve;
  std::uint64_t n_ceiling = 50;       // sieve sweep ceiling in prove
  std::uint64_t k_max = 83;           // direct-search split point
  std::uint64_t k_sweep_max = 200000; // cap sweep ceiling in prove
  std::uint64_t factor_limit = 10000; // first-pass prime limit for the cap sweep
  std::uint64_t escalation_limit = 1000000;  // exhaustive trial-division limit
  std::uint64_t digit_guard = 2000000;       // compute refuses larger outputs
  std::string out_dir = ".";
  std::string checkpoint_dir;
  bool resume = false;
  unsigned workers = 2;
};

// Reduction of a composite exponent to {odd prime divisors} + {4 if 4 | n}:
// y^n is a perfect p-th power for each entry, so sieving the reduced set
// covers n. Nonempty for every n >= 3.
std::vector<std::uint64_t> reduce_exponent(std::uint64_t n);

// Odd primes <= ceiling plus 4: the union of reduce_exponent over [3, ceiling].
std::vector<std::uint64_t> sieve_exponents_up_to(std::uint64_t ceiling);

// Smallest prime p <= prime_limit dividing T_k(x), with cap = v_p(T_k(x)).
// A solution with this k has p | y, so n <= cap whenever one exists.
std::optional<std::pair<std::uint64_t, unsigned long>> small_prime_exponent_cap(
    std::uint64_t x, std::uint64_t k, std::uint64_t prime_limit);

struct CommandResult {
  json report;
  std::string human;
  int exit_code = 0;
};

CommandResult cmd_compute(std::uint64_t x, std::uint64_t k, bool scan_powers,
                          const OrchestratorOptions& opt);
CommandResult cmd_bounds(std::uint64_t x, std::optional<std::uint64_t> k,
                         const OrchestratorOptions& opt);
CommandResult cmd_sieve(std::uint64_t x, std::uint64_t n, const OrchestratorOptions& opt);
CommandResult cmd_search(std::uint64_t x_min, std::uint64_t x_max, std::uint64_t k_max,
                         std::uint64_t n_min, std::uint64_t n_max,
                         const OrchestratorOptions& opt);
CommandResult cmd_tables(const OrchestratorOptions& opt);
CommandResult cmd_prove(std::uint64_t x, const OrchestratorOptions& opt);

}  // namespace powersum
