#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace powersum {

// State of the local elimination for fixed (x, n): the set of exponent
// residues k mod `modulus` not yet ruled out, plus the primes consumed.
// status == Proven exactly when the residue set is empty.
struct SieveState {
  std::uint64_t x = 0;
  std::uint64_t n = 0;
  std::uint64_t modulus = 0;             // current o_i
  std::vector<std::uint64_t> residues;   // sorted, in [0, modulus)
  std::vector<std::uint64_t> primes_used;  // ascending
  enum class Status { Running, Proven, Undecided } status = Status::Running;
  std::string diagnostic;

  bool operator==(const SieveState& o) const {
    return x == o.x && n == o.n && modulus == o.modulus && residues == o.residues &&
           primes_used == o.primes_used && status == o.status;
  }
};

struct SieveConfig {
  std::uint64_t max_primes = 500;
  // The modulus itself is just a 64-bit number; the memory hazard is the
  // candidate count, guarded separately below.
  std::uint64_t max_modulus = 1'000'000'000'000;
  std::uint64_t max_candidates = 50'000'000;  // guard on the transient lift size
  std::uint64_t checkpoint_every = 0;         // 0 disables checkpointing
  std::string checkpoint_path;
};

// { a^n mod p : 0 <= a < p }, sorted, always containing 0.
std::vector<std::uint64_t> nth_power_residues(std::uint64_t p, std::uint64_t n);

// Entry at index k-1 is T_k(x) mod p for k = 1..p-1; T_k(x) mod p is periodic
// in k with period p-1 (bases divisible by p contribute 0 at every k >= 1, so
// the k = p-1 column uses the actual sum, not a shortcut).
std::vector<std::uint64_t> t_mod_table(std::uint64_t x, std::uint64_t p);

// Residues r mod (p-1) whose exponent class passes the n-th power residue
// test at p; k = 0 mod (p-1) is represented as residue 0.
std::vector<std::uint64_t> admissible_k_residues(std::uint64_t x, std::uint64_t p,
                                                 std::uint64_t n);

struct ModulusCapExceeded : std::runtime_error {
  explicit ModulusCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Expand the residue set from modulus o to lcm(o, p-1), keep only residues
// whose class mod (p-1) is admissible at p, and consume p.
SieveState lift_and_filter(const SieveState& state, std::uint64_t p,
                           const SieveConfig& config);

// Step-wise driver: iterates primes p = 2*i*n + 1 ascending. Exposed so runs
// can be interrupted and resumed deterministically.
class SieveRunner {
 public:
  SieveRunner(std::uint64_t x, std::uint64_t n, SieveConfig config);
  // Resume from a loaded state; config still applies.
  SieveRunner(SieveState state, SieveConfig config);

  const SieveState& state() const { return state_; }
  // Applies the next prime. Returns false once no further step is possible
  // (Proven, budget exhausted, or cap exceeded).
  bool step();
  // Runs to completion; invokes on_checkpoint per config.checkpoint_every.
  SieveState run(const std::function<void(const SieveState&)>& on_checkpoint = {});

 private:
  std::uint64_t next_prime() const;
  SieveState state_;
  SieveConfig config_;
  bool seeded_ = false;
};

// n must be an odd prime or 4 (composite reduction happens in the
// orchestrator). Deterministic for fixed config.
SieveState run_sieve(std::uint64_t x, std::uint64_t n, const SieveConfig& config);

}  // namespace powersum
