#include "powersum/sieve.hpp"

#include <algorithm>
#include <stdexcept>

#include "powersum/checkpoint.hpp"
#include "powersum/integers.hpp"

namespace powersum {

std::vector<std::uint64_t> nth_power_residues(std::uint64_t p, std::uint64_t n) {
  if (!is_prime_u64(p)) throw std::invalid_argument("nth_power_residues: p must be prime");
  if (n < 1) throw std::invalid_argument("nth_power_residues: n must be >= 1");
  std::vector<bool> seen(p, false);
  seen[0] = true;
  // a^n for a != 0 depends on n mod (p-1)
  const std::uint64_t e = n % (p - 1) == 0 ? (p - 1) : n % (p - 1);
  for (std::uint64_t a = 1; a < p; ++a) {
    seen[powmod_u64(a, e, p)] = true;
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 0; r < p; ++r) {
    if (seen[r]) out.push_back(r);
  }
  return out;
}

std::vector<std::uint64_t> t_mod_table(std::uint64_t x, std::uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("t_mod_table: p must be prime");
  if (x < 1) throw std::invalid_argument("t_mod_table: x must be >= 1");
  std::vector<std::uint64_t> bases;
  bases.reserve(x);
  for (std::uint64_t b = x + 1; b <= 2 * x; ++b) bases.push_back(b % p);
  std::vector<std::uint64_t> powers(bases);  // b^1
  std::vector<std::uint64_t> table(p - 1, 0);
  for (std::uint64_t k = 1; k <= p - 1; ++k) {
    std::uint64_t s = 0;
    for (std::uint64_t v : powers) {
      s += v;
      if (s >= p) s -= p;
    }
    table[k - 1] = s;
    if (k < p - 1) {
      for (std::size_t i = 0; i < powers.size(); ++i) {
        powers[i] = mulmod_u64(powers[i], bases[i], p);
      }
    }
  }
  return table;
}

std::vector<std::uint64_t> admissible_k_residues(std::uint64_t x, std::uint64_t p,
                                                 std::uint64_t n) {
  const std::vector<std::uint64_t> table = t_mod_table(x, p);
  const std::vector<std::uint64_t> powers = nth_power_residues(p, n);
  std::vector<bool> is_power(p, false);
  for (std::uint64_t r : powers) is_power[r] = true;
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 0; r < p - 1; ++r) {
    // class r mod (p-1); representative exponent is r, except r = 0 which
    // stands for k = p-1
    const std::uint64_t idx = (r == 0) ? (p - 2) : (r - 1);
    if (is_power[table[idx]]) out.push_back(r);
  }
  return out;
}

namespace {

std::uint64_t lcm_capped(std::uint64_t a, std::uint64_t b, std::uint64_t cap,
                         bool* overflow) {
  const std::uint64_t g = gcd_u64(a, b);
  unsigned __int128 l = static_cast<unsigned __int128>(a / g) * b;
  if (l > cap) {
    *overflow = true;
    return 0;
  }
  *overflow = false;
  return static_cast<std::uint64_t>(l);
}

}  // namespace

SieveState lift_and_filter(const SieveState& state, std::uint64_t p,
                           const SieveConfig& config) {
  if (!is_prime_u64(p)) throw std::invalid_argument("lift_and_filter: p must be prime");
  if (std::find(state.primes_used.begin(), state.primes_used.end(), p) !=
      state.primes_used.end()) {
    throw std::invalid_argument("lift_and_filter: prime already consumed");
  }
  bool overflow = false;
  const std::uint64_t new_modulus =
      lcm_capped(state.modulus, p - 1, config.max_modulus, &overflow);
  if (overflow) {
    throw ModulusCapExceeded("lift_and_filter: lcm(" + std::to_string(state.modulus) +
                             ", " + std::to_string(p - 1) + ") exceeds max_modulus " +
                             std::to_string(config.max_modulus));
  }
  const std::uint64_t expansion = new_modulus / state.modulus;
  const unsigned __int128 candidates =
      static_cast<unsigned __int128>(state.residues.size()) * expansion;
  if (candidates > config.max_candidates) {
    throw ModulusCapExceeded("lift_and_filter: candidate count " +
                             std::to_string(static_cast<std::uint64_t>(candidates)) +
                             " exceeds max_candidates " +
                             std::to_string(config.max_candidates));
  }

  std::vector<bool> admissible(p - 1, false);
  for (std::uint64_t r : admissible_k_residues(state.x, p, state.n)) admissible[r] = true;

  SieveState next = state;
  next.modulus = new_modulus;
  next.residues.clear();
  for (std::uint64_t j = 0; j < expansion; ++j) {
    const std::uint64_t base = j * state.modulus;
    for (std::uint64_t r : state.residues) {
      const std::uint64_t lifted = base + r;
      if (admissible[lifted % (p - 1)]) next.residues.push_back(lifted);
    }
  }
  std::sort(next.residues.begin(), next.residues.end());
  next.primes_used.push_back(p);
  std::sort(next.primes_used.begin(), next.primes_used.end());
  next.status = next.residues.empty() ? SieveState::Status::Proven
                                      : SieveState::Status::Running;
  return next;
}

SieveRunner::SieveRunner(std::uint64_t x, std::uint64_t n, SieveConfig config)
    : config_(std::move(config)) {
  if (n < 3) throw std::invalid_argument("SieveRunner: n must be >= 3");
  if (n != 4 && !(n % 2 == 1 && is_prime_u64(n))) {
    throw std::invalid_argument("SieveRunner: n must be an odd prime or 4");
  }
  if (x < 1) throw std::invalid_argument("SieveRunner: x must be >= 1");
  state_.x = x;
  state_.n = n;
  state_.modulus = 1;
  state_.status = SieveState::Status::Running;
}

SieveRunner::SieveRunner(SieveState state, SieveConfig config)
    : state_(std::move(state)), config_(std::move(config)) {
  seeded_ = !state_.primes_used.empty();
  // an exhausted run may be resumed under a larger budget
  if (state_.status == SieveState::Status::Undecided && !state_.residues.empty()) {
    state_.status = SieveState::Status::Running;
    state_.diagnostic.clear();
  }
}

std::uint64_t SieveRunner::next_prime() const {
  const std::uint64_t last = state_.primes_used.empty() ? 0 : state_.primes_used.back();
  for (std::uint64_t i = 1;; ++i) {
    const std::uint64_t p = 2 * i * state_.n + 1;
    if (p <= last) continue;
    if (is_prime_u64(p)) return p;
  }
}

bool SieveRunner::step() {
  if (state_.status != SieveState::Status::Running) return false;
  if (state_.primes_used.size() >= config_.max_primes) {
    state_.status = SieveState::Status::Undecided;
    state_.diagnostic = "prime budget exhausted (" + std::to_string(config_.max_primes) +
                        " primes, modulus " + std::to_string(state_.modulus) + ", " +
                        std::to_string(state_.residues.size()) + " residues left)";
    return false;
  }
  const std::uint64_t p = next_prime();
  if (!seeded_) {
    state_.modulus = p - 1;
    state_.residues = admissible_k_residues(state_.x, p, state_.n);
    state_.primes_used.push_back(p);
    state_.status = state_.residues.empty() ? SieveState::Status::Proven
                                            : SieveState::Status::Running;
    seeded_ = true;
    return state_.status == SieveState::Status::Running;
  }
  try {
    state_ = lift_and_filter(state_, p, config_);
  } catch (const ModulusCapExceeded& e) {
    state_.status = SieveState::Status::Undecided;
    state_.diagnostic = e.what();
    return false;
  }
  return state_.status == SieveState::Status::Running;
}

SieveState SieveRunner::run(const std::function<void(const SieveState&)>& on_checkpoint) {
  std::uint64_t steps_since_checkpoint = 0;
  while (step()) {
    ++steps_since_checkpoint;
    if (config_.checkpoint_every > 0 &&
        steps_since_checkpoint % config_.checkpoint_every == 0) {
      if (!config_.checkpoint_path.empty()) {
        checkpoint_save(state_, config_.checkpoint_path);
      }
      if (on_checkpoint) on_checkpoint(state_);
    }
  }
  if (config_.checkpoint_every > 0 && !config_.checkpoint_path.empty()) {
    checkpoint_save(state_, config_.checkpoint_path);
  }
  return state_;
}

SieveState run_sieve(std::uint64_t x, std::uint64_t n, const SieveConfig& config) {
  SieveRunner runner(x, n, config);
  return runner.run();
}

}  // namespace powersum
