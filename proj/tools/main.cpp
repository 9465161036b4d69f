// Command-line front end: compute, bounds, sieve, search, tables, prove.
// Exit codes: 0 success/proven, 1 undecided/partial, 2 usage error,
// 3 internal invariant violation.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>

#include "powersum/orchestrator.hpp"

namespace {

struct CliFlags {
  bool json = false;
  powersum::OrchestratorOptions opt;
};

int emit(const powersum::CommandResult& r, bool json_mode) {
  if (json_mode) {
    std::cout << r.report.dump(2) << "\n";
  } else {
    std::cout << r.human;
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact power-sum equation toolkit: valuations, certified bounds, "
               "congruence sieve"};
  app.set_config("--config", "", "read options from a config file");
  app.require_subcommand(1);

  CliFlags flags;
  app.add_flag("--json", flags.json, "machine-readable report on stdout");
  app.add_option("--precision", flags.opt.digits, "working precision in decimal digits")
      ->check(CLI::Range(20, 1000));
  app.add_option("--max-primes", flags.opt.sieve.max_primes, "sieve prime budget");
  app.add_option("--max-modulus", flags.opt.sieve.max_modulus, "sieve modulus cap");
  app.add_option("--max-candidates", flags.opt.sieve.max_candidates,
                 "sieve lift candidate cap");
  app.add_option("--checkpoint", flags.opt.sieve.checkpoint_path,
                 "sieve checkpoint file");
  app.add_option("--checkpoint-dir", flags.opt.checkpoint_dir,
                 "directory for per-run checkpoint files");
  app.add_option("--checkpoint-every", flags.opt.sieve.checkpoint_every,
                 "write a checkpoint every N primes (0 disables)");
  app.add_flag("--resume", flags.opt.resume, "resume from existing checkpoints");
  app.add_option("--n-ceiling", flags.opt.n_ceiling, "sieve sweep ceiling for prove");
  app.add_option("--k-max", flags.opt.k_max, "direct-search split point");
  app.add_option("--k-sweep-max", flags.opt.k_sweep_max,
                 "cap-sweep ceiling for prove");
  app.add_option("--out-dir", flags.opt.out_dir, "output directory for table files");
  app.add_option("--workers", flags.opt.workers, "worker threads for independent jobs");
  app.add_option("--max-digits", flags.opt.digit_guard,
                 "refuse compute outputs above this many decimal digits");

  // compute
  std::uint64_t c_x = 0, c_k = 0;
  bool c_powers = false;
  auto* compute = app.add_subcommand("compute", "exact T_k(x), S_k(x), factor digest");
  compute->add_option("x", c_x, "lower endpoint")->required();
  compute->add_option("k", c_k, "exponent")->required();
  compute->add_flag("--powers", c_powers, "scan for perfect-power witnesses, n in [2,12]");

  // bounds
  std::uint64_t b_x = 0;
  std::optional<std::uint64_t> b_k;
  std::uint64_t b_k_raw = 0;
  auto* bounds = app.add_subcommand("bounds", "exponent bounds / certified bound rows");
  bounds->add_option("x", b_x, "x value")->required();
  auto* b_k_opt = bounds->add_option("--k", b_k_raw, "specific k");

  // sieve
  std::uint64_t s_x = 0, s_n = 0;
  auto* sieve = app.add_subcommand("sieve", "congruence sieve for fixed (x, n)");
  sieve->add_option("x", s_x, "x value")->required();
  sieve->add_option("n", s_n, "exponent (composites reduced automatically)")->required();

  // search
  std::uint64_t g_xmin = 2, g_xmax = 13, g_kmax = 83, g_nmin = 3, g_nmax = 12;
  auto* search = app.add_subcommand("search", "direct perfect-power scan of T_k(x)");
  search->add_option("--x-min", g_xmin, "first x");
  search->add_option("--x-max", g_xmax, "last x");
  search->add_option("--k-max", g_kmax, "largest k");
  search->add_option("--n-min", g_nmin, "smallest exponent");
  search->add_option("--n-max", g_nmax, "largest exponent");

  // tables
  auto* tables = app.add_subcommand("tables", "recompute and diff the bound tables");

  // prove
  std::uint64_t p_x = 0;
  auto* prove = app.add_subcommand("prove", "end-to-end no-solution pipeline for x");
  prove->add_option("x", p_x, "x value in [2, 13]")->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*b_k_opt) b_k = b_k_raw;
    if (compute->parsed()) return emit(powersum::cmd_compute(c_x, c_k, c_powers, flags.opt), flags.json);
    if (bounds->parsed()) return emit(powersum::cmd_bounds(b_x, b_k, flags.opt), flags.json);
    if (sieve->parsed()) return emit(powersum::cmd_sieve(s_x, s_n, flags.opt), flags.json);
    if (search->parsed()) {
      return emit(powersum::cmd_search(g_xmin, g_xmax, g_kmax, g_nmin, g_nmax, flags.opt),
                  flags.json);
    }
    if (tables->parsed()) return emit(powersum::cmd_tables(flags.opt), flags.json);
    if (prove->parsed()) return emit(powersum::cmd_prove(p_x, flags.opt), flags.json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
