#include "powersum/orchestrator.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "powersum/checkpoint.hpp"
#include "powersum/power_sums.hpp"

namespace powersum {

namespace {

// x in {2,3,6,7,10,11} goes through the linear-forms bounds; the rest of
// [2,13] is handled by the valuation route.
bool in_baker_family(std::uint64_t x) {
  return std::find(kBakerX.begin(), kBakerX.end(), static_cast<int>(x)) != kBakerX.end();
}

const char* status_word(SieveState::Status s) {
  switch (s) {
    case SieveState::Status::Running: return "running";
    case SieveState::Status::Proven: return "proven";
    case SieveState::Status::Undecided: return "undecided";
  }
  return "?";
}

json sieve_state_json(const SieveState& s) {
  return json{{"x", s.x},
              {"n", s.n},
              {"modulus", s.modulus},
              {"residues_left", s.residues.size()},
              {"primes_used", s.primes_used.size()},
              {"last_prime", s.primes_used.empty() ? 0 : s.primes_used.back()},
              {"status", status_word(s.status)},
              {"diagnostic", s.diagnostic}};
}

json outcome_json(const BoundOutcome& o) {
  json j{{"case_label", std::string(o.case_label)}};
  switch (o.kind) {
    case BoundOutcome::Kind::UpperBound:
      j["kind"] = "upper_bound";
      j["n_max"] = o.n_max;
      break;
    case BoundOutcome::Kind::NoSolutionForNGe2:
      j["kind"] = "no_solution_n_ge_2";
      break;
    case BoundOutcome::Kind::NotCovered:
      j["kind"] = "not_covered";
      break;
  }
  return j;
}

json bound_report_json(const BoundReport& r) {
  return json{{"x", r.x},
              {"case", to_string(r.c)},
              {"rho", r.rho},
              {"mu", r.mu},
              {"epsilon", r.epsilon},
              {"epsilon_table", r.epsilon_table},
              {"H", r.constants.H},
              {"omega", r.constants.omega},
              {"theta", r.constants.theta},
              {"C0", r.constants.C0},
              {"C", r.constants.C},
              {"Cprime", r.constants.Cprime},
              {"hprime_const", r.constants.hprime_const},
              {"reference_bound", r.reference_bound},
              {"derived_bound", r.derived_bound},
              {"certified", r.certified},
              {"rhs_at_reference_plus_1", r.rhs_at_reference_plus_1},
              {"margin", r.margin},
              {"notes", r.notes}};
}

std::string witness_str(const PowerWitness& w) {
  return "(" + w.y.get_str() + ", " + std::to_string(w.n) + ")";
}

std::string sieve_checkpoint_path(const OrchestratorOptions& opt, std::uint64_t x,
                                  std::uint64_t n) {
  if (!opt.checkpoint_dir.empty()) {
    return opt.checkpoint_dir + "/sieve_x" + std::to_string(x) + "_n" +
           std::to_string(n) + ".ckpt";
  }
  return opt.sieve.checkpoint_path;
}

SieveState run_one_sieve(std::uint64_t x, std::uint64_t n,
                         const OrchestratorOptions& opt) {
  SieveConfig cfg = opt.sieve;
  cfg.checkpoint_path = sieve_checkpoint_path(opt, x, n);
  if (opt.resume && !cfg.checkpoint_path.empty() &&
      std::filesystem::exists(cfg.checkpoint_path)) {
    SieveState loaded = checkpoint_load(cfg.checkpoint_path);
    if (loaded.x != x || loaded.n != n) {
      throw std::invalid_argument("checkpoint " + cfg.checkpoint_path +
                                  " belongs to a different (x, n) run");
    }
    SieveRunner runner(std::move(loaded), cfg);
    return runner.run();
  }
  SieveRunner runner(x, n, cfg);
  return runner.run();
}

// Deterministic fan-out: results land by index.
std::vector<SieveState> run_sieve_jobs(const std::vector<std::uint64_t>& exps,
                                       std::uint64_t x, const OrchestratorOptions& opt) {
  std::vector<SieveState> results(exps.size());
  std::size_t next = 0;
  std::mutex m;
  auto worker = [&]() {
    for (;;) {
      std::size_t idx;
      {
        std::scoped_lock lk(m);
        if (next >= exps.size()) return;
        idx = next++;
      }
      results[idx] = run_one_sieve(x, exps[idx], opt);
    }
  };
  const unsigned nw = std::max(1u, opt.workers);
  std::vector<std::thread> threads;
  for (unsigned i = 0; i + 1 < nw && i + 1 < exps.size(); ++i) {
    threads.emplace_back(worker);
  }
  worker();
  for (auto& t : threads) t.join();
  return results;
}

}  // namespace

std::vector<std::uint64_t> reduce_exponent(std::uint64_t n) {
  if (n < 3) throw std::invalid_argument("reduce_exponent: n must be >= 3");
  std::vector<std::uint64_t> out;
  std::uint64_t rest = n;
  if (rest % 4 == 0) out.push_back(4);
  while (rest % 2 == 0) rest /= 2;
  for (std::uint64_t p = 3; p * p <= rest; p += 2) {
    if (rest % p == 0) {
      out.push_back(p);
      while (rest % p == 0) rest /= p;
    }
  }
  if (rest > 1) out.push_back(rest);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> sieve_exponents_up_to(std::uint64_t ceiling) {
  std::vector<std::uint64_t> out;
  if (ceiling >= 4) out.push_back(4);
  for (std::uint64_t p : primes_up_to(ceiling)) {
    if (p >= 3) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::pair<std::uint64_t, unsigned long>> small_prime_exponent_cap(
    std::uint64_t x, std::uint64_t k, std::uint64_t prime_limit) {
  const Int t = power_sum_upper(k, Int(static_cast<unsigned long>(x)),
                                x <= 10000 ? SumRoute::Direct : SumRoute::Bernoulli);
  for (std::uint64_t p : primes_up_to(prime_limit)) {
    if (mpz_divisible_ui_p(t.get_mpz_t(), p)) {
      return std::make_pair(p, vp(t, p));
    }
  }
  return std::nullopt;
}

CommandResult cmd_compute(std::uint64_t x, std::uint64_t k, bool scan_powers,
                          const OrchestratorOptions& opt) {
  if (x < 1 || k < 1) throw std::invalid_argument("compute: need x >= 1, k >= 1");
  const double est_digits = static_cast<double>(k) * std::log10(2.0 * x) + 4;
  if (est_digits > static_cast<double>(opt.digit_guard)) {
    throw std::invalid_argument("compute: output would exceed the digit guard (" +
                                std::to_string(opt.digit_guard) + " digits)");
  }
  const Int xi(static_cast<unsigned long>(x));
  // direct summation beats the closed form until x gets large
  const SumRoute route = (x <= 100000) ? SumRoute::Direct : SumRoute::Bernoulli;
  const Int t = power_sum_upper(k, xi, route);
  const Int s = power_sum(k, xi, route);

  json rep{{"command", "compute"}, {"inputs", {{"x", x}, {"k", k}}}};
  std::ostringstream hs;
  hs << "T_" << k << "(" << x << ") = " << t.get_str() << "\n";
  hs << "S_" << k << "(" << x << ") = " << s.get_str() << "\n";
  rep["outputs"]["T"] = t.get_str();
  rep["outputs"]["S"] = s.get_str();

  FactorDigest digest = factor_digest(t, 10000);
  json jf = json::array();
  std::ostringstream fs;
  for (auto& [p, e] : digest.factors) {
    jf.push_back({{"p", p}, {"e", e}});
    fs << (fs.tellp() > 0 ? " * " : "") << p;
    if (e > 1) fs << "^" << e;
  }
  if (digest.cofactor > 1) {
    jf.push_back({{"cofactor", digest.cofactor.get_str()},
                  {"probable_prime", digest.cofactor_prime}});
    fs << (fs.tellp() > 0 ? " * " : "") << "[" << digest.cofactor.get_str()
       << (digest.cofactor_prime ? " (probable prime)]" : " (composite)]");
  }
  rep["outputs"]["factor_digest"] = jf;
  hs << "factor digest of T: " << fs.str() << "\n";

  if (scan_powers) {
    json jw = json::array();
    json jws = json::array();
    if (t >= 2) {
      for (const auto& w : perfect_power_witnesses(t, 2, 12)) {
        jw.push_back({{"y", w.y.get_str()}, {"n", w.n}});
        hs << "T witness: " << witness_str(w) << "\n";
      }
    }
    if (s >= 2) {
      for (const auto& w : perfect_power_witnesses(s, 2, 12)) {
        jws.push_back({{"y", w.y.get_str()}, {"n", w.n}});
        hs << "S witness: " << witness_str(w) << "\n";
      }
    }
    rep["outputs"]["T_witnesses"] = jw;
    rep["outputs"]["S_witnesses"] = jws;
    if (jw.empty() && jws.empty()) hs << "no perfect-power witnesses for n in [2, 12]\n";
  }
  return {rep, hs.str(), 0};
}

CommandResult cmd_bounds(std::uint64_t x, std::optional<std::uint64_t> k,
                         const OrchestratorOptions& opt) {
  if (x < 2) throw std::invalid_argument("bounds: need x >= 2");
  json rep{{"command", "bounds"}, {"inputs", {{"x", x}}}};
  std::ostringstream hs;
  int exit_code = 0;

  if (k) {
    BoundOutcome o = exponent_bound(Int(static_cast<unsigned long>(x)), *k);
    rep["inputs"]["k"] = *k;
    rep["outputs"]["outcome"] = outcome_json(o);
    hs << "x=" << x << " k=" << *k << ": " << outcome_json(o).dump() << "\n";
    return {rep, hs.str(), 0};
  }

  if (in_baker_family(x)) {
    json rows = json::array();
    hs << "x=" << x << ": certified bound row (n0 | n1 | k1)\n";
    bool all = true;
    for (BoundCase c : {BoundCase::I, BoundCase::II, BoundCase::III}) {
      BoundReport r = certify_bound(static_cast<int>(x), c, opt.digits);
      rows.push_back(bound_report_json(r));
      all = all && r.certified;
      hs << "  case " << to_string(c) << ": bound " << r.reference_bound
         << (r.certified ? " certified" : " NOT certified") << " (rhs at bound+1: "
         << r.rhs_at_reference_plus_1 << ", derived " << r.derived_bound << ")\n";
    }
    rep["outputs"]["certifications"] = rows;
    if (!all) exit_code = 1;
    return {rep, hs.str(), exit_code};
  }

  // per-k-class outcomes from the valuation tables
  struct ClassRep {
    const char* name;
    std::uint64_t rep;
  };
  const ClassRep classes[] = {
      {"k=1", 1}, {"k=2", 2}, {"k=3", 3}, {"k even >= 4", 4}, {"k odd >= 5", 5}};
  json rows = json::array();
  hs << "x=" << x << ": exponent bounds per k class\n";
  for (const auto& cls : classes) {
    BoundOutcome o = exponent_bound(Int(static_cast<unsigned long>(x)), cls.rep);
    json row = outcome_json(o);
    row["class"] = cls.name;
    rows.push_back(row);
    hs << "  " << cls.name << ": " << outcome_json(o).dump() << "\n";
  }
  rep["outputs"]["classes"] = rows;
  return {rep, hs.str(), exit_code};
}

CommandResult cmd_sieve(std::uint64_t x, std::uint64_t n, const OrchestratorOptions& opt) {
  if (x < 2 || x > 13) throw std::invalid_argument("sieve: need 2 <= x <= 13");
  if (n < 3) throw std::invalid_argument("sieve: need n >= 3");
  const std::vector<std::uint64_t> reduced = reduce_exponent(n);
  std::vector<SieveState> results = run_sieve_jobs(reduced, x, opt);

  json rep{{"command", "sieve"}, {"inputs", {{"x", x}, {"n", n}}}};
  json runs = json::array();
  std::ostringstream hs;
  bool all_proven = true;
  hs << "x=" << x << " n=" << n << " reduces to {";
  for (std::size_t i = 0; i < reduced.size(); ++i) hs << (i ? "," : "") << reduced[i];
  hs << "}\n";
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    runs.push_back(sieve_state_json(results[i]));
    all_proven = all_proven && results[i].status == SieveState::Status::Proven;
    hs << "  n=" << reduced[i] << ": " << status_word(results[i].status) << " after "
       << results[i].primes_used.size() << " primes (modulus "
       << results[i].modulus << ")";
    if (!results[i].diagnostic.empty()) hs << " [" << results[i].diagnostic << "]";
    hs << "\n";
  }
  rep["outputs"]["runs"] = runs;
  rep["outputs"]["verdict"] = all_proven ? "proven" : "undecided";
  hs << "verdict: " << (all_proven ? "proven" : "undecided") << "\n";
  return {rep, hs.str(), all_proven ? 0 : 1};
}

CommandResult cmd_search(std::uint64_t x_min, std::uint64_t x_max, std::uint64_t k_max,
                         std::uint64_t n_min, std::uint64_t n_max,
                         const OrchestratorOptions&) {
  if (x_min < 1 || x_min > x_max) throw std::invalid_argument("search: bad x range");
  if (n_min < 2 || n_min > n_max) throw std::invalid_argument("search: bad n range");
  json rep{{"command", "search"},
           {"inputs",
            {{"x_min", x_min}, {"x_max", x_max}, {"k_max", k_max}, {"n_min", n_min},
             {"n_max", n_max}}}};
  json hits = json::array();
  std::ostringstream hs;
  std::uint64_t scanned = 0;
  for (std::uint64_t x = x_min; x <= x_max; ++x) {
    const bool trivial_x = (x == 1);  // T_k(1) = 2^k
    for (std::uint64_t k = 1; k <= k_max; ++k) {
      const Int t = power_sum_upper(k, Int(static_cast<unsigned long>(x)),
                                    SumRoute::Direct);
      ++scanned;
      if (t < 2) continue;
      const std::size_t bits = mpz_sizeinbase(t.get_mpz_t(), 2);
      const std::uint64_t hi = std::min<std::uint64_t>(n_max, bits);
      if (n_min > hi) continue;
      for (const auto& w : perfect_power_witnesses(t, n_min, hi)) {
        json h{{"x", x}, {"k", k}, {"y", w.y.get_str()}, {"n", w.n},
               {"out_of_scope", trivial_x}};
        hits.push_back(h);
        hs << "witness: T_" << k << "(" << x << ") = " << w.y.get_str() << "^" << w.n
           << (trivial_x ? "  [x=1 triviality, out of scope]" : "") << "\n";
      }
    }
  }
  rep["outputs"]["scanned"] = scanned;
  rep["outputs"]["witnesses"] = hits;
  hs << "scanned " << scanned << " values; " << hits.size() << " witness(es)\n";
  return {rep, hs.str(), 0};
}

CommandResult cmd_tables(const OrchestratorOptions& opt) {
  json rep{{"command", "tables"}, {"inputs", {{"digits", opt.digits}}}};
  std::ostringstream hs;
  bool all_ok = true;
  std::filesystem::create_directories(opt.out_dir);

  // constants and eps tables, one file per table
  const struct {
    BoundCase c;
    const char* eps_file;
    const char* const_file;
  } table_files[] = {{BoundCase::I, "table2.txt", "table3.txt"},
                     {BoundCase::II, "table4.txt", "table5.txt"},
                     {BoundCase::III, "table6.txt", "table7.txt"}};

  json diffs = json::array();
  for (const auto& tf : table_files) {
    std::ofstream eps_out(opt.out_dir + "/" + tf.eps_file);
    std::ofstream const_out(opt.out_dir + "/" + tf.const_file);
    if (!eps_out || !const_out) {
      throw std::invalid_argument("tables: cannot write under " + opt.out_dir);
    }
    eps_out << "# case " << to_string(tf.c) << ": h = log v + eps\n"
            << "# x computed reference sound\n";
    const_out << "# case " << to_string(tf.c)
              << ": H lower bound; omega theta C0 C Cprime hprime_const upper bounds\n"
              << "# x field computed reference sound gap\n";
    for (int x : kBakerX) {
      TableRowDiff row = reproduce_table_row(x, tf.c, opt.digits);
      json jrow{{"x", x}, {"case", to_string(tf.c)}, {"all_sound", row.all_sound}};
      json jentries = json::array();
      for (const auto& e : row.entries) {
        jentries.push_back({{"field", e.field},
                            {"computed", e.computed},
                            {"reference", e.reference},
                            {"sound", e.sound},
                            {"gap", e.gap}});
        if (e.field == "eps") {
          eps_out << x << " " << std::fixed << std::setprecision(6) << e.computed << " "
                  << std::setprecision(4) << e.reference << " "
                  << (e.sound ? "PASS" : "FAIL") << "\n";
        } else {
          const_out << x << " " << e.field << " " << std::fixed << std::setprecision(6)
                    << e.computed << " " << std::setprecision(4) << e.reference << " "
                    << (e.sound ? "PASS" : "FAIL") << " " << std::scientific
                    << std::setprecision(2) << e.gap << "\n";
        }
        all_ok = all_ok && e.sound;
      }
      jrow["entries"] = jentries;
      diffs.push_back(jrow);
      hs << "case " << to_string(tf.c) << " x=" << x << ": "
         << (row.all_sound ? "PASS" : "FAIL") << "\n";
    }
  }
  rep["outputs"]["diffs"] = diffs;

  // bound certifications
  std::ofstream t1(opt.out_dir + "/table1.txt");
  t1 << "# certified bound targets: x n0 n1 k1 (certified derived margins)\n";
  json certs = json::array();
  for (int x : kBakerX) {
    json row{{"x", x}};
    t1 << x;
    for (BoundCase c : {BoundCase::I, BoundCase::II, BoundCase::III}) {
      BoundReport r = certify_bound(x, c, opt.digits);
      row[std::string("case_") + to_string(c)] = bound_report_json(r);
      all_ok = all_ok && r.certified;
      t1 << " " << r.reference_bound << (r.certified ? "(certified,derived=" : "(FAILED,")
         << r.derived_bound << ")";
      hs << "certify x=" << x << " case " << to_string(c) << ": bound "
         << r.reference_bound << " " << (r.certified ? "PASS" : "FAIL") << " (margin "
         << std::setprecision(3) << r.margin * 100 << "%)\n";
    }
    t1 << "\n";
    certs.push_back(row);
  }
  rep["outputs"]["certifications"] = certs;
  rep["outputs"]["all_ok"] = all_ok;
  hs << (all_ok ? "all table entries sound, all bounds certified\n"
                : "TABLE REPRODUCTION FAILED\n");
  return {rep, hs.str(), all_ok ? 0 : 1};
}

namespace {

struct CapSweep {
  std::uint64_t k_from = 0, k_to = 0, k_target = 0;
  bool truncated = false;
  std::uint64_t capped = 0;           // v_p <= 12 established
  std::uint64_t no_small_factor = 0;  // no prime factor <= escalation limit
  unsigned long max_cap = 0;
  std::vector<std::uint64_t> problem_k;
  std::uint64_t recheck_k_max = 0;
  std::uint64_t recheck_witnesses = 0;
};

// The y <= 10^6 regime: every prime factor of T_k(x) divides y, so a small
// prime with v_p(T_k(x)) <= 12 forces n <= 12; k then collapses to a direct
// recheck range. Exponents are swept incrementally.
CapSweep cap_sweep(std::uint64_t x, std::uint64_t k_from, std::uint64_t k_target,
                   const OrchestratorOptions& opt) {
  CapSweep sweep;
  sweep.k_from = k_from;
  sweep.k_target = k_target;
  sweep.k_to = std::min(k_target, opt.k_sweep_max);
  sweep.truncated = sweep.k_to < k_target;

  const auto first_pass = primes_up_to(opt.factor_limit);
  // stragglers are settled with one gcd against the product of all escalation
  // primes; built lazily since most sweeps never need it
  std::vector<std::uint64_t> escalation;
  Int escalation_product = 0;
  std::vector<Int> powers;
  for (std::uint64_t b = x + 1; b <= 2 * x; ++b) {
    powers.push_back(Int(static_cast<unsigned long>(b)));
  }
  Int t;
  for (std::uint64_t k = 1; k <= sweep.k_to; ++k) {
    if (k > 1) {
      for (std::size_t i = 0; i < powers.size(); ++i) {
        powers[i] *= static_cast<unsigned long>(x + 1 + i);
      }
    }
    if (k < k_from) continue;
    t = 0;
    for (const auto& pw : powers) t += pw;

    bool done = false;
    for (std::uint64_t p : first_pass) {
      if (mpz_divisible_ui_p(t.get_mpz_t(), p)) {
        unsigned long cap = vp(t, p);
        if (cap <= 12) {
          ++sweep.capped;
          sweep.max_cap = std::max(sweep.max_cap, cap);
          done = true;
          break;
        }
      }
    }
    if (done) continue;
    // escalate: exhaustive coverage up to the escalation limit via one gcd
    // with the product of the remaining primes
    if (escalation.empty()) {
      escalation = primes_up_to(opt.escalation_limit);
      std::vector<Int> tree;
      for (std::uint64_t p : escalation) {
        if (p <= opt.factor_limit) continue;
        tree.push_back(Int(static_cast<unsigned long>(p)));
      }
      while (tree.size() > 1) {  // balanced product
        std::vector<Int> next;
        for (std::size_t i = 0; i + 1 < tree.size(); i += 2) next.push_back(tree[i] * tree[i + 1]);
        if (tree.size() % 2 == 1) next.push_back(tree.back());
        tree.swap(next);
      }
      escalation_product = tree.empty() ? Int(1) : tree.front();
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), escalation_product.get_mpz_t());
    bool found = false;
    if (g > 1) {
      for (std::uint64_t p : escalation) {
        if (p <= opt.factor_limit) continue;
        if (mpz_divisible_ui_p(g.get_mpz_t(), p)) {
          found = true;
          unsigned long cap = vp(t, p);
          if (cap <= 12) {
            ++sweep.capped;
            sweep.max_cap = std::max(sweep.max_cap, cap);
            done = true;
            break;
          }
        }
      }
    }
    if (done) continue;
    if (!found) {
      ++sweep.no_small_factor;  // smallest prime factor exceeds the y range
    } else {
      sweep.problem_k.push_back(k);
    }
  }

  // n <= 12 and y < 10^6 force T < 10^72, hence a tiny k range to recheck
  sweep.recheck_k_max = static_cast<std::uint64_t>(
      std::ceil(72.0 * std::log(10.0) / std::log(2.0 * x)));
  for (std::uint64_t k = 1; k <= sweep.recheck_k_max; ++k) {
    const Int tk = power_sum_upper(k, Int(static_cast<unsigned long>(x)),
                                   SumRoute::Direct);
    if (tk < 2) continue;
    const std::size_t bits = mpz_sizeinbase(tk.get_mpz_t(), 2);
    if (bits < 3) continue;
    sweep.recheck_witnesses +=
        perfect_power_witnesses(tk, 3, std::min<std::uint64_t>(12, bits)).size();
  }
  return sweep;
}

json cap_sweep_json(const CapSweep& s) {
  return json{{"k_from", s.k_from},
              {"k_to", s.k_to},
              {"k_target", s.k_target},
              {"truncated", s.truncated},
              {"capped_le_12", s.capped},
              {"no_small_factor", s.no_small_factor},
              {"max_cap", s.max_cap},
              {"problem_k", s.problem_k},
              {"recheck_k_max", s.recheck_k_max},
              {"recheck_witnesses", s.recheck_witnesses}};
}

}  // namespace

CommandResult cmd_prove(std::uint64_t x, const OrchestratorOptions& opt) {
  if (x < 2 || x > 13) throw std::invalid_argument("prove: need 2 <= x <= 13");
  json rep{{"command", "prove"},
           {"inputs",
            {{"x", x}, {"n_ceiling", opt.n_ceiling}, {"k_max", opt.k_max},
             {"k_sweep_max", opt.k_sweep_max}}}};
  std::ostringstream hs;
  std::vector<std::string> truncations;
  bool all_proven = true;

  // plan
  json plan{{"x", x}};
  std::uint64_t n_full_bound = 0;
  std::vector<std::uint64_t> exps;
  const bool baker = in_baker_family(x);
  if (baker) {
    n_full_bound = bound_targets_for(static_cast<int>(x)).n1;
    plan["strategy"] = "BoundThenSieve";
    plan["provenance"] = "linear-forms bound n1 (y > 10^6 regime)";
  } else {
    // per-k-class valuation bounds; the sieve only needs the exponents some
    // class actually leaves open (for x = 4 or 12 that is none at all)
    plan["strategy"] = "BoundThenSieve";
    plan["provenance"] = "valuation exponent bound (n <= 5)";
    for (std::uint64_t krep : {1ull, 2ull, 3ull, 4ull, 5ull}) {
      BoundOutcome o = exponent_bound(Int(static_cast<unsigned long>(x)), krep);
      if (o.kind == BoundOutcome::Kind::UpperBound) {
        n_full_bound = std::max<std::uint64_t>(n_full_bound, o.n_max);
      }
    }
  }
  const std::uint64_t n_limit = std::min<std::uint64_t>(n_full_bound, opt.n_ceiling);
  exps = sieve_exponents_up_to(n_limit);
  plan["n_full_bound"] = n_full_bound;
  plan["n_limit"] = n_limit;
  plan["n_list"] = exps;
  if (n_limit < n_full_bound) {
    truncations.push_back("sieve sweep truncated at n <= " + std::to_string(n_limit) +
                          " (full range runs to " + std::to_string(n_full_bound) + ")");
  }
  hs << "proof plan for x=" << x << ": " << plan["provenance"].get<std::string>()
     << ", sieve exponents up to " << n_limit << "\n";

  // direct search for small k (all n >= 3 up to the bit length)
  {
    CommandResult search = cmd_search(x, x, opt.k_max, 3, 64, opt);
    std::uint64_t wit = 0;
    for (const auto& h : search.report["outputs"]["witnesses"]) {
      if (!h["out_of_scope"].get<bool>()) ++wit;
    }
    rep["outputs"]["direct_search"] = {{"k_max", opt.k_max}, {"witnesses", wit}};
    all_proven = all_proven && wit == 0;
    hs << "direct search k <= " << opt.k_max << ": " << wit << " witness(es)\n";
  }

  if (baker) {
    // bound certifications
    json certs = json::array();
    for (BoundCase c : {BoundCase::I, BoundCase::II, BoundCase::III}) {
      BoundReport r = certify_bound(static_cast<int>(x), c, opt.digits);
      certs.push_back(bound_report_json(r));
      all_proven = all_proven && r.certified;
      hs << "certified case " << to_string(c) << " bound " << r.reference_bound
         << (r.certified ? "" : " FAILED") << "\n";
    }
    rep["outputs"]["certifications"] = certs;

    // y <= 10^6 regime: cap sweep for 83 < k <= max(k1, 6*n0*ln10/ln(2x))
    const auto& targets = bound_targets_for(static_cast<int>(x));
    const std::uint64_t k_mid = static_cast<std::uint64_t>(
        std::ceil(6.0 * static_cast<double>(targets.n0) * std::log(10.0) /
                  std::log(2.0 * x)));
    const std::uint64_t k_target = std::max<std::uint64_t>(targets.k1, k_mid);
    CapSweep sweep = cap_sweep(x, opt.k_max + 1, k_target, opt);
    rep["outputs"]["cap_sweep"] = cap_sweep_json(sweep);
    if (sweep.truncated) {
      truncations.push_back("cap sweep truncated at k <= " + std::to_string(sweep.k_to) +
                            " (full range runs to " + std::to_string(sweep.k_target) +
                            ")");
    }
    all_proven = all_proven && sweep.problem_k.empty() && sweep.recheck_witnesses == 0;
    hs << "cap sweep k in (" << opt.k_max << ", " << sweep.k_to << "]: " << sweep.capped
       << " capped (max cap " << sweep.max_cap << "), " << sweep.no_small_factor
       << " with no factor <= " << opt.escalation_limit << ", recheck k <= "
       << sweep.recheck_k_max << " found " << sweep.recheck_witnesses << " witness(es)\n";
  } else {
    // per-k-class bounds; every class must cap n at 5 or rule it out entirely
    json rows = json::array();
    bool classes_ok = true;
    for (std::uint64_t krep : {1ull, 2ull, 3ull, 4ull, 5ull}) {
      BoundOutcome o = exponent_bound(Int(static_cast<unsigned long>(x)), krep);
      json row = outcome_json(o);
      row["k_class_rep"] = krep;
      rows.push_back(row);
      const bool capped = o.kind == BoundOutcome::Kind::NoSolutionForNGe2 ||
                          (o.kind == BoundOutcome::Kind::UpperBound && o.n_max <= 5);
      classes_ok = classes_ok && capped;
    }
    all_proven = all_proven && classes_ok;
    rep["outputs"]["class_bounds"] = rows;
    hs << "valuation route: " << (classes_ok ? "every" : "NOT every")
       << " k class capped at n <= 5\n";
  }

  // sieve jobs
  std::vector<SieveState> results = run_sieve_jobs(exps, x, opt);
  json runs = json::array();
  for (std::size_t i = 0; i < exps.size(); ++i) {
    runs.push_back(sieve_state_json(results[i]));
    all_proven = all_proven && results[i].status == SieveState::Status::Proven;
    hs << "sieve n=" << exps[i] << ": " << status_word(results[i].status) << " ("
       << results[i].primes_used.size() << " primes, modulus " << results[i].modulus
       << ")\n";
  }
  rep["outputs"]["sieve_runs"] = runs;

  rep["plan"] = plan;
  rep["outputs"]["truncations"] = truncations;
  const bool fully_proven = all_proven && truncations.empty();
  std::string verdict = fully_proven ? "proven"
                        : all_proven ? "partial (truncated)"
                                     : "undecided";
  rep["outputs"]["verdict"] = verdict;
  hs << "verdict: " << verdict << "\n";
  if (!truncations.empty()) {
    hs << "truncation notices:\n";
    for (const auto& t : truncations) hs << "  - " << t << "\n";
    if (!opt.checkpoint_dir.empty()) {
      hs << "checkpoints under " << opt.checkpoint_dir
         << "; rerun with --resume and a higher --n-ceiling to continue\n";
    } else {
      hs << "rerun with --checkpoint-dir DIR --checkpoint-every N to make long runs "
            "resumable\n";
    }
  }
  return {rep, hs.str(), fully_proven ? 0 : 1};
}

}  // namespace powersum
