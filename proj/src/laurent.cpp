#include "powersum/laurent.hpp"

#include <algorithm>

#include "powersum/valuation.hpp"

namespace powersum {

mpfr_prec_t bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(digits * 3.33) + 32;
}

SigmaLambda sigma_lambda(const Rat& rho, const Rat& mu, int digits) {
  if (!(rho > 1)) throw std::invalid_argument("sigma_lambda: rho must exceed 1");
  if (!(mu >= Rat(1, 3) && mu <= 1)) {
    throw std::invalid_argument("sigma_lambda: mu must lie in [1/3, 1]");
  }
  const mpfr_prec_t prec = bits_for_digits(digits);
  Rat sigma = (Rat(1) + 2 * mu - mu * mu) / 2;
  sigma.canonicalize();
  Dual sigma_d = Dual::from_rational(sigma, prec);
  Dual lambda = sigma_d * Dual::from_rational(rho, prec).log();
  return {sigma, sigma_d, lambda};
}

LaurentConstants LaurentBundle::view() const {
  return {sl.sigma.up, sl.lambda.up, H.dn,     omega.up, theta.up,
          C0.up,       C.up,         Cprime.up, hprime.up};
}

LaurentBundle laurent_constants(const Rat& rho, const Rat& mu, const Dual& a1,
                                const Dual& a2, const Dual& h, int digits) {
  const mpfr_prec_t prec = bits_for_digits(digits);
  SigmaLambda sl = sigma_lambda(rho, mu, digits);

  // hypothesis a1*a2 >= lambda^2, checked conservatively
  {
    DirectedReal lhs = a1.dn * a2.dn;
    DirectedReal rhs = (sl.lambda.up * sl.lambda.up).retag(DirectedReal::Dir::Down);
    if (lhs.cmp(rhs) < 0) {
      throw HypothesisViolation("laurent_constants: a1*a2 < lambda^2");
    }
  }

  const Dual one = Dual::from_long(1, prec);
  const Dual two = Dual::from_long(2, prec);

  Dual H = h / sl.lambda + one / sl.sigma;
  Dual root = (one + one / (Dual::from_long(4, prec) * H * H)).sqrt();
  Dual omega = two + two * root;
  Dual theta = root + one / (two * H);

  Dual lam3 = sl.lambda * sl.lambda * sl.lambda;
  Dual mu_d = Dual::from_rational(mu, prec);

  // C0 = (omega/6 + (1/2) sqrt(omega^2/9
  //        + 8 lambda omega^(5/4) theta^(1/4) / (3 sqrt(a1 a2) sqrt(H))
  //        + (4/3)(1/a1 + 1/a2) lambda omega / H))^2
  Dual t1 = omega * omega / Dual::from_long(9, prec);
  Dual t2 = Dual::from_long(8, prec) * sl.lambda * omega.pow(Rat(5, 4)) *
            theta.pow(Rat(1, 4)) /
            (Dual::from_long(3, prec) * (a1 * a2).sqrt() * H.sqrt());
  Dual t3 = Dual::from_rational(Rat(4, 3), prec) * (one / a1 + one / a2) *
            (sl.lambda * omega / H);
  Dual c0_base = omega / Dual::from_long(6, prec) +
                 (t1 + t2 + t3).sqrt() / Dual::from_long(2, prec);
  Dual C0 = c0_base * c0_base;

  Dual C = C0 * mu_d / (lam3 * sl.sigma);
  Dual Cprime = (C * sl.sigma * omega * theta / (lam3 * mu_d)).sqrt();
  Dual hprime = h + sl.lambda / sl.sigma;

  return {sl, a1, a2, h, H, omega, theta, C0, C, Cprime, hprime};
}

Rat rho_rat_for(BoundCase c, int x) {
  switch (c) {
    case BoundCase::I:
      return Rat(77, 10);
    case BoundCase::II:
      return (x == 10 || x == 11) ? Rat(93, 10) : Rat(96, 10);
    case BoundCase::III:
      return Rat(62, 10);
  }
  throw std::invalid_argument("rho_rat_for: bad case");
}

Int y_floor_for(BoundCase c, int x, FloorMode mode) {
  switch (c) {
    case BoundCase::I:
      return Int(4 * x * x) + (mode == FloorMode::OpenInteger ? 1 : 0);
    case BoundCase::II: {
      Int m = pow_int(Int(10), 6);
      return m + (mode == FloorMode::OpenInteger ? 1 : 0);
    }
    case BoundCase::III:
      return Int(4 * x * x);  // ceiling in this case; the a's absorb it
  }
  throw std::invalid_argument("y_floor_for: bad case");
}

APair a_parameters(int x, BoundCase c, FloorMode mode, int digits) {
  const mpfr_prec_t prec = bits_for_digits(digits);
  const Rat rho = rho_rat_for(c, x);
  Dual log2x = Dual::from_long(2 * x, prec).log();
  if (c == BoundCase::III) {
    // a1 = 1.02 (rho+3) log(2x), a2 = 2 (rho+1) log(2x)
    Dual a1 = Dual::from_rational(Rat(51, 50) * (rho + 3), prec) * log2x;
    Dual a2 = Dual::from_rational(2 * (rho + 1), prec) * log2x;
    return {a1, a2};
  }
  // a2 = (rho+1) log(2x); a1 = ((rho+1)/2) log(2x) + 2 log(y_floor)
  Dual a2 = Dual::from_rational(rho + 1, prec) * log2x;
  Dual logy = Dual::from_integer(y_floor_for(c, x, mode), prec).log();
  Dual a1 = Dual::from_rational((rho + 1) / 2, prec) * log2x +
            Dual::from_long(2, prec) * logy;
  return {a1, a2};
}

DirectedReal h_parameter_eps(int x, BoundCase c, FloorMode mode, int digits) {
  const mpfr_prec_t prec = bits_for_digits(digits);
  SigmaLambda sl = sigma_lambda(rho_rat_for(c, x), Rat(57, 100), digits);
  APair a = a_parameters(x, c, mode, digits);
  const Dual one = Dual::from_long(1, prec);
  const Dual two = Dual::from_long(2, prec);
  // b1 <= v and b2 <= v/2, so b1/a2 + b2/a1 <= v (1/a2 + 1/(2 a1));
  // eps = log(1/a2 + 1/(2 a1)) + log(lambda) + 1.75 + 0.06
  Dual inner = one / a.a2 + one / (two * a.a1);
  Dual eps = inner.log() + sl.lambda.log() + Dual::from_rational(Rat(181, 100), prec);
  return eps.up;
}

namespace {

struct CaseGeometry {
  Dual log2x;      // log(2x)
  Dual log_ratio;  // log(2x/(2x-1))
  Dual logy;       // log(y floor); unused for case III
};

CaseGeometry geometry(int x, BoundCase c, FloorMode mode, mpfr_prec_t prec) {
  Dual log2x = Dual::from_long(2 * x, prec).log();
  Dual log_ratio = Dual::from_rational(Rat(2 * x, 2 * x - 1), prec).log();
  Dual logy = (c == BoundCase::III)
                  ? Dual::from_long(1, prec)
                  : Dual::from_integer(y_floor_for(c, x, mode), prec).log();
  return {log2x, log_ratio, logy};
}

}  // namespace

RhsEvaluation contradiction_rhs(int x, BoundCase c, std::uint64_t v, FloorMode mode,
                                int digits) {
  const mpfr_prec_t prec = bits_for_digits(digits);
  const Rat mu(57, 100);
  const Rat rho = rho_rat_for(c, x);

  APair a = a_parameters(x, c, mode, digits);
  DirectedReal eps_up = h_parameter_eps(x, c, mode, digits);
  Dual eps = Dual::pinned(eps_up);
  Dual logv = Dual::from_integer(Int(static_cast<unsigned long>(v)), prec).log();
  Dual h = logv + eps;

  LaurentBundle bundle = laurent_constants(rho, mu, a.a1, a.a2, h, digits);
  CaseGeometry geo = geometry(x, c, mode, prec);

  std::vector<std::string> fail;
  // h-hypothesis: h >= lambda and h >= log(2)/2 (D = 1 throughout)
  if (bundle.h.dn.cmp(bundle.sl.lambda.up) < 0) fail.push_back("h < lambda");
  {
    Dual half_log2 = Dual::from_long(2, prec).log() / Dual::from_long(2, prec);
    if (bundle.h.dn.cmp(half_log2.up) < 0) fail.push_back("h < log(2)/2");
  }
  // persistence: h'(v) > 2 makes v / h'(v)^2 strictly increasing
  if (bundle.hprime.dn.cmp_ui(2) <= 0) fail.push_back("h'(v) <= 2");

  Dual hp2 = bundle.hprime * bundle.hprime;
  Dual a1a2 = a.a1 * a.a2;
  Dual main = bundle.C * hp2 * a1a2;
  Dual sqrt_term = (bundle.omega * bundle.theta).sqrt() * bundle.hprime;

  Dual log_arg = bundle.Cprime * hp2 * a1a2;
  if (c == BoundCase::III) log_arg = Dual::from_long(2, prec) * log_arg;
  Dual log_term = log_arg.log();
  // persistence of the log term: its argument's log must dominate 2/h'
  if (log_term.dn.cmp_ui(1) < 0) fail.push_back("log term too small for persistence");

  Dual numerator = main + sqrt_term + log_term;
  Dual rhs = (c == BoundCase::III)
                 ? numerator / geo.log_ratio
                 : (numerator + Dual::from_long(4, prec).log()) / geo.logy * geo.log2x /
                       geo.log_ratio;

  return {std::move(bundle), rhs.up, fail.empty(), std::move(fail)};
}

bool y_parity_precheck(int x) {
  // y odd requires v2(T_k(x)) == 0 across the k classes; check a
  // representative of every class and require covered branches.
  for (unsigned long k : {1ul, 2ul, 3ul, 4ul, 5ul}) {
    ValuationPrediction p = predict_v2_T(Int(x), k);
    if (!p.covered || p.value != 0) return false;
  }
  return true;
}

namespace {

bool evaluation_passes(const RhsEvaluation& ev, std::uint64_t bound) {
  return ev.hypotheses_ok &&
         ev.rhs.cmp(Int(static_cast<unsigned long>(bound + 1))) < 0;
}

bool certification_passes(int x, BoundCase c, std::uint64_t bound, int digits) {
  RhsEvaluation ev = contradiction_rhs(x, c, bound + 1, FloorMode::OpenInteger, digits);
  return evaluation_passes(ev, bound);
}

}  // namespace

BoundReport certify_bound(int x, BoundCase c, int digits) {
  const BoundTargets& targets = bound_targets_for(x);
  const std::uint64_t reference = (c == BoundCase::I)    ? targets.n0
                                  : (c == BoundCase::II) ? targets.n1
                                                         : targets.k1;
  BoundReport report;
  report.x = x;
  report.c = c;
  report.rho = rho_rat_for(c, x).get_d();
  report.mu = 0.57;
  report.reference_bound = reference;

  if (!y_parity_precheck(x)) {
    report.certified = false;
    report.notes.push_back("y-parity precheck failed: v2(T_k(x)) != 0 for some k class");
    return report;
  }

  report.epsilon = h_parameter_eps(x, c, FloorMode::OpenInteger, digits).to_double();
  report.epsilon_table = h_parameter_eps(x, c, FloorMode::Closed, digits).to_double();

  RhsEvaluation at_ref =
      contradiction_rhs(x, c, reference + 1, FloorMode::OpenInteger, digits);
  report.certified = evaluation_passes(at_ref, reference);
  report.rhs_at_reference_plus_1 = at_ref.rhs.to_double();
  report.margin =
      (static_cast<double>(reference + 1) - report.rhs_at_reference_plus_1) /
      static_cast<double>(reference + 1);
  for (const auto& f : at_ref.hypothesis_failures) report.notes.push_back(f);

  // informational: smallest bound this certifier can establish
  if (report.certified) {
    std::uint64_t lo = 100, hi = reference;
    while (lo < hi) {
      std::uint64_t mid = lo + (hi - lo) / 2;
      if (certification_passes(x, c, mid, digits)) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    report.derived_bound = certification_passes(x, c, hi, digits) ? hi : reference;
  } else {
    report.derived_bound = reference;
    report.notes.push_back("first violating value: " + std::to_string(reference + 1));
  }

  // table view of the constants at v = reference, closed floor
  RhsEvaluation table_ev = contradiction_rhs(x, c, reference, FloorMode::Closed, digits);
  const LaurentBundle& b = table_ev.bundle;
  report.constants = {b.H.dn.to_double(),     b.omega.up.to_double(),
                      b.theta.up.to_double(), b.C0.up.to_double(),
                      b.C.up.to_double(),     b.Cprime.up.to_double(),
                      (Dual::pinned(h_parameter_eps(x, c, FloorMode::Closed, digits)) +
                       b.sl.lambda / b.sl.sigma)
                          .up.to_double()};
  return report;
}

TableRowDiff reproduce_table_row(int x, BoundCase c, int digits) {
  const BoundTargets& targets = bound_targets_for(x);
  const std::uint64_t v = (c == BoundCase::I)    ? targets.n0
                          : (c == BoundCase::II) ? targets.n1
                                                 : targets.k1;
  const EpsEntry& eps_ref = eps_entry_for(c, x);
  const ConstantsEntry& ref = constants_entry_for(c, x);

  RhsEvaluation ev = contradiction_rhs(x, c, v, FloorMode::Closed, digits);
  const LaurentBundle& b = ev.bundle;
  DirectedReal eps_up = h_parameter_eps(x, c, FloorMode::Closed, digits);
  DirectedReal hprime_const =
      (Dual::pinned(eps_up) + b.sl.lambda / b.sl.sigma).up;

  TableRowDiff row;
  row.x = x;
  row.c = c;
  auto add = [&](const std::string& field, double computed, double reference,
                 bool lower_bound) {
    bool sound = lower_bound ? (computed >= reference - kTableSlack)
                             : (computed <= reference + kTableSlack);
    row.entries.push_back({field, computed, reference, lower_bound, sound,
                           reference - computed});
    row.all_sound = row.all_sound && sound;
  };
  add("eps", eps_up.to_double(), eps_ref.eps, false);
  add("H", b.H.dn.to_double(), ref.H, true);
  add("omega", b.omega.up.to_double(), ref.omega, false);
  add("theta", b.theta.up.to_double(), ref.theta, false);
  add("C0", b.C0.up.to_double(), ref.C0, false);
  add("C", b.C.up.to_double(), ref.C, false);
  add("Cprime", b.Cprime.up.to_double(), ref.Cprime, false);
  add("hprime_const", hprime_const.to_double(), ref.hprime_const, false);
  return row;
}

}  // namespace powersum
