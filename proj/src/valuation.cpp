#include "powersum/valuation.hpp"

#include <stdexcept>

#include "powersum/power_sums.hpp"

namespace powersum {

namespace {

unsigned long mod_ui(const Int& x, unsigned long m) {
  return mpz_fdiv_ui(x.get_mpz_t(), m);
}

}  // namespace

ValuationPrediction predict_v2_T(const Int& x, unsigned long k) {
  if (x < 1 || k < 1) throw std::invalid_argument("predict_v2_T: need x >= 1, k >= 1");
  const bool k_even = (k % 2 == 0);
  if (mod_ui(x, 2) == 0) {
    const unsigned long t = vp(x, 2);
    if (k == 1 || k_even) return {true, t - 1, branch::v2_even_k1_or_even};
    return {true, 2 * t - 2, branch::v2_even_k_odd};
  }
  if (k == 1) return {true, vp(3 * x + 1, 2) - 1, branch::v2_odd_k1};
  const unsigned long r8 = mod_ui(x, 8);
  if (r8 == 3 || r8 == 7) return {true, 0, branch::v2_x37_mod8};
  if (r8 == 1 && k == 2) return {true, vp(7 * x + 1, 2) - 1, branch::v2_x1_mod8_k2};
  if (r8 == 1 && k == 3) {
    return {true, vp((5 * x + 3) * (3 * x + 1), 2) - 2, branch::v2_x1_mod8_k3};
  }
  if (r8 == 5) {
    if (k_even) return {true, 1, branch::v2_x5_mod8_k_even};
    return {true, vp(3 * x + 1, 2), branch::v2_x5_mod8_k_odd};
  }
  // x = 1 mod 8, k >= 4
  if (mod_ui(x, 16) == 9) {
    if (k_even) return {true, 2, branch::v2_x9_mod16_k_even};
    return {true, 3, branch::v2_x9_mod16_k_odd};
  }
  if (mod_ui(x, 32) == 17) {
    if (k_even) return {true, 3, branch::v2_x17_mod32_k_even};
    return {true, 4, branch::v2_x17_mod32_k_odd};
  }
  return {false, 0, branch::v2_not_covered};
}

ValuationPrediction predict_v3_T(const Int& x, unsigned long k) {
  if (x < 1 || k < 1) throw std::invalid_argument("predict_v3_T: need x >= 1, k >= 1");
  const bool k_even = (k % 2 == 0);
  const unsigned long r3 = mod_ui(x, 3);
  const unsigned long r9 = mod_ui(x, 9);
  if (k == 1) return {true, vp(x, 3), branch::v3t_k1};
  if (r9 == 5 && k_even) return {false, 0, branch::v3t_not_covered};
  if (r3 == 0) {
    if (k_even) return {true, vp(x, 3) - 1, branch::v3t_x0_mod3_k_even};
    if (k == 3) return {true, 2 * vp(x, 3) + vp(5 * x + 3, 3), branch::v3t_x0_mod3_k3};
    return {true, vp(Int(k), 3) + 2 * vp(x, 3), branch::v3t_x0_mod3_k_odd};
  }
  if (!k_even) return {true, 0, branch::v3t_xpm1_mod3_k_odd};
  if (r9 == 2 || r9 == 8) return {true, 0, branch::v3t_x28_mod9_k_even};
  if (r3 == 1) return {true, vp(2 * x + 1, 3) - 1, branch::v3t_x1_mod3_k_even};
  throw std::logic_error("predict_v3_T: unreachable branch");
}

ValuationPrediction predict_v3_S(const Int& x, unsigned long k) {
  if (x < 1 || k < 1) throw std::invalid_argument("predict_v3_S: need x >= 1, k >= 1");
  if (k == 1) return {true, vp(x * (x + 1), 3), branch::v3s_k1};
  if (k % 2 == 0) {
    return {true, vp(x * (x + 1) * (2 * x + 1), 3) - 1, branch::v3s_k_even};
  }
  if (mod_ui(x, 3) == 1) return {true, 0, branch::v3s_x1_mod3_k_odd};
  Int prod = Int(k) * x * x * (x + 1) * (x + 1);
  return {true, vp(prod, 3) - 1, branch::v3s_x02_mod3_k_odd};
}

namespace {

BoundOutcome outcome_from_bound(unsigned long bound, std::string_view label) {
  if (bound <= 1) return {BoundOutcome::Kind::NoSolutionForNGe2, 0, label};
  return {BoundOutcome::Kind::UpperBound, bound, label};
}

}  // namespace

BoundOutcome exponent_bound(const Int& x, unsigned long k) {
  if (x < 1 || k < 1) throw std::invalid_argument("exponent_bound: need x >= 1, k >= 1");
  const bool k_even = (k % 2 == 0);

  // mod-4 table
  if (mod_ui(x, 4) == 0) {
    const unsigned long t = vp(x, 2);
    if (k == 1 || k_even) return outcome_from_bound(t - 1, "bound:x-0-mod4:k1-or-even");
    return outcome_from_bound(2 * t - 2, "bound:x-0-mod4:k-odd>=3");
  }

  // odd-x two-adic table
  if (mod_ui(x, 4) == 1 && k == 1) {
    return outcome_from_bound(vp(3 * x + 1, 2) - 1, "bound:x-1-mod4:k1");
  }
  const unsigned long r8 = mod_ui(x, 8);
  if ((r8 == 1 || r8 == 5) && mod_ui(x, 32) != 1 && k != 1) {
    if (r8 == 1 && k == 2) {
      return outcome_from_bound(vp(7 * x + 1, 2) - 1, "bound:x-1-mod8:k2");
    }
    if (r8 == 1 && k == 3) {
      return outcome_from_bound(vp((5 * x + 3) * (3 * x + 1), 2) - 2, "bound:x-1-mod8:k3");
    }
    if (r8 == 5) {
      if (!k_even) return outcome_from_bound(vp(3 * x + 1, 2), "bound:x-5-mod8:k-odd>=3");
      return outcome_from_bound(1, "bound:x-5-mod8:k-even>=2");
    }
    if (mod_ui(x, 16) == 9) {
      if (k_even) return outcome_from_bound(2, "bound:x-9-mod16:k-even>=4");
      return outcome_from_bound(3, "bound:x-9-mod16:k-odd>=5");
    }
    if (mod_ui(x, 32) == 17) {
      if (k_even) return outcome_from_bound(3, "bound:x-17-mod32:k-even>=4");
      return outcome_from_bound(4, "bound:x-17-mod32:k-odd>=5");
    }
  }

  // mod-3/9 table (case list, not the summary header)
  const unsigned long r3 = mod_ui(x, 3);
  const unsigned long r9 = mod_ui(x, 9);
  if (r3 == 0 && !k_even) {
    if (k == 1) return outcome_from_bound(vp(x, 3), "bound:x-0-mod3:k1");
    if (k == 3) {
      return outcome_from_bound(2 * vp(x, 3) + vp(5 * x + 3, 3), "bound:x-0-mod3:k3");
    }
    return outcome_from_bound(vp(Int(k), 3) + 2 * vp(x, 3), "bound:x-0-mod3:k-odd>3");
  }
  if (k_even && k >= 2) {
    if (r9 == 0) return outcome_from_bound(vp(x, 3) - 1, "bound:x-0-mod9:k-even");
    if (r9 == 4) return outcome_from_bound(vp(2 * x + 1, 3) - 1, "bound:x-4-mod9:k-even");
  }

  return {BoundOutcome::Kind::NotCovered, 0, "bound:not-covered"};
}

std::string to_record(const ValuationMismatch& m) {
  return "x=" + std::to_string(m.x) + " k=" + std::to_string(m.k) +
         " p=" + std::to_string(m.p) + " predicted=" + std::to_string(m.predicted) +
         " actual=" + std::to_string(m.actual) + " case_label=" + m.case_label;
}

ValuationSurvey verify_valuation_lemmas(unsigned long x_max, unsigned long k_max) {
  ValuationSurvey survey;
  for (unsigned long k = 1; k <= k_max; ++k) {
    // prefix sums of j^k up to 2*x_max; S_k(x) = P[x], T_k(x) = P[2x] - P[x]
    std::vector<Int> prefix(2 * x_max + 1);
    prefix[0] = 0;
    for (unsigned long j = 1; j <= 2 * x_max; ++j) {
      prefix[j] = prefix[j - 1] + pow_int(Int(j), k);
    }
    for (unsigned long x = 1; x <= x_max; ++x) {
      const Int t_val = prefix[2 * x] - prefix[x];
      const Int s_val = prefix[x];
      const Int xi(x);

      auto record = [&](const ValuationPrediction& pred, const Int& value, unsigned long p) {
        ++survey.branch_hits[std::string(pred.case_label)];
        if (!pred.covered) return;
        ++survey.checked;
        const unsigned long actual = vp(value, p);
        if (actual != pred.value) {
          survey.mismatches.push_back(
              {x, k, p, pred.value, actual, std::string(pred.case_label)});
        }
      };

      record(predict_v2_T(xi, k), t_val, 2);
      record(predict_v3_T(xi, k), t_val, 3);
      record(predict_v3_S(xi, k), s_val, 3);
    }
  }
  return survey;
}

std::vector<CongruenceMismatch> verify_congruence_lemmas(unsigned long p,
                                                         const CongruenceRanges& ranges) {
  if (p < 3 || p % 2 == 0 || !is_prime_u64(p)) {
    throw std::invalid_argument("verify_congruence_lemmas: p must be an odd prime");
  }
  std::vector<CongruenceMismatch> out;

  // cache exact power sums S_k(m) for m <= m_max
  std::vector<std::vector<Int>> s(ranges.k_max + 1,
                                  std::vector<Int>(ranges.m_max + 1, Int(0)));
  for (unsigned long k = 1; k <= ranges.k_max; ++k) {
    for (unsigned long m = 1; m <= ranges.m_max; ++m) {
      s[k][m] = s[k][m - 1] + pow_int(Int(m), k);
    }
  }
  auto s_of = [&](unsigned long k, unsigned long m) -> const Int& { return s[k][m]; };

  // splitting identity mod p^d with m1, m2 multiples of p^d (or zero)
  for (unsigned long d = 1; d <= ranges.d_max; ++d) {
    Int pd = pow_int(Int(p), d);
    if (pd > ranges.m_max) break;
    const unsigned long pdu = static_cast<unsigned long>(pd.get_ui());
    for (unsigned long k = 1; k <= ranges.k_max; ++k) {
      for (unsigned long q = 0; q <= ranges.q_max; ++q) {
        for (unsigned long m1 = 0; m1 <= ranges.m_max; m1 += pdu) {
          for (unsigned long m2 = 0; m2 <= ranges.m_max; m2 += pdu) {
            if (q * m1 + m2 > ranges.m_max) break;
            Int lhs = s_of(k, q * m1 + m2) % pd;
            Int rhs = (Int(q) * s_of(k, m1) + s_of(k, m2)) % pd;
            if (lhs != rhs) {
              out.push_back({"split", p, d, k, q * m1 + m2, q, m1, m2, rhs.get_str(),
                             lhs.get_str()});
            }
          }
        }
      }
    }
  }

  // residue cases: m with trailing base-p digit r repeated d times, next digit
  // distinct; decomposition m = q*p^d + r*(p^d-1)/(p-1)
  for (unsigned long m = 1; m <= ranges.m_max; ++m) {
    const unsigned long r = m % p;
    if (!(r == 0 || r == p - 1 || r == (p - 1) / 2)) continue;
    for (unsigned long d = 1; d <= ranges.d_max; ++d) {
      Int pd = pow_int(Int(p), d);
      Int repunit = (pd - 1) / (p - 1);
      Int qn = Int(m) - Int(r) * repunit;
      if (qn < 0 || qn % pd != 0) break;  // no valid decomposition at this depth
      Int q = qn / pd;
      if (mod_ui(q, p) == r) continue;  // hypothesis 0 <= q != r (mod p)
      for (unsigned long k = 1; k <= ranges.k_max; ++k) {
        const bool div = (k % (p - 1) == 0);
        Int actual = s_of(k, m) % pd;
        if (actual < 0) actual += pd;
        Int expected;
        std::string which;
        if (r == 0) {
          which = "m=0";
          // -p^(d-1) * q: the q factor is what the valuation formulas consume
          // (m = q p^d spans q complete residue systems mod p^d)
          expected = div ? Int(-pow_int(Int(p), d - 1) * q) : Int(0);
        } else if (r == p - 1) {
          which = "m=-1";
          expected = div ? Int(-pow_int(Int(p), d - 1) * (q + 1)) : Int(0);
        } else {
          which = "m=(p-1)/2";
          if (k % 2 != 0) continue;  // half-residue case holds for even k only
          // q + 1/2 taken mod p^d via the inverse of 2
          Int inv2 = (pd + 1) / 2;
          expected = div ? Int(-pow_int(Int(p), d - 1) * (q + inv2)) : Int(0);
        }
        expected %= pd;
        if (expected < 0) expected += pd;
        if (actual != expected) {
          out.push_back({which, p, d, k, m, static_cast<unsigned long>(q.get_ui()), 0, 0,
                         expected.get_str(), actual.get_str()});
        }
      }
    }
  }
  return out;
}

}  // namespace powersum
