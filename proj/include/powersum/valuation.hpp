#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "powersum/integers.hpp"

namespace powersum {

// Closed-form prediction for a p-adic valuation. covered == false means the
// case tables leave the branch open; value is then meaningless.
struct ValuationPrediction {
  bool covered = false;
  unsigned long value = 0;
  std::string_view case_label;  // names exactly one dispatch branch
};

// Branch labels, shared with the verification harness so per-branch coverage
// is a testable claim.
namespace branch {
inline constexpr std::string_view v2_even_k1_or_even = "v2T:x-even:k1-or-even";
inline constexpr std::string_view v2_even_k_odd = "v2T:x-even:k-odd>=3";
inline constexpr std::string_view v2_odd_k1 = "v2T:x-odd:k1";
inline constexpr std::string_view v2_x37_mod8 = "v2T:x-3,7-mod8:k>=2";
inline constexpr std::string_view v2_x1_mod8_k2 = "v2T:x-1-mod8:k2";
inline constexpr std::string_view v2_x1_mod8_k3 = "v2T:x-1-mod8:k3";
inline constexpr std::string_view v2_x5_mod8_k_odd = "v2T:x-5-mod8:k-odd>=3";
inline constexpr std::string_view v2_x5_mod8_k_even = "v2T:x-5-mod8:k-even>=2";
inline constexpr std::string_view v2_x9_mod16_k_even = "v2T:x-9-mod16:k-even>=4";
inline constexpr std::string_view v2_x9_mod16_k_odd = "v2T:x-9-mod16:k-odd>=5";
inline constexpr std::string_view v2_x17_mod32_k_even = "v2T:x-17-mod32:k-even>=4";
inline constexpr std::string_view v2_x17_mod32_k_odd = "v2T:x-17-mod32:k-odd>=5";
inline constexpr std::string_view v2_not_covered = "v2T:x-1-mod32:k>=4:not-covered";

inline constexpr std::string_view v3t_k1 = "v3T:k1";
inline constexpr std::string_view v3t_x0_mod3_k_even = "v3T:x-0-mod3:k-even>=2";
inline constexpr std::string_view v3t_x0_mod3_k3 = "v3T:x-0-mod3:k3";
inline constexpr std::string_view v3t_x0_mod3_k_odd = "v3T:x-0-mod3:k-odd>3";
inline constexpr std::string_view v3t_xpm1_mod3_k_odd = "v3T:x-pm1-mod3:k-odd>=3";
inline constexpr std::string_view v3t_x28_mod9_k_even = "v3T:x-2,8-mod9:k-even>=2";
inline constexpr std::string_view v3t_x1_mod3_k_even = "v3T:x-1-mod3:k-even>=2";
inline constexpr std::string_view v3t_not_covered = "v3T:x-5-mod9:k-even:not-covered";

inline constexpr std::string_view v3s_k1 = "v3S:k1";
inline constexpr std::string_view v3s_k_even = "v3S:k-even";
inline constexpr std::string_view v3s_x1_mod3_k_odd = "v3S:x-1-mod3:k-odd>=3";
inline constexpr std::string_view v3s_x02_mod3_k_odd = "v3S:x-0,2-mod3:k-odd>=3";
}  // namespace branch

// Case tables for v2(T_k(x)) and v3(T_k(x)), and for v3(S_k(x)).
ValuationPrediction predict_v2_T(const Int& x, unsigned long k);
ValuationPrediction predict_v3_T(const Int& x, unsigned long k);
ValuationPrediction predict_v3_S(const Int& x, unsigned long k);

// Exponent bound for T_k(x) = y^n derived from the valuation case tables.
// Branches are tried in fixed order: the mod-4 table, then the odd-x mod-8/16/32
// table, then the mod-3/9 table; the first covering branch wins. A bound <= 1
// means no solution exists with n >= 2.
struct BoundOutcome {
  enum class Kind { UpperBound, NoSolutionForNGe2, NotCovered };
  Kind kind = Kind::NotCovered;
  unsigned long n_max = 0;  // meaningful only for UpperBound; always >= 2
  std::string_view case_label;
};
BoundOutcome exponent_bound(const Int& x, unsigned long k);

// Brute-force oracle harness: checks every covered (x, k) in range against
// the exact valuation of the exact sum. Expected to return zero mismatches.
struct ValuationMismatch {
  unsigned long x = 0, k = 0, p = 0;
  unsigned long predicted = 0, actual = 0;
  std::string case_label;
};
// One record per mismatch, stable field order.
std::string to_record(const ValuationMismatch& m);
struct ValuationSurvey {
  std::vector<ValuationMismatch> mismatches;
  std::map<std::string, unsigned long> branch_hits;
  unsigned long checked = 0;
};
ValuationSurvey verify_valuation_lemmas(unsigned long x_max, unsigned long k_max);

// Exhaustive congruence checks for the power-sum splitting identity
// S_k(q*m1 + m2) == q*S_k(m1) + S_k(m2) (mod p^d) with p^d | m1, m2, and for
// the residue cases of S_k(m) mod p^d at m = 0, -1, (p-1)/2 (mod p). The
// half-residue case is checked for even k only: for odd k the stated
// congruence fails (e.g. S_1(7) = 28 = 1 mod 3), and every downstream use is
// even-k.
struct CongruenceRanges {
  unsigned d_max = 3;
  unsigned long k_max = 8;
  unsigned long m_max = 200;
  unsigned long q_max = 6;
};
struct CongruenceMismatch {
  std::string which;  // "split", "m=0", "m=-1", "m=(p-1)/2"
  unsigned long p = 0, d = 0, k = 0;
  unsigned long m = 0, q = 0, m1 = 0, m2 = 0;
  std::string expected, actual;
};
std::vector<CongruenceMismatch> verify_congruence_lemmas(unsigned long p,
                                                         const CongruenceRanges& ranges);

}  // namespace powersum
