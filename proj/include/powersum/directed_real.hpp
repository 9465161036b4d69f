#pragma once

#include <mpfr.h>

#include <string>

#include "powersum/integers.hpp"

namespace powersum {

// High-precision real with an explicit rounding direction. Every operation
// rounds in the direction that keeps the enclosing bound valid: Down values
// are lower bounds and round toward -inf, Up values are upper bounds and
// round toward +inf. Combining mismatched directions where that would break
// the enclosure (same-direction addition, opposite-direction subtrahend or
// denominator) throws std::logic_error.
class DirectedReal {
 public:
  enum class Dir { Down, Up };

  DirectedReal() = delete;
  DirectedReal(const DirectedReal& o);
  DirectedReal(DirectedReal&& o) noexcept;
  DirectedReal& operator=(const DirectedReal& o);
  DirectedReal& operator=(DirectedReal&& o) noexcept;
  ~DirectedReal();

  static DirectedReal from_long(long v, Dir d, mpfr_prec_t prec);
  static DirectedReal from_integer(const Int& v, Dir d, mpfr_prec_t prec);
  static DirectedReal from_rational(const Rat& v, Dir d, mpfr_prec_t prec);

  Dir dir() const { return dir_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  // Same numeric value, new direction tag. Legitimate only because the stored
  // value is exact as a dyadic constant (used to pin a chosen parameter).
  DirectedReal retag(Dir d) const;

  friend DirectedReal operator+(const DirectedReal& a, const DirectedReal& b);
  friend DirectedReal operator-(const DirectedReal& a, const DirectedReal& b);
  friend DirectedReal operator*(const DirectedReal& a, const DirectedReal& b);
  friend DirectedReal operator/(const DirectedReal& a, const DirectedReal& b);

  DirectedReal log() const;   // requires positive value
  DirectedReal sqrt() const;  // requires nonnegative value
  // Power with an exact dyadic exponent (denominator a power of two), base > 0.
  DirectedReal pow(const Rat& exponent) const;

  int sign() const { return mpfr_sgn(v_); }
  int cmp(const DirectedReal& o) const { return mpfr_cmp(v_, o.v_); }
  int cmp(const Int& o) const { return mpfr_cmp_z(v_, o.get_mpz_t()); }
  int cmp_ui(unsigned long o) const { return mpfr_cmp_ui(v_, o); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string str(int digits) const;

 private:
  DirectedReal(Dir d, mpfr_prec_t prec);
  static mpfr_rnd_t rnd(Dir d) { return d == Dir::Down ? MPFR_RNDD : MPFR_RNDU; }
  void require_positive(const char* op) const;

  mpfr_t v_;
  Dir dir_;
};

// Two-sided enclosure built from a pair of DirectedReals. All arithmetic
// assumes the enclosed quantity is positive wherever it is multiplied,
// divided, logged or rooted; addition tolerates signed values.
struct Dual {
  DirectedReal dn, up;

  static Dual from_long(long v, mpfr_prec_t prec);
  static Dual from_integer(const Int& v, mpfr_prec_t prec);
  static Dual from_rational(const Rat& v, mpfr_prec_t prec);
  // Pin a single computed bound as an exact chosen constant.
  static Dual pinned(const DirectedReal& v);

  Dual operator+(const Dual& o) const;
  Dual operator-(const Dual& o) const;
  Dual operator*(const Dual& o) const;
  Dual operator/(const Dual& o) const;
  Dual log() const;
  Dual sqrt() const;
  Dual pow(const Rat& exponent) const;

  double width() const { return up.to_double() - dn.to_double(); }
};

}  // namespace powersum
