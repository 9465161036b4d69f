#pragma once

#include <vector>

#include "powersum/integers.hpp"

namespace powersum {

// Dense polynomial over the rationals, coefficients lowest degree first.
// The zero polynomial has an empty coefficient vector; otherwise the leading
// coefficient is nonzero.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static RationalPoly constant(const Rat& v) { return RationalPoly({v}); }

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is reported as -1
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }

  Rat eval(const Rat& t) const;

  RationalPoly operator+(const RationalPoly& o) const;
  RationalPoly operator-(const RationalPoly& o) const;
  RationalPoly operator*(const RationalPoly& o) const;
  RationalPoly operator*(const Rat& s) const;
  bool operator==(const RationalPoly& o) const { return c_ == o.c_; }

  // P(a*x + b)
  RationalPoly compose_linear(const Rat& a, const Rat& b) const;

  // Exact division with remainder; divisor must be nonzero.
  struct DivRem;
  DivRem divrem(const RationalPoly& divisor) const;
  bool divisible_by(const RationalPoly& divisor) const;

 private:
  void trim();
  std::vector<Rat> c_;
};

struct RationalPoly::DivRem {
  RationalPoly quotient, remainder;
};

}  // namespace powersum
