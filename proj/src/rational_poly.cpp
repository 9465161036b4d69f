#include "powersum/rational_poly.hpp"

#include <stdexcept>

namespace powersum {

void RationalPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat RationalPoly::eval(const Rat& t) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * t + *it;
  }
  return acc;
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
  if (is_zero() || o.is_zero()) return RationalPoly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      r[i + j] += c_[i] * o.c_[j];
    }
  }
  return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::operator*(const Rat& s) const {
  std::vector<Rat> r(c_);
  for (auto& v : r) v *= s;
  return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::compose_linear(const Rat& a, const Rat& b) const {
  RationalPoly acc;
  const RationalPoly lin({b, a});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * lin + RationalPoly::constant(*it);
  }
  return acc;
}

RationalPoly::DivRem RationalPoly::divrem(const RationalPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("RationalPoly: division by zero");
  std::vector<Rat> rem(c_);
  const long dd = divisor.degree();
  const Rat lead = divisor.c_.back();
  long rd = static_cast<long>(rem.size()) - 1;
  std::vector<Rat> quot;
  if (rd >= dd) quot.assign(static_cast<std::size_t>(rd - dd + 1), Rat(0));
  while (rd >= dd) {
    if (rem[static_cast<std::size_t>(rd)] != 0) {
      Rat q = rem[static_cast<std::size_t>(rd)] / lead;
      quot[static_cast<std::size_t>(rd - dd)] = q;
      for (long i = 0; i <= dd; ++i) {
        rem[static_cast<std::size_t>(rd - dd + i)] -= q * divisor.c_[static_cast<std::size_t>(i)];
      }
    }
    --rd;
  }
  return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

bool RationalPoly::divisible_by(const RationalPoly& divisor) const {
  return divrem(divisor).remainder.is_zero();
}

}  // namespace powersum
