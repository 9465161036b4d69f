#include "powersum/directed_real.hpp"

#include <stdexcept>

namespace powersum {

DirectedReal::DirectedReal(Dir d, mpfr_prec_t prec) : dir_(d) { mpfr_init2(v_, prec); }

DirectedReal::DirectedReal(const DirectedReal& o) : dir_(o.dir_) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);  // exact: same precision
}

DirectedReal::DirectedReal(DirectedReal&& o) noexcept : dir_(o.dir_) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

DirectedReal& DirectedReal::operator=(const DirectedReal& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
    dir_ = o.dir_;
  }
  return *this;
}

DirectedReal& DirectedReal::operator=(DirectedReal&& o) noexcept {
  if (this != &o) {
    mpfr_swap(v_, o.v_);
    dir_ = o.dir_;
  }
  return *this;
}

DirectedReal::~DirectedReal() { mpfr_clear(v_); }

DirectedReal DirectedReal::from_long(long v, Dir d, mpfr_prec_t prec) {
  DirectedReal r(d, prec);
  mpfr_set_si(r.v_, v, rnd(d));
  return r;
}

DirectedReal DirectedReal::from_integer(const Int& v, Dir d, mpfr_prec_t prec) {
  DirectedReal r(d, prec);
  mpfr_set_z(r.v_, v.get_mpz_t(), rnd(d));
  return r;
}

DirectedReal DirectedReal::from_rational(const Rat& v, Dir d, mpfr_prec_t prec) {
  DirectedReal r(d, prec);
  mpfr_set_q(r.v_, v.get_mpq_t(), rnd(d));
  return r;
}

DirectedReal DirectedReal::retag(Dir d) const {
  DirectedReal r(d, precision());
  mpfr_set(r.v_, v_, MPFR_RNDN);  // exact
  return r;
}

void DirectedReal::require_positive(const char* op) const {
  if (mpfr_sgn(v_) <= 0) {
    throw std::logic_error(std::string("DirectedReal: ") + op + " requires a positive value");
  }
}

namespace {

DirectedReal::Dir opposite(DirectedReal::Dir d) {
  return d == DirectedReal::Dir::Down ? DirectedReal::Dir::Up : DirectedReal::Dir::Down;
}

[[noreturn]] void direction_violation(const char* op) {
  throw std::logic_error(std::string("DirectedReal: direction contract violation in ") + op);
}

}  // namespace

DirectedReal operator+(const DirectedReal& a, const DirectedReal& b) {
  if (a.dir_ != b.dir_) direction_violation("operator+");
  DirectedReal r(a.dir_, std::max(a.precision(), b.precision()));
  mpfr_add(r.v_, a.v_, b.v_, DirectedReal::rnd(a.dir_));
  return r;
}

DirectedReal operator-(const DirectedReal& a, const DirectedReal& b) {
  if (b.dir_ != opposite(a.dir_)) direction_violation("operator-");
  DirectedReal r(a.dir_, std::max(a.precision(), b.precision()));
  mpfr_sub(r.v_, a.v_, b.v_, DirectedReal::rnd(a.dir_));
  return r;
}

DirectedReal operator*(const DirectedReal& a, const DirectedReal& b) {
  if (a.dir_ != b.dir_) direction_violation("operator*");
  a.require_positive("operator*");
  b.require_positive("operator*");
  DirectedReal r(a.dir_, std::max(a.precision(), b.precision()));
  mpfr_mul(r.v_, a.v_, b.v_, DirectedReal::rnd(a.dir_));
  return r;
}

DirectedReal operator/(const DirectedReal& a, const DirectedReal& b) {
  if (b.dir_ != opposite(a.dir_)) direction_violation("operator/");
  a.require_positive("operator/");
  b.require_positive("operator/");
  DirectedReal r(a.dir_, std::max(a.precision(), b.precision()));
  mpfr_div(r.v_, a.v_, b.v_, DirectedReal::rnd(a.dir_));
  return r;
}

DirectedReal DirectedReal::log() const {
  require_positive("log");
  DirectedReal r(dir_, precision());
  mpfr_log(r.v_, v_, rnd(dir_));
  return r;
}

DirectedReal DirectedReal::sqrt() const {
  if (mpfr_sgn(v_) < 0) throw std::logic_error("DirectedReal: sqrt of negative value");
  DirectedReal r(dir_, precision());
  mpfr_sqrt(r.v_, v_, rnd(dir_));
  return r;
}

DirectedReal DirectedReal::pow(const Rat& exponent) const {
  require_positive("pow");
  Int den = exponent.get_den();
  // exponent must be exactly representable so only the power itself rounds
  if (mpz_popcount(den.get_mpz_t()) != 1) {
    throw std::logic_error("DirectedReal: pow exponent must be dyadic");
  }
  if (exponent <= 0 || cmp_ui(1) < 0) {
    throw std::logic_error("DirectedReal: pow requires base >= 1 and exponent > 0");
  }
  DirectedReal e(dir_, precision());
  mpfr_set_q(e.v_, exponent.get_mpq_t(), MPFR_RNDN);  // exact for dyadic exponents
  DirectedReal r(dir_, precision());
  mpfr_pow(r.v_, v_, e.v_, rnd(dir_));
  return r;
}

std::string DirectedReal::str(int digits) const {
  mpfr_exp_t exp;
  char* s = mpfr_get_str(nullptr, &exp, 10, static_cast<std::size_t>(digits), v_,
                         rnd(dir_));
  std::string mant(s);
  mpfr_free_str(s);
  bool neg = !mant.empty() && mant[0] == '-';
  std::string digits_only = neg ? mant.substr(1) : mant;
  std::string out = (neg ? "-" : "") + ("0." + digits_only) + "e" + std::to_string(exp);
  return out;
}

Dual Dual::from_long(long v, mpfr_prec_t prec) {
  return {DirectedReal::from_long(v, DirectedReal::Dir::Down, prec),
          DirectedReal::from_long(v, DirectedReal::Dir::Up, prec)};
}

Dual Dual::from_integer(const Int& v, mpfr_prec_t prec) {
  return {DirectedReal::from_integer(v, DirectedReal::Dir::Down, prec),
          DirectedReal::from_integer(v, DirectedReal::Dir::Up, prec)};
}

Dual Dual::from_rational(const Rat& v, mpfr_prec_t prec) {
  return {DirectedReal::from_rational(v, DirectedReal::Dir::Down, prec),
          DirectedReal::from_rational(v, DirectedReal::Dir::Up, prec)};
}

Dual Dual::pinned(const DirectedReal& v) {
  return {v.retag(DirectedReal::Dir::Down), v.retag(DirectedReal::Dir::Up)};
}

Dual Dual::operator+(const Dual& o) const { return {dn + o.dn, up + o.up}; }
Dual Dual::operator-(const Dual& o) const { return {dn - o.up, up - o.dn}; }
Dual Dual::operator*(const Dual& o) const { return {dn * o.dn, up * o.up}; }
Dual Dual::operator/(const Dual& o) const { return {dn / o.up, up / o.dn}; }
Dual Dual::log() const { return {dn.log(), up.log()}; }
Dual Dual::sqrt() const { return {dn.sqrt(), up.sqrt()}; }
Dual Dual::pow(const Rat& e) const { return {dn.pow(e), up.pow(e)}; }

}  // namespace powersum
