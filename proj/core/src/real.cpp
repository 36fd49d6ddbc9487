#include "hauteur/real.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "hauteur/rational.hpp"

namespace hauteur {
namespace {

mpfr_prec_t joint(const Real& a, const Real& b) {
  return std::max(a.precision(), b.precision());
}

void raise_precision(Real& target, mpfr_prec_t wanted) {
  if (target.precision() < wanted) {
    mpfr_prec_round(target.get(), wanted, MPFR_RNDN);
  }
}

}  // namespace

Real::Real(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

Real::Real(double value, mpfr_prec_t precision) : Real(precision) {
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(long value, mpfr_prec_t precision) : Real(precision) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const Integer& value, mpfr_prec_t precision, mpfr_rnd_t rnd) : Real(precision) {
  mpfr_set_z(value_, value.get_mpz_t(), rnd);
}

Real::Real(const ExactRational& value, mpfr_prec_t precision, mpfr_rnd_t rnd) : Real(precision) {
  mpfr_set_q(value_, value.get_mpq().get_mpq_t(), rnd);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

std::string Real::to_string(int significant) const {
  if (!is_finite()) return mpfr_nan_p(value_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
  std::vector<char> buffer(static_cast<std::size_t>(significant) + 64);
  mpfr_snprintf(buffer.data(), buffer.size(), "%.*Rg", significant, value_);
  return std::string(buffer.data());
}

Real& Real::operator+=(const Real& rhs) {
  raise_precision(*this, joint(*this, rhs));
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  raise_precision(*this, joint(*this, rhs));
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  raise_precision(*this, joint(*this, rhs));
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  raise_precision(*this, joint(*this, rhs));
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

#define HAUTEUR_UNARY(name, fn)              \
  Real name(const Real& x) {                 \
    Real out(x.precision());                 \
    fn(out.get(), x.get(), MPFR_RNDN);       \
    return out;                              \
  }

HAUTEUR_UNARY(log, mpfr_log)
HAUTEUR_UNARY(log1p, mpfr_log1p)
HAUTEUR_UNARY(exp, mpfr_exp)
HAUTEUR_UNARY(sqrt, mpfr_sqrt)
HAUTEUR_UNARY(abs, mpfr_abs)
HAUTEUR_UNARY(cos, mpfr_cos)
HAUTEUR_UNARY(sin, mpfr_sin)
#undef HAUTEUR_UNARY

Real hypot(const Real& x, const Real& y) {
  Real out(joint(x, y));
  mpfr_hypot(out.get(), x.get(), y.get(), MPFR_RNDN);
  return out;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real const_pi(mpfr_prec_t precision) {
  Real out(precision);
  mpfr_const_pi(out.get(), MPFR_RNDN);
  return out;
}

Real const_log2(mpfr_prec_t precision) {
  Real out(precision);
  mpfr_const_log2(out.get(), MPFR_RNDN);
  return out;
}

Real power_of_two(long e, mpfr_prec_t precision) {
  Real out(precision);
  mpfr_set_ui_2exp(out.get(), 1, e, MPFR_RNDN);
  return out;
}

Interval Interval::exact(const Integer& value, mpfr_prec_t precision) {
  return {Real(value, precision, MPFR_RNDD), Real(value, precision, MPFR_RNDU)};
}

Interval Interval::exact(const ExactRational& value, mpfr_prec_t precision) {
  return {Real(value, precision, MPFR_RNDD), Real(value, precision, MPFR_RNDU)};
}

Interval Interval::log_of(const Integer& positive, mpfr_prec_t precision) {
  if (positive <= 0) throw std::domain_error("log of non-positive integer");
  Interval arg = exact(positive, precision + 8);
  Interval out{Real(precision), Real(precision)};
  mpfr_log(out.lo.get(), arg.lo.get(), MPFR_RNDD);
  mpfr_log(out.hi.get(), arg.hi.get(), MPFR_RNDU);
  return out;
}

Real Interval::width() const {
  Real out(std::max(lo.precision(), hi.precision()));
  mpfr_sub(out.get(), hi.get(), lo.get(), MPFR_RNDU);
  return out;
}

Real Interval::midpoint() const {
  Real out = lo + hi;
  mpfr_div_2ui(out.get(), out.get(), 1, MPFR_RNDN);
  return out;
}

Interval mul_nonneg(const Interval& a, const Interval& b) {
  if (a.lo.sign() < 0 || b.lo.sign() < 0) {
    throw std::domain_error("mul_nonneg: negative operand");
  }
  mpfr_prec_t prec = std::max(joint(a.lo, b.lo), joint(a.hi, b.hi));
  Interval out{Real(prec), Real(prec)};
  mpfr_mul(out.lo.get(), a.lo.get(), b.lo.get(), MPFR_RNDD);
  mpfr_mul(out.hi.get(), a.hi.get(), b.hi.get(), MPFR_RNDU);
  return out;
}

Interval add(const Interval& a, const Interval& b) {
  mpfr_prec_t prec = std::max(joint(a.lo, b.lo), joint(a.hi, b.hi));
  Interval out{Real(prec), Real(prec)};
  mpfr_add(out.lo.get(), a.lo.get(), b.lo.get(), MPFR_RNDD);
  mpfr_add(out.hi.get(), a.hi.get(), b.hi.get(), MPFR_RNDU);
  return out;
}

Interval sub(const Interval& a, const Interval& b) {
  mpfr_prec_t prec = std::max(joint(a.lo, b.hi), joint(a.hi, b.lo));
  Interval out{Real(prec), Real(prec)};
  mpfr_sub(out.lo.get(), a.lo.get(), b.hi.get(), MPFR_RNDD);
  mpfr_sub(out.hi.get(), a.hi.get(), b.lo.get(), MPFR_RNDU);
  return out;
}

}  // namespace hauteur
