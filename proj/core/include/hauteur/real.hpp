#pragma once

#include <compare>
#include <string>

#include <mpfr.h>

#include "hauteur/integer.hpp"

namespace hauteur {

class ExactRational;

/// Owning wrapper around an MPFR float. Arithmetic operators round to
/// nearest at the larger of the operand precisions; the free functions with
/// an explicit mpfr_rnd_t are for directed-rounding (interval) code.
class Real {
 public:
  explicit Real(mpfr_prec_t precision = 128);
  Real(double value, mpfr_prec_t precision);
  Real(long value, mpfr_prec_t precision);
  Real(int value, mpfr_prec_t precision) : Real(static_cast<long>(value), precision) {}
  Real(const Integer& value, mpfr_prec_t precision, mpfr_rnd_t rnd = MPFR_RNDN);
  Real(const ExactRational& value, mpfr_prec_t precision, mpfr_rnd_t rnd = MPFR_RNDN);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Scientific or fixed rendering with at most `significant` digits.
  std::string to_string(int significant = 15) const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real operator-() const;

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

 private:
  mpfr_t value_;
};

Real log(const Real& x);
Real log1p(const Real& x);
Real exp(const Real& x);
Real sqrt(const Real& x);
Real abs(const Real& x);
Real cos(const Real& x);
Real sin(const Real& x);
Real hypot(const Real& x, const Real& y);
Real max(const Real& a, const Real& b);
Real const_pi(mpfr_prec_t precision);
Real const_log2(mpfr_prec_t precision);
/// 2^e as an exact power of two at the given precision.
Real power_of_two(long e, mpfr_prec_t precision);

/// Closed real interval [lo, hi] maintained with outward rounding.
struct Interval {
  Real lo;
  Real hi;

  static Interval exact(const Integer& value, mpfr_prec_t precision);
  static Interval exact(const ExactRational& value, mpfr_prec_t precision);
  static Interval log_of(const Integer& positive, mpfr_prec_t precision);

  bool certainly_below(const Interval& other) const { return hi < other.lo; }
  bool certainly_above(const Interval& other) const { return lo > other.hi; }
  Real width() const;
  Real midpoint() const;
};

/// Operands must be non-negative for `mul`.
Interval mul_nonneg(const Interval& a, const Interval& b);
Interval add(const Interval& a, const Interval& b);
Interval sub(const Interval& a, const Interval& b);

}  // namespace hauteur
