#pragma once

#include <compare>
#include <string>

#include <gmpxx.h>

#include "hauteur/integer.hpp"

namespace hauteur {

/// Reduced fraction with positive denominator.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  ExactRational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  ExactRational(const Integer& numerator, const Integer& denominator);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  const mpq_class& get_mpq() const { return value_; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "27/20", or "3" when the denominator is 1.
  std::string to_string() const;
  static ExactRational parse(const std::string& text);

  ExactRational& operator+=(const ExactRational& rhs) { value_ += rhs.value_; return *this; }
  ExactRational& operator-=(const ExactRational& rhs) { value_ -= rhs.value_; return *this; }
  ExactRational& operator*=(const ExactRational& rhs) { value_ *= rhs.value_; return *this; }
  ExactRational& operator/=(const ExactRational& rhs);
  ExactRational operator-() const { ExactRational out; out.value_ = -value_; return out; }

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

}  // namespace hauteur
