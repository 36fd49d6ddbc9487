#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hauteur/integer.hpp"

namespace hauteur {

/// Dense integer polynomial, coefficients lowest degree first, no trailing
/// zeros (the zero polynomial is the empty vector).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> low_to_high);

  const std::vector<Integer>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Integer& leading() const { return coeffs_.back(); }
  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }

  Integer content() const;

  IntPolynomial operator*(const IntPolynomial& rhs) const;
  IntPolynomial operator-() const;
  /// Quotient when `divisor` divides *this exactly over Z, else nothing.
  std::optional<IntPolynomial> exact_divide(const IntPolynomial& divisor) const;

  /// "x^2 - x - 1"
  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<Integer> coeffs_;
};

/// The n-th cyclotomic polynomial, n >= 1.
IntPolynomial cyclotomic(unsigned long n);

/// Euler's totient.
unsigned long euler_phi(unsigned long n);

/// Parses "x^2 - x - 1", "2*x^3 + x", "-x + 7" (variable x, integer
/// coefficients). Throws std::invalid_argument on malformed input.
IntPolynomial parse_polynomial(const std::string& text);

}  // namespace hauteur
