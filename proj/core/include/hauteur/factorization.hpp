#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "hauteur/integer.hpp"
#include "hauteur/real.hpp"

namespace hauteur {

/// Positive integer held as prime -> exponent. Every key is prime and every
/// stored exponent is >= 1; the empty map is 1. This is the canonical form
/// for bounds far beyond anything worth expanding (10^1941 and up).
class Factorization {
 public:
  using Map = std::map<Integer, Integer>;

  /// Expansion refuses results with more decimal digits than this.
  static constexpr std::size_t kDefaultDigitLimit = 1'000'000;

  Factorization() = default;

  /// Factors n >= 1.
  static Factorization of(const Integer& n);
  static Factorization of(unsigned long n) { return of(Integer(n)); }
  static Factorization prime_power(const Integer& prime, const Integer& exponent);
  /// Validates primality of keys; zero exponents are dropped.
  static Factorization from_map(const Map& factors);
  /// Parses the rendering of to_string(): "2^2 * 3^21 * 5", "1".
  static Factorization parse(std::string_view text);

  const Map& factors() const { return factors_; }
  Integer exponent(const Integer& prime) const;
  bool is_one() const { return factors_.empty(); }

  Factorization& operator*=(const Factorization& rhs);
  friend Factorization operator*(Factorization a, const Factorization& b) { return a *= b; }
  Factorization pow(const Integer& k) const;

  bool divides(const Factorization& other) const;
  /// Throws std::domain_error when `divisor` does not divide *this.
  Factorization exact_div(const Factorization& divisor) const;

  static Factorization gcd(const Factorization& a, const Factorization& b);
  static Factorization lcm(const Factorization& a, const Factorization& b);

  /// Throws std::length_error when the result would exceed `max_digits`.
  Integer expand(std::size_t max_digits = kDefaultDigitLimit) const;

  /// log10 of the value, rounded to nearest at `precision` bits.
  Real log10(mpfr_prec_t precision = 128) const;
  /// Natural log enclosed with outward rounding.
  Interval ln_interval(mpfr_prec_t precision) const;

  /// Primes ascending, " * " separated, exponent 1 omitted.
  std::string to_string() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  Map factors_;
};

/// Exact ordering of the represented integers. Common factors are cancelled
/// first; the remainder is decided by log enclosures at increasing precision.
std::strong_ordering compare(const Factorization& a, const Factorization& b);

}  // namespace hauteur
