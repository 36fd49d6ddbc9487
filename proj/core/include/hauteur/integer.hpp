#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hauteur {

using Integer = mpz_class;

/// Primality: deterministic Miller-Rabin below 2^64, strong probable-prime
/// test against the first 24 primes as witnesses above.
bool is_prime(const Integer& n);

/// Prime factors of n >= 1 with multiplicity, ascending. Trial division
/// followed by Pollard-Brent rho on the cofactor.
std::vector<Integer> prime_factors(const Integer& n);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer pow(const Integer& base, unsigned long exponent);

/// Decimal digits of |n| (exact).
std::size_t decimal_digits(const Integer& n);

std::string to_string(const Integer& n);

/// Parses a base-10 integer, optionally signed; throws std::invalid_argument.
Integer parse_integer(const std::string& text);

/// Narrowing conversion that throws std::overflow_error when n does not fit.
std::uint64_t to_u64(const Integer& n);

}  // namespace hauteur
