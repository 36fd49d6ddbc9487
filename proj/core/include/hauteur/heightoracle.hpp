#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hauteur/polynomial.hpp"
#include "hauteur/real.hpp"

namespace hauteur {

/// An algebraic number given by its minimal polynomial over Z. The
/// polynomial is stored primitive with positive leading coefficient.
/// Irreducibility is the caller's claim; make() only rejects inputs that the
/// rational-root / quadratic-factor screen proves reducible.
class AlgebraicNumber {
 public:
  static AlgebraicNumber make(IntPolynomial minimal_polynomial);
  static AlgebraicNumber parse(const std::string& text);

  const IntPolynomial& polynomial() const { return poly_; }
  long degree() const { return poly_.degree(); }
  std::string to_string() const { return poly_.to_string(); }

  friend bool operator==(const AlgebraicNumber&, const AlgebraicNumber&) = default;

 private:
  friend std::vector<AlgebraicNumber> northcott_census(unsigned, double, unsigned, std::uint64_t);
  explicit AlgebraicNumber(IntPolynomial poly) : poly_(std::move(poly)) {}
  IntPolynomial poly_;
};

/// Complex disk certified to contain exactly one root.
struct RootBall {
  Real re;
  Real im;
  Real radius;
};

struct CertifiedRoots {
  std::vector<RootBall> roots;
  mpfr_prec_t working_precision = 0;
};

/// All complex roots of a squarefree polynomial of degree >= 1, each in a
/// disk of radius <= 2^-radius_bits, pairwise disjoint. Throws PrecisionError
/// if the working-precision ceiling is reached first.
CertifiedRoots certified_roots(const IntPolynomial& f, unsigned radius_bits);

struct HeightValue {
  Real value;
  /// |value - true height| <= error_bound.
  Real error_bound;
  mpfr_prec_t working_precision = 0;
};

/// (ln|lead| + sum ln max(1, |z|)) / deg over the given root balls, with a
/// rigorous error bound. The result does not depend on the order of `roots`.
HeightValue height_from_roots(const Integer& lead, std::span<const RootBall> roots);

/// log Mahler measure divided by the degree, for any squarefree integer
/// polynomial. Error bound <= 2^(-bits+8).
HeightValue mahler_height(const IntPolynomial& f, unsigned bits);

/// Absolute logarithmic Weil height.
HeightValue weil_height(const AlgebraicNumber& a, unsigned bits);

/// True iff the minimal polynomial is cyclotomic.
bool is_root_of_unity(const AlgebraicNumber& a);

/// False if a rational root or an integer quadratic factor was found (and
/// confirmed by exact division). Complete for degree <= 5.
bool passes_irreducibility_screen(const IntPolynomial& f);

/// Primitive integer polynomial whose roots are the lambda-th powers of the
/// roots of f (the characteristic polynomial of alpha^lambda), lambda >= 1.
IntPolynomial power_polynomial(const IntPolynomial& f, unsigned lambda);

inline constexpr std::uint64_t kDefaultCensusCandidateLimit = 2'000'000;

/// Every algebraic number of degree <= max_degree with Weil height <= cap,
/// one entry per minimal polynomial, ordered by degree and then
/// lexicographically on coefficients from the leading one down. Requires
/// max_degree <= 4 and 0 <= cap <= ln 3; throws std::length_error if the
/// coefficient box holds more than candidate_limit polynomials.
std::vector<AlgebraicNumber> northcott_census(unsigned max_degree, double height_cap,
                                              unsigned bits = 128,
                                              std::uint64_t candidate_limit = kDefaultCensusCandidateLimit);

}  // namespace hauteur
