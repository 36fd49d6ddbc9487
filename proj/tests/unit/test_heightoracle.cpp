#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "hauteur/errors.hpp"
#include "hauteur/heightoracle.hpp"
#include "oracles.hpp"

using namespace hauteur;

namespace {

double height(const std::string& poly, unsigned bits = 128) {
  return weil_height(AlgebraicNumber::parse(poly), bits).value.to_double();
}

IntPolynomial quadratic(long a, long b, long c) { return IntPolynomial({Integer(c), Integer(b), Integer(a)}); }

bool is_square(long n) {
  if (n < 0) return false;
  const long r = std::lround(std::sqrt(static_cast<double>(n)));
  return r * r == n;
}

std::vector<std::string> census_strings(unsigned degree, double cap, unsigned bits = 128) {
  std::vector<std::string> out;
  for (const AlgebraicNumber& a : northcott_census(degree, cap, bits)) out.push_back(a.to_string());
  return out;
}

const char* const kLehmer = "x^10 + x^9 - x^7 - x^6 - x^5 - x^4 - x^3 + x + 1";

}  // namespace

TEST(Polynomial, ParseAndRender) {
  EXPECT_EQ(parse_polynomial("x^2 - x - 1"), quadratic(1, -1, -1));
  EXPECT_EQ(parse_polynomial("2*x^3 + x").to_string(), "2*x^3 + x");
  EXPECT_EQ(parse_polynomial("-x + 7").to_string(), "-x + 7");
  EXPECT_EQ(parse_polynomial(" x^2+x+1 ").to_string(), "x^2 + x + 1");
  EXPECT_EQ(parse_polynomial("3").degree(), 0);
  EXPECT_THROW(parse_polynomial("x^^2"), std::invalid_argument);
  EXPECT_THROW(parse_polynomial("y + 1"), std::invalid_argument);
  EXPECT_THROW(parse_polynomial(""), std::invalid_argument);
}

TEST(Polynomial, ArithmeticAndDivision) {
  const IntPolynomial a = parse_polynomial("x - 1");
  const IntPolynomial b = parse_polynomial("x^2 + x + 1");
  const IntPolynomial product = a * b;
  EXPECT_EQ(product, parse_polynomial("x^3 - 1"));
  EXPECT_EQ(product.exact_divide(a), b);
  EXPECT_FALSE(b.exact_divide(parse_polynomial("x + 2")).has_value());
  EXPECT_EQ(parse_polynomial("6*x^2 + 4").content(), 2);
}

TEST(Polynomial, CyclotomicTable) {
  EXPECT_EQ(cyclotomic(1), parse_polynomial("x - 1"));
  EXPECT_EQ(cyclotomic(2), parse_polynomial("x + 1"));
  EXPECT_EQ(cyclotomic(12), parse_polynomial("x^4 - x^2 + 1"));
  EXPECT_EQ(cyclotomic(15), parse_polynomial("x^8 - x^7 + x^5 - x^4 + x^3 - x + 1"));
  for (unsigned long n = 1; n <= 60; ++n) EXPECT_EQ(cyclotomic(n).degree(), static_cast<long>(euler_phi(n)));
  // x^n - 1 is the product of the Phi_d with d | n.
  for (unsigned long n = 1; n <= 24; ++n) {
    IntPolynomial product({Integer(1)});
    for (unsigned long d = 1; d <= n; ++d) {
      if (n % d == 0) product = product * cyclotomic(d);
    }
    std::vector<Integer> xn(n + 1, Integer(0));
    xn[0] = -1;
    xn[n] = 1;
    EXPECT_EQ(product, IntPolynomial(xn)) << n;
  }
}

TEST(AlgebraicNumber, Normalization) {
  EXPECT_EQ(AlgebraicNumber::parse("-x^2 + x + 1").to_string(), "x^2 - x - 1");
  EXPECT_THROW(AlgebraicNumber::parse("2*x^2 - 2*x - 2"), std::invalid_argument);
  EXPECT_THROW(AlgebraicNumber::parse("5"), std::invalid_argument);
  EXPECT_THROW(AlgebraicNumber::parse("x^2 - 4"), std::invalid_argument);
  EXPECT_THROW(AlgebraicNumber::parse("x^2 + 3*x + 2"), std::invalid_argument);
  EXPECT_THROW(AlgebraicNumber::parse("x^4 + 4"), std::invalid_argument);
  EXPECT_NO_THROW(AlgebraicNumber::parse("x^4 - 2"));
}

TEST(Screen, FindsFactors) {
  EXPECT_FALSE(passes_irreducibility_screen(parse_polynomial("x^4 + 4")));
  EXPECT_FALSE(passes_irreducibility_screen(parse_polynomial("6*x^2 - x - 1")));
  EXPECT_FALSE(passes_irreducibility_screen(parse_polynomial("x^5 - x^4 - x + 1")));
  EXPECT_FALSE(passes_irreducibility_screen(parse_polynomial("x^3")));
  EXPECT_TRUE(passes_irreducibility_screen(parse_polynomial("x^5 - x - 1")));
  EXPECT_TRUE(passes_irreducibility_screen(parse_polynomial(kLehmer)));
}

TEST(WeilHeight, Examples) {
  EXPECT_NEAR(height("x - 2"), std::log(2.0), 1e-12);
  EXPECT_NEAR(height("x^2 - x - 1"), 0.5 * std::log((1 + std::sqrt(5.0)) / 2), 1e-12);
  EXPECT_NEAR(height(kLehmer), 0.0162357612, 1e-9);
  EXPECT_NEAR(height("x^2 + x + 1"), 0.0, 1e-12);
  EXPECT_NEAR(height("x - 1"), 0.0, 1e-12);
  EXPECT_NEAR(height("3*x - 7"), std::log(7.0), 1e-12);
}

TEST(WeilHeight, ErrorBoundHonoured) {
  for (unsigned bits : {32u, 64u, 200u}) {
    const HeightValue h = weil_height(AlgebraicNumber::parse("x^2 - x - 1"), bits);
    const double exact = 0.5 * std::log((1 + std::sqrt(5.0)) / 2);
    EXPECT_LE(h.error_bound.to_double(), std::ldexp(1.0, -static_cast<int>(bits) + 8));
    EXPECT_LE(std::fabs(h.value.to_double() - exact), h.error_bound.to_double() + 1e-15);
  }
}

TEST(WeilHeight, QuadraticClosedForm) {
  auto rng = oracle::rng(40);
  std::uniform_int_distribution<long> coeff(-40, 40);
  std::uniform_int_distribution<long> lead(1, 12);
  int checked = 0;
  while (checked < 150) {
    const long a = lead(rng), b = coeff(rng), c = coeff(rng);
    if (c == 0 || is_square(b * b - 4 * a * c)) continue;
    if (gcd(gcd(Integer(a), Integer(b)), Integer(c)) != 1) continue;
    const double h = weil_height(AlgebraicNumber::make(quadratic(a, b, c)), 128).value.to_double();
    EXPECT_NEAR(h, oracle::quadratic_height(a, b, c), 1e-12) << a << ' ' << b << ' ' << c;
    ++checked;
  }
}

TEST(WeilHeight, PowerRule) {
  const std::vector<std::string> polys = {"x^2 - x - 1", "x^3 - x - 1", "2*x^2 - 3*x - 4",
                                          "x^4 - x^3 - 2*x + 3", kLehmer};
  for (const std::string& text : polys) {
    const AlgebraicNumber a = AlgebraicNumber::parse(text);
    const double h = weil_height(a, 160).value.to_double();
    for (unsigned lambda : {2u, 3u, 5u}) {
      const IntPolynomial g = power_polynomial(a.polynomial(), lambda);
      EXPECT_EQ(g.degree(), a.degree());
      EXPECT_NEAR(mahler_height(g, 160).value.to_double(), lambda * h, 1e-9) << text << " ^" << lambda;
    }
  }
  EXPECT_EQ(power_polynomial(parse_polynomial("x^2 - x - 1"), 2), parse_polynomial("x^2 - 3*x + 1"));
}

TEST(WeilHeight, PowerRuleRandomRealQuadratics) {
  auto rng = oracle::rng(41);
  std::uniform_int_distribution<long> coeff(-20, 20);
  std::uniform_int_distribution<long> lead(1, 6);
  int checked = 0;
  while (checked < 60) {
    const long a = lead(rng), b = coeff(rng), c = coeff(rng);
    const long disc = b * b - 4 * a * c;
    if (b == 0 || c == 0 || disc <= 0 || is_square(disc)) continue;
    if (gcd(gcd(Integer(a), Integer(b)), Integer(c)) != 1) continue;
    const double h = oracle::quadratic_height(a, b, c);
    for (unsigned lambda : {2u, 3u, 5u}) {
      const IntPolynomial g = power_polynomial(quadratic(a, b, c), lambda);
      EXPECT_NEAR(mahler_height(g, 128).value.to_double(), lambda * h, 1e-9);
    }
    ++checked;
  }
}

TEST(WeilHeight, RootOrderDoesNotMatter) {
  const IntPolynomial f = parse_polynomial(kLehmer);
  CertifiedRoots roots = certified_roots(f, 100);
  ASSERT_EQ(roots.roots.size(), 10u);
  const HeightValue base = height_from_roots(f.leading(), roots.roots);
  auto rng = oracle::rng(42);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(roots.roots.begin(), roots.roots.end(), rng);
    const HeightValue h = height_from_roots(f.leading(), roots.roots);
    EXPECT_NEAR(h.value.to_double(), base.value.to_double(), 1e-15);
  }
}

TEST(CertifiedRoots, DisjointAndSmall) {
  const IntPolynomial f = parse_polynomial("x^5 - x - 1");
  const CertifiedRoots r = certified_roots(f, 80);
  ASSERT_EQ(r.roots.size(), 5u);
  for (const RootBall& ball : r.roots) EXPECT_LE(ball.radius.to_double(), std::ldexp(1.0, -80));
  for (std::size_t i = 0; i < r.roots.size(); ++i) {
    for (std::size_t j = i + 1; j < r.roots.size(); ++j) {
      const double dist = std::hypot(r.roots[i].re.to_double() - r.roots[j].re.to_double(),
                                     r.roots[i].im.to_double() - r.roots[j].im.to_double());
      EXPECT_GT(dist, r.roots[i].radius.to_double() + r.roots[j].radius.to_double());
    }
  }
  EXPECT_THROW(certified_roots(parse_polynomial("x^2 - 2*x + 1"), 64), std::invalid_argument);
}

TEST(MahlerHeight, RejectsRepeatedRoots) {
  EXPECT_THROW(mahler_height(parse_polynomial("x^3 - 3*x + 2"), 64), std::invalid_argument);
}

TEST(RootOfUnity, Examples) {
  EXPECT_TRUE(is_root_of_unity(AlgebraicNumber::parse("x^2 + x + 1")));
  EXPECT_FALSE(is_root_of_unity(AlgebraicNumber::parse("x^2 - x - 1")));
  EXPECT_TRUE(is_root_of_unity(AlgebraicNumber::parse("x^4 - x^2 + 1")));
  EXPECT_FALSE(is_root_of_unity(AlgebraicNumber::parse(kLehmer)));
  // |root| = 1 for both roots but not a root of unity.
  EXPECT_FALSE(is_root_of_unity(AlgebraicNumber::parse("5*x^2 - 6*x + 5")));
}

TEST(RootOfUnity, ZeroHeightIffCyclotomic) {
  for (unsigned long k = 1; k <= 40; ++k) {
    if (euler_phi(k) > 12) continue;
    const AlgebraicNumber a = AlgebraicNumber::make(cyclotomic(k));
    EXPECT_TRUE(is_root_of_unity(a)) << k;
    EXPECT_LT(std::fabs(weil_height(a, 128).value.to_double()), 1e-12) << k;
  }
  // Monic with unit constant term, not cyclotomic: height strictly positive.
  for (const char* text : {"x^2 - 3*x + 1", "x^3 - x - 1", "x^4 - x^3 - x^2 - x + 1", kLehmer}) {
    const AlgebraicNumber a = AlgebraicNumber::parse(text);
    EXPECT_FALSE(is_root_of_unity(a)) << text;
    EXPECT_GT(weil_height(a, 128).value.to_double(), 1e-3) << text;
  }
}

TEST(RootOfUnity, QuadraticIntegersHaveHeightGap) {
  // A quadratic integer is a root of unity or has height above the
  // Example 3.1 bound ln(5/4) / 1252.
  const double floor = std::log(1.25) / 1252;
  auto rng = oracle::rng(43);
  std::uniform_int_distribution<long> coeff(-30, 30);
  int checked = 0;
  while (checked < 100) {
    const long b = coeff(rng), c = coeff(rng);
    if (c == 0 || is_square(b * b - 4 * c)) continue;
    const AlgebraicNumber a = AlgebraicNumber::make(quadratic(1, b, c));
    const double h = weil_height(a, 128).value.to_double();
    if (is_root_of_unity(a)) {
      EXPECT_LT(h, 1e-12);
    } else {
      EXPECT_GE(h, floor) << b << ' ' << c;
    }
    ++checked;
  }
}

TEST(Census, LinearExamples) {
  EXPECT_EQ(census_strings(1, std::log(2.0) + 1e-9),
            (std::vector<std::string>{"x - 2", "x - 1", "x + 1", "x + 2", "2*x - 1", "2*x + 1"}));
  EXPECT_EQ(census_strings(1, 0.01), (std::vector<std::string>{"x - 1", "x + 1"}));
}

TEST(Census, QuadraticSmallCap) {
  const auto found = census_strings(2, 0.25);
  for (const char* expected : {"x^2 + 1", "x^2 + x + 1", "x^2 - x + 1", "x^2 - x - 1", "x^2 + x - 1"}) {
    EXPECT_NE(std::find(found.begin(), found.end(), expected), found.end()) << expected;
  }
  for (const AlgebraicNumber& a : northcott_census(2, 0.25)) EXPECT_LE(weil_height(a, 128).value.to_double(), 0.25);
}

TEST(Census, StableAcrossPrecision) {
  EXPECT_EQ(census_strings(2, 0.3, 48), census_strings(2, 0.3, 256));
  EXPECT_EQ(census_strings(3, 0.1, 64), census_strings(3, 0.1, 160));
}

TEST(Census, Limits) {
  EXPECT_THROW(northcott_census(5, 0.1), std::invalid_argument);
  EXPECT_THROW(northcott_census(2, 1.2), std::invalid_argument);
  EXPECT_THROW(northcott_census(2, -0.1), std::invalid_argument);
  EXPECT_THROW(northcott_census(4, 1.0, 128, 1000), std::length_error);
}
