#include "hauteur/heightoracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "hauteur/errors.hpp"

namespace hauteur {
namespace {

constexpr mpfr_prec_t kMaxWorkingBits = mpfr_prec_t{1} << 16;
constexpr std::size_t kMaxScreenDivisors = 4096;

struct Complex {
  Real re;
  Real im;
};

Real at_precision(const Real& x, mpfr_prec_t prec) {
  Real out(prec);
  mpfr_set(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b) {
  Real den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
Real magnitude(const Complex& z) { return hypot(z.re, z.im); }
bool finite(const Complex& z) { return z.re.is_finite() && z.im.is_finite(); }

using RationalPoly = std::vector<mpq_class>;

void strip(RationalPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RationalPoly remainder(RationalPoly a, const RationalPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const mpq_class factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= factor * b[j];
    a.pop_back();
    strip(a);
  }
  return a;
}

bool is_squarefree(const IntPolynomial& f) {
  RationalPoly a, b;
  for (const Integer& c : f.coefficients()) a.emplace_back(c);
  for (std::size_t k = 1; k < a.size(); ++k) b.push_back(a[k] * static_cast<long>(k));
  strip(b);
  while (!b.empty()) {
    RationalPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() == 1;
}

std::vector<Integer> positive_divisors(const Integer& n) {
  std::vector<Integer> out{Integer(1)};
  const std::vector<Integer> primes = prime_factors(abs(n));
  for (std::size_t i = 0; i < primes.size();) {
    std::size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    const std::size_t existing = out.size();
    Integer power = 1;
    for (std::size_t e = i; e < j; ++e) {
      power *= primes[i];
      for (std::size_t k = 0; k < existing; ++k) out.push_back(out[k] * power);
    }
    if (out.size() > kMaxScreenDivisors) return {};
    i = j;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer nearest_integer(const Real& x) {
  Integer out;
  mpfr_get_z(out.get_mpz_t(), x.get(), MPFR_RNDN);
  return out;
}

bool close_to_integer(const Real& x, const Integer& n) {
  const mpfr_prec_t prec = x.precision();
  Real gap = abs(x - Real(n, prec));
  return gap < Real(1e-6, prec) + abs(x) * Real(1e-12, prec);
}

// Aberth-Ehrlich simultaneous iteration with Weierstrass-disk certification.
class RootSolver {
 public:
  explicit RootSolver(const IntPolynomial& f) : f_(f), d_(static_cast<std::size_t>(f.degree())) {}

  void refine(mpfr_prec_t prec) {
    std::size_t max_iterations = 100;
    if (z_.empty()) {
      prec_ = prec;
      load_coefficients();
      initialise(0.4);
      max_iterations = 500 + 100 * d_;
    } else {
      prec_ = prec;
      load_coefficients();
      for (Complex& z : z_) z = {at_precision(z.re, prec), at_precision(z.im, prec)};
    }
    int restarts = 0;
    // Convergence is cubic: once steps fall below 2^(-prec/2), one more sweep
    // reaches working precision.
    const Real tolerance = power_of_two(-static_cast<long>(prec_) / 2, prec_);
    bool finishing = false;
    for (std::size_t iteration = 0; iteration < max_iterations; ++iteration) {
      bool converged = true;
      bool broken = false;
      for (std::size_t i = 0; i < d_; ++i) {
        auto [value, derivative] = horner(z_[i]);
        if (value.re.is_zero() && value.im.is_zero()) continue;
        Complex newton = derivative.re.is_zero() && derivative.im.is_zero()
                             ? value
                             : value / derivative;
        Complex repulsion{Real(prec_), Real(prec_)};
        for (std::size_t j = 0; j < d_; ++j) {
          if (j != i) repulsion = repulsion + Complex{Real(1L, prec_), Real(prec_)} / (z_[i] - z_[j]);
        }
        Complex denominator = Complex{Real(1L, prec_), Real(prec_)} - newton * repulsion;
        Complex step = newton / denominator;
        if (!finite(step)) {
          broken = true;
          break;
        }
        z_[i] = z_[i] - step;
        if (magnitude(step) > tolerance * max(Real(1L, prec_), magnitude(z_[i]))) converged = false;
      }
      if (broken) {
        if (++restarts > 3) return;
        initialise(0.4 + 0.37 * restarts);
        continue;
      }
      if (finishing) return;
      if (converged) finishing = true;
    }
  }

  // Radii of disjoint disks each holding exactly one root, or nothing.
  std::optional<std::vector<Real>> certify() const {
    const Real u = power_of_two(-static_cast<long>(prec_), prec_);
    const Real slack = Real(static_cast<long>(16 * d_ + 32), prec_) * u;
    const Real lead = abs(a_.back());
    std::vector<Real> radii;
    for (std::size_t i = 0; i < d_; ++i) {
      auto [value, derivative] = horner(z_[i]);
      const Real modulus = magnitude(z_[i]);
      Real bound = lead;
      for (std::size_t k = d_; k-- > 0;) bound = bound * modulus + abs(a_[k]);
      const Real rounding = Real(2L, prec_) * slack * bound;
      Real denominator = lead;
      for (std::size_t j = 0; j < d_; ++j) {
        if (j != i) denominator *= magnitude(z_[i] - z_[j]);
      }
      if (denominator.is_zero() || !denominator.is_finite()) return std::nullopt;
      denominator *= Real(1L, prec_) - slack;
      Real correction = (magnitude(value) + rounding) * (Real(1L, prec_) + slack) / denominator;
      Real radius = Real(static_cast<long>(d_), prec_) * correction * (Real(1L, prec_) + slack);
      if (!radius.is_finite()) return std::nullopt;
      radii.push_back(std::move(radius));
    }
    for (std::size_t i = 0; i < d_; ++i) {
      for (std::size_t j = i + 1; j < d_; ++j) {
        Real distance = magnitude(z_[i] - z_[j]) * (Real(1L, prec_) - slack);
        if (!(distance > radii[i] + radii[j])) return std::nullopt;
      }
    }
    return radii;
  }

  std::vector<RootBall> balls(std::vector<Real> radii) const {
    std::vector<RootBall> out;
    for (std::size_t i = 0; i < d_; ++i) out.push_back({z_[i].re, z_[i].im, std::move(radii[i])});
    return out;
  }

  mpfr_prec_t precision() const { return prec_; }

 private:
  void load_coefficients() {
    a_.clear();
    for (const Integer& c : f_.coefficients()) a_.emplace_back(c, prec_);
  }

  void initialise(double offset) {
    Real radius = Real(1L, prec_);
    Real largest(prec_);
    for (std::size_t k = 0; k < d_; ++k) largest = max(largest, abs(a_[k] / a_.back()));
    radius += largest;
    const Real two_pi = Real(2L, prec_) * const_pi(prec_);
    z_.clear();
    for (std::size_t k = 0; k < d_; ++k) {
      Real angle = two_pi * Real(static_cast<long>(k), prec_) / Real(static_cast<long>(d_), prec_) +
                   Real(offset, prec_);
      z_.push_back({radius * cos(angle), radius * sin(angle)});
    }
  }

  std::pair<Complex, Complex> horner(const Complex& z) const {
    Complex value{a_.back(), Real(prec_)};
    Complex derivative{Real(prec_), Real(prec_)};
    for (std::size_t k = d_; k-- > 0;) {
      derivative = derivative * z + value;
      value = value * z + Complex{a_[k], Real(prec_)};
    }
    return {value, derivative};
  }

  IntPolynomial f_;
  std::size_t d_;
  mpfr_prec_t prec_ = 0;
  std::vector<Real> a_;
  std::vector<Complex> z_;
};

void require_nonconstant(const IntPolynomial& f, const char* where) {
  if (f.degree() < 1) throw std::invalid_argument(std::string(where) + ": degree must be >= 1");
}

// Refines at doubling precision until `good` accepts the certified balls.
template <typename Accept>
auto solve_until(const IntPolynomial& f, mpfr_prec_t start, Accept good, const char* where) {
  RootSolver solver(f);
  std::string best = "no certified roots";
  for (mpfr_prec_t prec = start; prec <= kMaxWorkingBits; prec *= 2) {
    solver.refine(prec);
    auto radii = solver.certify();
    if (!radii) continue;
    auto outcome = good(solver.balls(std::move(*radii)), prec);
    if (outcome.first) return std::move(*outcome.first);
    best = outcome.second;
  }
  throw PrecisionError(std::string(where) + ": not certified at " + std::to_string(kMaxWorkingBits) +
                       " bits; achieved " + best);
}

mpfr_prec_t start_precision(const IntPolynomial& f, unsigned bits) {
  std::size_t coefficient_bits = 0;
  for (const Integer& c : f.coefficients()) {
    coefficient_bits = std::max(coefficient_bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  }
  return static_cast<mpfr_prec_t>(bits + 32 + coefficient_bits);
}

}  // namespace

AlgebraicNumber AlgebraicNumber::make(IntPolynomial minimal_polynomial) {
  require_nonconstant(minimal_polynomial, "AlgebraicNumber");
  if (minimal_polynomial.content() != 1) {
    throw std::invalid_argument("AlgebraicNumber: polynomial is not primitive");
  }
  if (minimal_polynomial.leading() < 0) minimal_polynomial = -minimal_polynomial;
  if (!passes_irreducibility_screen(minimal_polynomial)) {
    throw std::invalid_argument("AlgebraicNumber: " + minimal_polynomial.to_string() + " is reducible");
  }
  return AlgebraicNumber(std::move(minimal_polynomial));
}

AlgebraicNumber AlgebraicNumber::parse(const std::string& text) { return make(parse_polynomial(text)); }

CertifiedRoots certified_roots(const IntPolynomial& f, unsigned radius_bits) {
  require_nonconstant(f, "certified_roots");
  if (!is_squarefree(f)) throw std::invalid_argument("certified_roots: polynomial is not squarefree");
  const long target_exponent = -static_cast<long>(radius_bits);
  auto accept = [&](std::vector<RootBall> balls, mpfr_prec_t prec) {
    const Real target = power_of_two(target_exponent, prec);
    Real widest(prec);
    for (const RootBall& b : balls) widest = max(widest, b.radius);
    std::optional<CertifiedRoots> out;
    if (widest <= target) out = CertifiedRoots{std::move(balls), prec};
    return std::pair{std::move(out), "radius " + widest.to_string(6)};
  };
  return solve_until(f, start_precision(f, radius_bits), accept, "certified_roots");
}

HeightValue height_from_roots(const Integer& lead, std::span<const RootBall> roots) {
  if (roots.empty()) throw std::invalid_argument("height_from_roots: no roots");
  if (lead == 0) throw std::invalid_argument("height_from_roots: zero leading coefficient");
  mpfr_prec_t prec = MPFR_PREC_MIN;
  for (const RootBall& b : roots) prec = std::max({prec, b.re.precision(), b.im.precision()});
  const Real u = power_of_two(-static_cast<long>(prec), prec);
  const Real one(1L, prec);
  const Real four(4L, prec);

  Real sum = log(Real(Integer(abs(lead)), prec));
  Real error = four * u * (sum + one);
  for (const RootBall& b : roots) {
    Real modulus = hypot(b.re, b.im);
    Real term = modulus > one ? log(modulus) : Real(prec);
    // max(0, ln x) is 1-Lipschitz on x >= 0.
    error += b.radius + four * u * (term + one);
    sum += term;
  }
  const Real degree(static_cast<long>(roots.size()), prec);
  error += Real(2L, prec) * (degree + Real(2L, prec)) * u * (sum + one);
  HeightValue out{sum / degree, Real(prec), prec};
  out.error_bound = Real(2L, prec) * (error / degree + four * u * out.value);
  return out;
}

HeightValue mahler_height(const IntPolynomial& f, unsigned bits) {
  require_nonconstant(f, "mahler_height");
  if (!is_squarefree(f)) throw std::invalid_argument("mahler_height: polynomial is not squarefree");
  const long target_exponent = -static_cast<long>(bits) + 8;
  auto accept = [&](std::vector<RootBall> balls, mpfr_prec_t prec) {
    HeightValue h = height_from_roots(f.leading(), balls);
    std::optional<HeightValue> out;
    std::string achieved = "error bound " + h.error_bound.to_string(6);
    if (h.error_bound <= power_of_two(target_exponent, prec)) out = std::move(h);
    return std::pair{std::move(out), achieved};
  };
  return solve_until(f, start_precision(f, bits), accept, "weil_height");
}

HeightValue weil_height(const AlgebraicNumber& a, unsigned bits) {
  return mahler_height(a.polynomial(), bits);
}

bool is_root_of_unity(const AlgebraicNumber& a) {
  const IntPolynomial& f = a.polynomial();
  if (abs(f.leading()) != 1 || abs(f[0]) != 1) return false;
  const CertifiedRoots roots = certified_roots(f, 48);
  const Real one(1L, roots.working_precision);
  const Real tolerance = power_of_two(-40, roots.working_precision);
  for (const RootBall& b : roots.roots) {
    if (abs(hypot(b.re, b.im) - one) > b.radius + tolerance) return false;
  }
  const unsigned long d = static_cast<unsigned long>(f.degree());
  // phi(k) >= sqrt(k / 2)
  for (unsigned long k = 1; k <= 2 * d * d; ++k) {
    if (euler_phi(k) != d) continue;
    const IntPolynomial phi = cyclotomic(k);
    if (f == phi || f == -phi) return true;
  }
  return false;
}

bool passes_irreducibility_screen(const IntPolynomial& f) {
  require_nonconstant(f, "passes_irreducibility_screen");
  const long d = f.degree();
  if (d == 1) return true;
  if (f[0] == 0) return false;
  if (!is_squarefree(f)) return false;

  const std::vector<Integer> leads = positive_divisors(f.leading());
  if (leads.empty()) return true;
  const CertifiedRoots certified = certified_roots(f, 64);
  const std::vector<RootBall>& roots = certified.roots;
  const mpfr_prec_t prec = certified.working_precision;
  const Real imaginary_tolerance(1e-9, prec);

  auto divides = [&](std::vector<Integer> low_to_high) {
    IntPolynomial factor(std::move(low_to_high));
    const Integer content = factor.content();
    if (content == 0) return false;
    std::vector<Integer> primitive = factor.coefficients();
    for (Integer& c : primitive) c /= content;
    return f.exact_divide(IntPolynomial(std::move(primitive))).has_value();
  };

  for (const RootBall& b : roots) {
    if (abs(b.im) > b.radius + imaginary_tolerance) continue;
    for (const Integer& c : leads) {
      Real scaled = Real(c, prec) * b.re;
      Integer n = nearest_integer(scaled);
      if (close_to_integer(scaled, n) && divides({-n, c})) return false;
    }
  }
  if (d < 4) return true;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      const Complex zi{roots[i].re, roots[i].im};
      const Complex zj{roots[j].re, roots[j].im};
      const Complex sum = zi + zj;
      const Complex product = zi * zj;
      if (abs(sum.im) > imaginary_tolerance * max(Real(1L, prec), abs(sum.re))) continue;
      if (abs(product.im) > imaginary_tolerance * max(Real(1L, prec), abs(product.re))) continue;
      for (const Integer& c : leads) {
        Real linear = Real(c, prec) * sum.re;
        Real constant = Real(c, prec) * product.re;
        Integer b = nearest_integer(linear);
        Integer a = nearest_integer(constant);
        if (close_to_integer(linear, b) && close_to_integer(constant, a) && divides({a, -b, c})) {
          return false;
        }
      }
    }
  }
  return true;
}

IntPolynomial power_polynomial(const IntPolynomial& f, unsigned lambda) {
  require_nonconstant(f, "power_polynomial");
  if (lambda == 0) throw std::invalid_argument("power_polynomial: lambda must be >= 1");
  const std::size_t d = static_cast<std::size_t>(f.degree());
  // Monic x^d + c_1 x^{d-1} + ... + c_d.
  std::vector<mpq_class> c(d + 1);
  for (std::size_t k = 1; k <= d; ++k) c[k] = mpq_class(f[d - k]) / mpq_class(f.leading());
  const std::size_t top = d * lambda;
  std::vector<mpq_class> s(top + 1);
  for (std::size_t k = 1; k <= top; ++k) {
    mpq_class value = k <= d ? mpq_class(-static_cast<long>(k)) * c[k] : mpq_class(0);
    for (std::size_t i = 1; i < k && i <= d; ++i) value -= c[i] * s[k - i];
    s[k] = value;
  }
  std::vector<mpq_class> e(d + 1);
  e[0] = 1;
  for (std::size_t j = 1; j <= d; ++j) {
    mpq_class value = 0;
    for (std::size_t i = 1; i <= j; ++i) {
      mpq_class term = e[j - i] * s[i * lambda];
      value += (i % 2 == 1) ? term : mpq_class(-term);
    }
    e[j] = value / static_cast<long>(j);
  }
  Integer denominator = 1;
  for (const mpq_class& v : e) denominator = lcm(denominator, Integer(v.get_den()));
  std::vector<Integer> coefficients(d + 1);
  for (std::size_t j = 0; j <= d; ++j) {
    mpq_class scaled = e[j] * mpq_class(denominator);
    Integer value = scaled.get_num();
    coefficients[d - j] = (j % 2 == 1) ? Integer(-value) : value;
  }
  IntPolynomial out(std::move(coefficients));
  const Integer content = out.content();
  std::vector<Integer> primitive = out.coefficients();
  for (Integer& v : primitive) v /= content;
  return IntPolynomial(std::move(primitive));
}

std::vector<AlgebraicNumber> northcott_census(unsigned max_degree, double height_cap, unsigned bits,
                                              std::uint64_t candidate_limit) {
  if (max_degree < 1 || max_degree > 4) {
    throw std::invalid_argument("northcott_census: max_degree must be in 1..4");
  }
  if (!(height_cap >= 0.0) || height_cap > std::log(3.0) + 1e-9) {
    throw std::invalid_argument("northcott_census: height cap must be in [0, ln 3]");
  }
  if (bits < 16) throw std::invalid_argument("northcott_census: bits must be >= 16");

  // Mahler: |a_i| <= binom(d, i) M(f) and M(f) = exp(d h).
  std::vector<std::vector<std::int64_t>> boxes;
  double candidates = 0;
  for (unsigned d = 1; d <= max_degree; ++d) {
    const double mahler = std::exp(d * height_cap) * (1 + 1e-12);
    std::vector<std::int64_t> box(d + 1);
    double binomial = 1;
    double count = 1;
    for (unsigned i = 0; i <= d; ++i) {
      box[i] = static_cast<std::int64_t>(std::floor(binomial * mahler));
      binomial = binomial * (d - i) / (i + 1);
      if (i == 0 || i == d) {
        count *= (i == 0 ? 2.0 : 1.0) * static_cast<double>(box[i]);
      } else {
        count *= 2.0 * static_cast<double>(box[i]) + 1.0;
      }
    }
    candidates += count;
    boxes.push_back(std::move(box));
  }
  if (candidates > static_cast<double>(candidate_limit)) {
    throw std::length_error("northcott_census: " + std::to_string(static_cast<std::uint64_t>(candidates)) +
                            " candidate polynomials exceed the limit of " +
                            std::to_string(candidate_limit));
  }

  const mpfr_prec_t cap_prec = 128;
  std::vector<AlgebraicNumber> out;
  auto within_cap = [&](const IntPolynomial& f) {
    // Most candidates sit far from the cap; start coarse.
    for (unsigned b = 24; b <= 16 * bits; b *= 2) {
      HeightValue h = mahler_height(f, b);
      const Real cap(height_cap, std::max<mpfr_prec_t>(cap_prec, h.working_precision));
      if (h.value + h.error_bound <= cap) return true;
      if (h.value - h.error_bound > cap) return false;
    }
    throw PrecisionError("northcott_census: cannot decide height of " + f.to_string() +
                         " against the cap");
  };
  auto consider = [&](const std::vector<Integer>& low_to_high) {
    IntPolynomial f(low_to_high);
    if (f.content() != 1) return;
    if (!is_squarefree(f)) return;
    const HeightValue coarse = mahler_height(f, 24);
    if (coarse.value - coarse.error_bound > Real(height_cap, coarse.working_precision)) return;
    if (abs(f.leading()) == 1 && abs(f[0]) == 1) {
      AlgebraicNumber candidate(f);
      if (passes_irreducibility_screen(f) && is_root_of_unity(candidate)) {
        out.push_back(std::move(candidate));
        return;
      }
    }
    if (!within_cap(f)) return;
    if (!passes_irreducibility_screen(f)) return;
    out.push_back(AlgebraicNumber(std::move(f)));
  };

  for (unsigned d = 1; d <= max_degree; ++d) {
    const std::vector<std::int64_t>& box = boxes[d - 1];
    std::vector<Integer> coefficients(d + 1);
    std::function<void(unsigned)> walk = [&](unsigned index) {
      const std::int64_t low = index == d ? 1 : -box[index];
      for (std::int64_t value = low; value <= box[index]; ++value) {
        if (index == 0 && value == 0) continue;
        coefficients[index] = value;
        if (index == 0) {
          consider(coefficients);
        } else {
          walk(index - 1);
        }
      }
    };
    walk(d);
  }
  return out;
}

}  // namespace hauteur
