#include "hauteur/factorization.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace hauteur {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_unsigned(std::string_view token, std::string_view whole) {
  if (token.empty() || !std::all_of(token.begin(), token.end(),
                                    [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("malformed factorization: " + std::string(whole));
  }
  return Integer(std::string(token), 10);
}

}  // namespace

Factorization Factorization::of(const Integer& n) {
  if (n < 1) throw std::invalid_argument("Factorization::of: n must be >= 1");
  Factorization out;
  for (const Integer& p : prime_factors(n)) out.factors_[p] += 1;
  return out;
}

Factorization Factorization::prime_power(const Integer& prime, const Integer& exponent) {
  if (!is_prime(prime)) throw std::invalid_argument("not a prime: " + hauteur::to_string(prime));
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  Factorization out;
  if (exponent > 0) out.factors_[prime] = exponent;
  return out;
}

Factorization Factorization::from_map(const Map& factors) {
  Factorization out;
  for (const auto& [p, e] : factors) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (e == 0) continue;
    if (!is_prime(p)) throw std::invalid_argument("not a prime: " + hauteur::to_string(p));
    out.factors_[p] = e;
  }
  return out;
}

Factorization Factorization::parse(std::string_view text) {
  std::string_view body = trim(text);
  if (body == "1") return {};
  Factorization out;
  while (true) {
    auto star = body.find('*');
    std::string_view term = trim(body.substr(0, star));
    auto caret = term.find('^');
    Integer prime = parse_unsigned(trim(term.substr(0, caret)), text);
    Integer exponent = caret == std::string_view::npos
                           ? Integer(1)
                           : parse_unsigned(trim(term.substr(caret + 1)), text);
    if (!is_prime(prime)) {
      throw std::invalid_argument("malformed factorization (composite base): " + std::string(text));
    }
    if (exponent > 0) out.factors_[prime] += exponent;
    if (star == std::string_view::npos) break;
    body = body.substr(star + 1);
  }
  return out;
}

Integer Factorization::exponent(const Integer& prime) const {
  auto it = factors_.find(prime);
  return it == factors_.end() ? Integer(0) : it->second;
}

Factorization& Factorization::operator*=(const Factorization& rhs) {
  for (const auto& [p, e] : rhs.factors_) factors_[p] += e;
  return *this;
}

Factorization Factorization::pow(const Integer& k) const {
  if (k < 0) throw std::invalid_argument("Factorization::pow: negative exponent");
  if (k == 0) return {};
  Factorization out = *this;
  for (auto& [p, e] : out.factors_) e *= k;
  return out;
}

bool Factorization::divides(const Factorization& other) const {
  return std::all_of(factors_.begin(), factors_.end(), [&](const auto& kv) {
    return kv.second <= other.exponent(kv.first);
  });
}

Factorization Factorization::exact_div(const Factorization& divisor) const {
  Factorization out = *this;
  for (const auto& [p, e] : divisor.factors_) {
    Integer remaining = out.exponent(p) - e;
    if (remaining < 0) {
      throw std::domain_error("exact_div: " + divisor.to_string() + " does not divide " +
                              to_string());
    }
    if (remaining == 0) {
      out.factors_.erase(p);
    } else {
      out.factors_[p] = remaining;
    }
  }
  return out;
}

Factorization Factorization::gcd(const Factorization& a, const Factorization& b) {
  Factorization out;
  for (const auto& [p, e] : a.factors_) {
    Integer other = b.exponent(p);
    if (other > 0) out.factors_[p] = std::min(e, other);
  }
  return out;
}

Factorization Factorization::lcm(const Factorization& a, const Factorization& b) {
  Factorization out = a;
  for (const auto& [p, e] : b.factors_) {
    Integer& slot = out.factors_[p];
    if (slot < e) slot = e;
  }
  return out;
}

Integer Factorization::expand(std::size_t max_digits) const {
  Real digits = log10(64);
  if (digits.to_double() + 1.0 > static_cast<double>(max_digits)) {
    throw std::length_error("Factorization::expand: result exceeds " +
                            std::to_string(max_digits) + " decimal digits");
  }
  Integer out = 1;
  for (const auto& [p, e] : factors_) {
    out *= hauteur::pow(p, to_u64(e));
  }
  return out;
}

Real Factorization::log10(mpfr_prec_t precision) const {
  const mpfr_prec_t work = precision + 32;
  Real sum(work);
  Real ln10(work);
  mpfr_log_ui(ln10.get(), 10, MPFR_RNDN);
  for (const auto& [p, e] : factors_) {
    Real term = log(Real(p, work)) * Real(e, work);
    sum += term;
  }
  sum /= ln10;
  mpfr_prec_round(sum.get(), precision, MPFR_RNDN);
  return sum;
}

Interval Factorization::ln_interval(mpfr_prec_t precision) const {
  Interval sum = Interval::exact(Integer(0), precision);
  for (const auto& [p, e] : factors_) {
    sum = add(sum, mul_nonneg(Interval::log_of(p, precision), Interval::exact(e, precision)));
  }
  return sum;
}

std::string Factorization::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [p, e] : factors_) {
    if (!out.empty()) out += " * ";
    out += hauteur::to_string(p);
    if (e != 1) out += "^" + hauteur::to_string(e);
  }
  return out;
}

std::strong_ordering compare(const Factorization& a, const Factorization& b) {
  Factorization common = Factorization::gcd(a, b);
  Factorization lhs = a.exact_div(common);
  Factorization rhs = b.exact_div(common);
  if (lhs == rhs) return std::strong_ordering::equal;
  if (lhs.is_one()) return std::strong_ordering::less;
  if (rhs.is_one()) return std::strong_ordering::greater;
  for (mpfr_prec_t prec = 64; prec <= 8192; prec *= 2) {
    Interval l = lhs.ln_interval(prec);
    Interval r = rhs.ln_interval(prec);
    if (l.certainly_below(r)) return std::strong_ordering::less;
    if (l.certainly_above(r)) return std::strong_ordering::greater;
  }
  Integer x = lhs.expand();
  Integer y = rhs.expand();
  return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace hauteur
