#include "hauteur/polynomial.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

namespace hauteur {
namespace {

void strip(std::vector<Integer>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

class PolynomialParser {
 public:
  explicit PolynomialParser(const std::string& text) : text_(text) {}

  IntPolynomial parse() {
    std::map<unsigned long, Integer> terms;
    skip_spaces();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_spaces();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [power, coefficient] = term();
      terms[power] += sign * coefficient;
      first = false;
      skip_spaces();
    }
    unsigned long top = terms.rbegin()->first;
    std::vector<Integer> c(top + 1, Integer(0));
    for (auto& [power, coefficient] : terms) c[power] = coefficient;
    return IntPolynomial(std::move(c));
  }

 private:
  std::pair<unsigned long, Integer> term() {
    Integer coefficient = 1;
    bool have_number = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = number();
      have_number = true;
      skip_spaces();
      if (peek() == '*') {
        ++pos_;
        skip_spaces();
        if (peek() != 'x') fail("expected 'x' after '*'");
      }
    }
    if (peek() != 'x') {
      if (!have_number) fail("expected a coefficient or 'x'");
      return {0, coefficient};
    }
    ++pos_;
    skip_spaces();
    unsigned long power = 1;
    if (peek() == '^') {
      ++pos_;
      skip_spaces();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      power = to_u64(number());
    }
    return {power, coefficient};
  }

  Integer number() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(text_.substr(start, pos_ - start), 10);
  }

  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool at_end() const { return pos_ >= text_.size(); }
  void skip_spaces() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("malformed polynomial '" + text_ + "': " + why + " at column " +
                                std::to_string(pos_ + 1));
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Integer> low_to_high) : coeffs_(std::move(low_to_high)) {
  strip(coeffs_);
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const Integer& c : coeffs_) g = gcd(g, c);
  return g;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  std::vector<Integer> out(coeffs_.size() + rhs.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Integer> out = coeffs_;
  for (Integer& c : out) c = -c;
  return IntPolynomial(std::move(out));
}

std::optional<IntPolynomial> IntPolynomial::exact_divide(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("exact_divide: zero divisor");
  if (is_zero()) return IntPolynomial{};
  if (degree() < divisor.degree()) return std::nullopt;
  std::vector<Integer> rest = coeffs_;
  const std::size_t shift_max = static_cast<std::size_t>(degree() - divisor.degree());
  std::vector<Integer> quotient(shift_max + 1, Integer(0));
  for (std::size_t k = shift_max + 1; k-- > 0;) {
    const Integer& top = rest[k + static_cast<std::size_t>(divisor.degree())];
    if (!mpz_divisible_p(top.get_mpz_t(), divisor.leading().get_mpz_t())) return std::nullopt;
    Integer q = top / divisor.leading();
    quotient[k] = q;
    for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j) rest[k + j] -= q * divisor.coeffs_[j];
  }
  strip(rest);
  if (!rest.empty()) return std::nullopt;
  return IntPolynomial(std::move(quotient));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer magnitude = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (magnitude != 1 || i == 0) {
      out += hauteur::to_string(magnitude);
      if (i > 0) out += "*";
    }
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    while (n % q == 0) n /= q;
    result -= result / q;
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPolynomial cyclotomic(unsigned long n) {
  if (n == 0) throw std::invalid_argument("cyclotomic: n must be >= 1");
  // Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}
  auto mobius = [](unsigned long m) {
    int sign = 1;
    for (unsigned long q = 2; q * q <= m; ++q) {
      if (m % q != 0) continue;
      m /= q;
      if (m % q == 0) return 0;
      sign = -sign;
    }
    return m > 1 ? -sign : sign;
  };
  auto binomial_minus_one = [](unsigned long d) {
    std::vector<Integer> c(d + 1, Integer(0));
    c[0] = -1;
    c[d] = 1;
    return IntPolynomial(std::move(c));
  };
  IntPolynomial numerator({Integer(1)});
  std::vector<unsigned long> denominators;
  for (unsigned long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = mobius(n / d);
    if (mu == 1) numerator = numerator * binomial_minus_one(d);
    if (mu == -1) denominators.push_back(d);
  }
  for (unsigned long d : denominators) numerator = *numerator.exact_divide(binomial_minus_one(d));
  return numerator;
}

IntPolynomial parse_polynomial(const std::string& text) { return PolynomialParser(text).parse(); }

}  // namespace hauteur
