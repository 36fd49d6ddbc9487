#include "hauteur/integer.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace hauteur {
namespace {

// Bases proven sufficient for every n < 2^64 (Sinclair, 2011).
constexpr std::array<unsigned long, 7> kSmallWitnesses = {
    2, 325, 9375, 28178, 450775, 9780504, 1795265022};

constexpr std::array<unsigned long, 24> kLargeWitnesses = {
    2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
    41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};

constexpr unsigned long kTrialLimit = 10007;

bool strong_probable_prime(const Integer& n, const Integer& d, unsigned long s,
                           const Integer& witness) {
  Integer a = witness % n;
  if (a == 0) return true;
  Integer x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Integer n_minus_1 = n - 1;
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

Integer pollard_brent(const Integer& n, unsigned long seed) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  Integer y = seed % n;
  Integer c = (seed * 7 + 3) % n;
  if (c == 0) c = 1;
  const unsigned long m = 128;
  Integer g = 1, r = 1, q = 1, x, ys;
  auto step = [&](const Integer& v) -> Integer { return (v * v + c) % n; };
  while (g == 1) {
    x = y;
    for (Integer i = 0; i < r; ++i) y = step(y);
    Integer k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (unsigned long i = 0; i < m && k + i < r; ++i) {
        y = step(y);
        Integer diff = x - y;
        q = (q * abs(diff)) % n;
      }
      g = gcd(q, n);
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = step(ys);
      g = gcd(abs(Integer(x - ys)), n);
    } while (g == 1);
  }
  return g;
}

void factor_into(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  for (unsigned long seed = 2;; ++seed) {
    Integer d = pollard_brent(n, seed);
    if (d != n && d != 1) {
      factor_into(d, out);
      factor_into(n / d, out);
      return;
    }
  }
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul,
                          29ul, 31ul, 37ul}) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  Integer d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  const bool below_2_64 = mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
  if (below_2_64) {
    for (unsigned long w : kSmallWitnesses) {
      if (!strong_probable_prime(n, d, s, Integer(w))) return false;
    }
    return true;
  }
  for (unsigned long w : kLargeWitnesses) {
    if (!strong_probable_prime(n, d, s, Integer(w))) return false;
  }
  return true;
}

std::vector<Integer> prime_factors(const Integer& n) {
  if (n < 1) throw std::invalid_argument("prime_factors: n must be >= 1");
  std::vector<Integer> out;
  Integer rest = n;
  for (unsigned long p = 2; p < kTrialLimit && rest > 1; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      out.emplace_back(p);
      rest /= p;
    }
    if (Integer(p) * p > rest) break;
  }
  if (rest > 1) factor_into(rest, out);
  std::sort(out.begin(), out.end());
  return out;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

std::size_t decimal_digits(const Integer& n) {
  if (n == 0) return 1;
  // mpz_sizeinbase may overshoot by one for base 10.
  std::size_t guess = mpz_sizeinbase(n.get_mpz_t(), 10);
  Integer bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), 10, guess - 1);
  return abs(n) < bound ? guess - 1 : guess;
}

std::string to_string(const Integer& n) { return n.get_str(10); }

Integer parse_integer(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("malformed integer: " + text);
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("malformed integer: " + text);
    }
  }
  Integer out;
  out.set_str(text[0] == '+' ? text.substr(1) : text, 10);
  return out;
}

std::uint64_t to_u64(const Integer& n) {
  if (n < 0 || mpz_sizeinbase(n.get_mpz_t(), 2) > 64) {
    throw std::overflow_error("integer does not fit in 64 bits: " + to_string(n));
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof out, 0, 0, n.get_mpz_t());
  return out;
}

}  // namespace hauteur
