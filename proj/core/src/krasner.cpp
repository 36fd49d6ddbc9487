#include "hauteur/krasner.hpp"

#include <algorithm>
#include <stdexcept>

namespace hauteur {
namespace {

struct DegreeSplit {
  std::uint64_t coprime_part;  // h with gcd(h, p) = 1
  unsigned p_exponent;         // m with d = h p^m
};

DegreeSplit split_degree(std::uint64_t d, const Integer& p) {
  if (d == 0) throw std::invalid_argument("degree must be >= 1");
  const std::uint64_t pp = to_u64(p);
  DegreeSplit out{d, 0};
  while (out.coprime_part % pp == 0) {
    out.coprime_part /= pp;
    ++out.p_exponent;
  }
  return out;
}

Integer divisor_sum(std::uint64_t n) {
  Integer out = 0;
  for (std::uint64_t l = 1; l * l <= n; ++l) {
    if (n % l != 0) continue;
    out += l;
    if (l != n / l) out += n / l;
  }
  return out;
}

// p^{eps(s) D} - p^{eps(s-1) D}, with the s = 0 convention p^{eps(-1) D} = 0.
Integer layer(const Integer& p, std::uint64_t big_d, unsigned s) {
  Integer upper = pow(p, krasner_exponent(p, big_d, s));
  if (s == 0) return upper;
  return upper - pow(p, krasner_exponent(p, big_d, s - 1));
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) throw std::overflow_error("degree product overflows");
  return a * b;
}

}  // namespace

LocalField LocalField::make(const Integer& p, std::uint64_t abs_degree) {
  if (!is_prime(p)) throw std::invalid_argument("LocalField: p must be prime");
  if (abs_degree == 0) throw std::invalid_argument("LocalField: abs_degree must be >= 1");
  return LocalField{p, abs_degree};
}

LocalField LocalField::unramified_shift(std::uint64_t f) const {
  if (f == 0) throw std::invalid_argument("unramified_shift: f must be >= 1");
  return LocalField{p, checked_mul(abs_degree, f)};
}

std::uint64_t krasner_exponent(const Integer& p, std::uint64_t big_d, unsigned s) {
  const std::uint64_t pp = to_u64(p);
  std::uint64_t sum = 0;
  std::uint64_t power = 1;
  for (unsigned i = 1; i <= s; ++i) {
    power = checked_mul(power, pp);
    if (big_d % power != 0) {
      throw std::domain_error("krasner_exponent: p^s does not divide D");
    }
    sum += big_d / power;
  }
  return sum;
}

Integer count_extensions(const LocalField& field, std::uint64_t d) {
  const auto [h, m] = split_degree(d, field.p);
  const std::uint64_t big_d = checked_mul(d, field.abs_degree);
  const Integer& p = field.p;
  Integer sum = 0;
  for (unsigned s = 0; s <= m; ++s) {
    Integer weight = pow(p, m + s + 1) - pow(p, 2 * s);
    Integer quotient;
    mpz_divexact(quotient.get_mpz_t(), weight.get_mpz_t(), Integer(p - 1).get_mpz_t());
    sum += quotient * layer(p, big_d, s);
  }
  return divisor_sum(h) * sum;
}

Integer count_totally_ramified(const LocalField& field, std::uint64_t d) {
  const auto [h, m] = split_degree(d, field.p);
  const std::uint64_t big_d = checked_mul(d, field.abs_degree);
  Integer sum = 0;
  for (unsigned s = 0; s <= m; ++s) {
    sum += pow(field.p, s) * layer(field.p, big_d, s);
  }
  return Integer(d) * sum;
}

Integer count_with_profile(const LocalField& field, std::uint64_t e, std::uint64_t f) {
  if (e == 0 || f == 0) throw std::invalid_argument("count_with_profile: e and f must be >= 1");
  return count_totally_ramified(field.unramified_shift(f), e);
}

Integer bound_extensions_with_index(const LocalField& field, std::uint64_t e,
                                    const std::set<std::uint64_t>& inertia_degrees) {
  if (inertia_degrees.empty()) {
    throw std::invalid_argument("bound_extensions_with_index: empty set of inertia degrees");
  }
  Integer out = 0;
  for (std::uint64_t f : inertia_degrees) out += count_with_profile(field, e, f);
  return out;
}

std::vector<ProfileCount> enumerate_profiles(const LocalField& field, std::uint64_t max_degree,
                                             std::uint64_t cap) {
  if (max_degree == 0) throw std::invalid_argument("enumerate_profiles: max_degree must be >= 1");
  if (max_degree > cap) {
    throw std::length_error("enumerate_profiles: max_degree " + std::to_string(max_degree) +
                            " exceeds cap " + std::to_string(cap));
  }
  std::vector<ProfileCount> out;
  for (std::uint64_t d = 1; d <= max_degree; ++d) {
    for (std::uint64_t e = 1; e <= d; ++e) {
      if (d % e != 0) continue;
      out.push_back({ExtensionProfile{e, d / e}, count_with_profile(field, e, d / e)});
    }
  }
  return out;
}

}  // namespace hauteur
