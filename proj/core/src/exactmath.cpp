#include "hauteur/exactmath.hpp"

#include <algorithm>
#include <stdexcept>

namespace hauteur {

Integer valuation(const Integer& n, const Integer& q) {
  if (n < 1) throw std::invalid_argument("valuation: n must be >= 1");
  if (!is_prime(q)) throw std::invalid_argument("valuation: q must be prime");
  Integer rest;
  return Integer(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t()));
}

Integer lcm_list(std::span<const Integer> values) {
  if (values.empty()) throw std::invalid_argument("lcm_list: empty list");
  Integer out = 1;
  for (const Integer& v : values) {
    if (v < 1) throw std::invalid_argument("lcm_list: values must be >= 1");
    out = lcm(out, v);
  }
  return out;
}

Integer excess_valuation(const std::set<Integer>& indices, const Integer& q) {
  if (indices.empty()) throw std::invalid_argument("excess_valuation: empty set");
  Integer sum = 0, top = 0;
  for (const Integer& e : indices) {
    Integer v = valuation(e, q);
    sum += v;
    top = std::max(top, v);
  }
  return sum - top;
}

Factorization excess_factor(const std::set<Integer>& indices) {
  if (indices.empty()) throw std::invalid_argument("excess_factor: empty set");
  std::set<Integer> primes;
  for (const Integer& e : indices) {
    const Factorization factored = Factorization::of(e);
    for (const auto& [p, _] : factored.factors()) primes.insert(p);
  }
  Factorization::Map out;
  for (const Integer& q : primes) out[q] = excess_valuation(indices, q);
  return Factorization::from_map(out);
}

Integer gcd_of_products(std::span<const Integer> values) {
  if (values.size() < 2) throw std::invalid_argument("gcd_of_products: need at least two values");
  Factorization::Map sum, top;
  for (const Integer& a : values) {
    if (a < 1) throw std::invalid_argument("gcd_of_products: values must be >= 1");
    const Factorization factored = Factorization::of(a);
    for (const auto& [p, e] : factored.factors()) {
      sum[p] += e;
      top[p] = std::max(top[p], e);
    }
  }
  Integer out = 1;
  for (const auto& [p, s] : sum) out *= pow(p, to_u64(s - top[p]));
  return out;
}

Integer gcd_lcm_chain(std::span<const Integer> values) {
  if (values.size() < 2) throw std::invalid_argument("gcd_lcm_chain: need at least two values");
  Integer running_lcm = values[0];
  Integer out = 1;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < 1 || running_lcm < 1) {
      throw std::invalid_argument("gcd_lcm_chain: values must be >= 1");
    }
    out *= gcd(running_lcm, values[i]);
    running_lcm = lcm(running_lcm, values[i]);
  }
  return out;
}

}  // namespace hauteur
