#include "hauteur/heightbound.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "hauteur/compositum.hpp"
#include "hauteur/krasner.hpp"

namespace hauteur {
namespace {

constexpr mpfr_prec_t kThresholdStartBits = 64;
constexpr mpfr_prec_t kThresholdMaxBits = mpfr_prec_t{1} << 20;
constexpr std::uint64_t kMaxModulusBound = 10'000'000;

Integer carmichael_lambda(const Factorization& n) {
  Integer out = 1;
  for (const auto& [q, a] : n.factors()) {
    const unsigned long exponent = to_u64(a);
    Integer part;
    if (q == 2) {
      part = exponent <= 2 ? Integer(exponent) : pow(Integer(2), exponent - 2);
    } else {
      part = pow(q, exponent - 1) * (q - 1);
    }
    out = lcm(out, part);
  }
  return out;
}

std::map<Integer, Integer> index_counts_for(const TowerScenario& sc, const LocalField& local) {
  std::uint64_t max_degree = 0;
  for (const Tower& t : sc.towers) max_degree = std::max(max_degree, t.d);

  std::map<std::uint64_t, std::vector<const Tower*>> by_index;
  for (const Tower& t : sc.towers) by_index[t.e].push_back(&t);

  std::map<Integer, Integer> out;
  for (const auto& [e, towers] : by_index) {
    const bool explicit_counts = std::all_of(towers.begin(), towers.end(),
                                             [](const Tower* t) { return t->count.has_value(); });
    if (explicit_counts) {
      Integer sum = 0;
      for (const Tower* t : towers) sum += *t->count;
      out[Integer(e)] = sum;
      continue;
    }
    std::set<std::uint64_t> inertia_degrees;
    for (std::uint64_t f = 1; e * f <= max_degree; ++f) inertia_degrees.insert(f);
    out[Integer(e)] = bound_extensions_with_index(local, e, inertia_degrees);
  }
  return out;
}

}  // namespace

void BaseFieldData::validate() const {
  if (deg_K == 0 || local_deg == 0 || e_p == 0 || f_p == 0 || class_order == 0) {
    throw std::invalid_argument("base field data must be positive integers");
  }
  if (e_p * f_p != local_deg) {
    throw std::invalid_argument("base field data: e_p * f_p must equal local_deg");
  }
  if (local_deg > deg_K) {
    throw std::invalid_argument("base field data: local_deg exceeds deg_K");
  }
}

void TowerScenario::validate() const {
  if (!is_prime(p)) throw std::invalid_argument("scenario: p must be prime");
  base.validate();
  if (towers.empty()) throw std::invalid_argument("scenario: no towers");
  for (const Tower& t : towers) {
    if (t.d == 0 || t.e == 0) throw std::invalid_argument("scenario: tower d and e must be >= 1");
    if (t.d % t.e != 0) {
      throw std::invalid_argument("scenario: tower e=" + std::to_string(t.e) +
                                  " does not divide d=" + std::to_string(t.d));
    }
    if (t.count && *t.count < 1) throw std::invalid_argument("scenario: tower count must be >= 1");
  }
  if (modulus_bound < 1) throw std::invalid_argument("scenario: M must be >= 1");
  if (moduli) {
    if (moduli->empty()) throw std::invalid_argument("scenario: empty moduli list");
    for (const ModulusData& m : *moduli) {
      if (m.g < 1) throw std::invalid_argument("scenario: modulus g must be >= 1");
      if (m.eps != 1 && m.eps != 2) throw std::invalid_argument("scenario: modulus eps must be 1 or 2");
    }
  } else if (base.deg_K != 1) {
    throw std::invalid_argument("scenario: moduli must be given explicitly when K != Q");
  }
}

std::uint64_t find_k(const Integer& e, const Integer& p) {
  if (e < 1) throw std::invalid_argument("find_k: e must be >= 1");
  std::uint64_t k = 0;
  for (Integer threshold = p - 1; e >= threshold; threshold *= p) ++k;
  return k;
}

ExactRational beta_at(std::uint64_t lambda, const Integer& e, const Integer& p) {
  const std::uint64_t k = find_k(e, p);
  ExactRational out(pow(p, std::min(lambda, k)), e);
  if (lambda > k) out += ExactRational(Integer(lambda - k));
  return out;
}

bool exceeds_threshold(const ExactRational& beta, const Integer& p, const BaseFieldData& base) {
  if (beta.sign() <= 0) return false;
  const ExactRational scaled = beta * ExactRational(Integer(base.local_deg));
  if (p == 2) return scaled > ExactRational(Integer(base.deg_K));
  // Equality would make log 2 / log p rational, so refinement terminates.
  for (mpfr_prec_t prec = kThresholdStartBits; prec <= kThresholdMaxBits; prec *= 2) {
    Interval lhs = mul_nonneg(Interval::exact(scaled, prec), Interval::log_of(p, prec));
    Interval rhs = mul_nonneg(Interval::exact(Integer(base.deg_K), prec), Interval::log_of(2, prec));
    if (lhs.certainly_above(rhs)) return true;
    if (lhs.certainly_below(rhs)) return false;
  }
  throw PrecisionError("exceeds_threshold: undecided at " + std::to_string(kThresholdMaxBits) +
                       " bits");
}

LambdaBeta lambda_beta(const Integer& e, const Integer& p, const BaseFieldData& base) {
  if (e < 1) throw std::invalid_argument("lambda_beta: e must be >= 1");
  if (!is_prime(p)) throw std::invalid_argument("lambda_beta: p must be prime");
  for (std::uint64_t lambda = 0;; ++lambda) {
    ExactRational beta = beta_at(lambda, e, p);
    if (exceeds_threshold(beta, p, base)) return {lambda, beta};
  }
}

Real height_bound(const Integer& f, std::uint64_t lambda, const ExactRational& beta,
                  const Integer& p, const BaseFieldData& base) {
  if (f < 1) throw std::invalid_argument("height_bound: f must be >= 1");
  if (!exceeds_threshold(beta, p, base)) {
    throw NonPositiveBound("height bound is not positive: beta=" + beta.to_string() +
                           " fails beta*[K_p:Q_p]*log p > [K:Q]*log 2");
  }
  const Integer exponent = f + lambda;
  const mpfr_prec_t prec = 192 + static_cast<mpfr_prec_t>(mpz_sizeinbase(exponent.get_mpz_t(), 2));

  const Real ln_p = log(Real(p, prec));
  const ExactRational scale = beta * ExactRational(Integer(base.local_deg), Integer(base.deg_K));
  Real numerator = Real(scale, prec) * ln_p - const_log2(prec);

  Real out = log(numerator) - Real(exponent, prec) * ln_p;
  // log(1 + p^{-f}); negligible once p^{-f} drops below the working precision.
  const double tail_bits = mpz_get_d(f.get_mpz_t()) * std::log2(mpz_get_d(p.get_mpz_t()));
  if (tail_bits < static_cast<double>(prec) + 64.0) {
    out -= log1p(exp(-(Real(f, prec) * ln_p)));
  }
  return out;
}

Real height_bound(const Factorization& f, std::uint64_t lambda, const ExactRational& beta,
                  const Integer& p, const BaseFieldData& base) {
  return height_bound(f.expand(), lambda, beta, p, base);
}

Integer modulus_N(const Integer& modulus_bound, const Integer& p) {
  if (modulus_bound < 1) throw std::invalid_argument("modulus_N: M must be >= 1");
  if (modulus_bound > kMaxModulusBound) throw std::length_error("modulus_N: M too large");
  const std::uint64_t bound = to_u64(modulus_bound);
  std::vector<bool> composite(bound + 1, false);
  Integer out = 1;
  for (std::uint64_t q = 2; q <= bound; ++q) {
    if (composite[q]) continue;
    for (std::uint64_t multiple = q * q; multiple <= bound; multiple += q) composite[multiple] = true;
    if (p == q) continue;
    std::uint64_t power = q;
    while (power <= bound / q) power *= q;
    out *= power;
  }
  return out;
}

Integer rational_base_g(const Integer& modulus_bound, const Integer& p) {
  const Integer modulus = modulus_N(modulus_bound, p);
  if (modulus == 1) return 1;
  Integer order = carmichael_lambda(Factorization::of(modulus));
  const Factorization order_factors = Factorization::of(order);
  for (const auto& [r, _] : order_factors.factors()) {
    while (mpz_divisible_p(order.get_mpz_t(), r.get_mpz_t())) {
      Integer candidate = order / r;
      Integer residue;
      mpz_powm(residue.get_mpz_t(), p.get_mpz_t(), candidate.get_mpz_t(), modulus.get_mpz_t());
      if (residue != 1) break;
      order = candidate;
    }
  }
  return order;
}

Integer h_n(const BaseFieldData& base, const Integer& e_n, const Integer& g) {
  return 2 * Integer(base.class_order) * e_n * g;
}

BoundReport evaluate_scenario(const TowerScenario& scenario) {
  scenario.validate();
  const Integer& p = scenario.p;
  const LocalField local = LocalField::make(p, scenario.base.local_deg);

  std::vector<MultisetEntry> entries;
  for (auto& [e, count] : index_counts_for(scenario, local)) {
    entries.push_back({ExtensionProfile{to_u64(e), 1}, count});
  }
  const ExtensionMultiset family(p, std::move(entries));

  BoundReport report;
  report.e_bound = Factorization::of(Integer(scenario.base.e_p)) * ramification_bound(family);

  Integer degree_lcm = 1;
  if (scenario.moduli) {
    for (const Tower& t : scenario.towers) {
      for (const ModulusData& m : *scenario.moduli) {
        degree_lcm = lcm(degree_lcm, Integer(m.eps) * m.g * t.d);
      }
    }
  } else {
    const Integer g = rational_base_g(scenario.modulus_bound, p);
    for (const Tower& t : scenario.towers) degree_lcm = lcm(degree_lcm, g * t.d);
  }
  report.f_bound = Factorization::of(Integer(scenario.base.f_p)) *
                   Factorization::of(Integer(scenario.base.class_order)) *
                   Factorization::of(degree_lcm) * inertia_factor(family);

  const Integer e_value = report.e_bound.expand();
  report.k = find_k(e_value, p);
  const LambdaBeta lb = lambda_beta(e_value, p, scenario.base);
  report.lambda = lb.lambda;
  report.beta = lb.beta;
  report.ln_bound = height_bound(report.f_bound, lb.lambda, lb.beta, p, scenario.base);
  report.positive = exceeds_threshold(lb.beta, p, scenario.base);
  return report;
}

}  // namespace hauteur
