#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hauteur/errors.hpp"
#include "hauteur/factorization.hpp"
#include "hauteur/rational.hpp"
#include "hauteur/real.hpp"

namespace hauteur {

/// Data of the base number field K at the chosen prime p above p.
struct BaseFieldData {
  std::uint64_t deg_K = 1;        // [K : Q]
  std::uint64_t local_deg = 1;    // [K_p : Q_p]
  std::uint64_t e_p = 1;          // e_p(K | Q)
  std::uint64_t f_p = 1;          // f_p(K | Q)
  std::uint64_t class_order = 1;  // order of p in Cl(K)

  static BaseFieldData rationals() { return {}; }
  /// Throws std::invalid_argument when e_p * f_p != local_deg or
  /// local_deg > deg_K or a field is zero.
  void validate() const;
};

/// One family of extensions K_n / K with [K_n : K] = d and ramification e at
/// the unique prime above p. `count` is the number (or an upper bound for
/// the number) of distinct completions with this profile; empty means
/// "derive from Krasner's formulas".
struct Tower {
  std::uint64_t d = 1;
  std::uint64_t e = 1;
  std::optional<Integer> count;
};

/// g_m and eps_m in {1, 2} for one modulus m.
struct ModulusData {
  Integer g = 1;
  unsigned eps = 1;
};

struct TowerScenario {
  Integer p = 2;
  BaseFieldData base;
  std::vector<Tower> towers;
  Integer modulus_bound = 1;  // M
  /// Empty: K = Q, where g and eps are computed from M. Otherwise one entry
  /// per modulus.
  std::optional<std::vector<ModulusData>> moduli;

  void validate() const;
};

struct BoundReport {
  Factorization e_bound;
  Factorization f_bound;
  std::uint64_t k = 0;
  std::uint64_t lambda = 0;
  ExactRational beta;
  Real ln_bound;
  bool positive = false;
};

/// The unique k >= 0 with p^{k-1}(p-1) <= e < p^k (p-1).
std::uint64_t find_k(const Integer& e, const Integer& p);

/// p^{min(lambda, k)} / e + max(0, lambda - k).
ExactRational beta_at(std::uint64_t lambda, const Integer& e, const Integer& p);

/// Decides beta [K_p : Q_p] log p > [K : Q] log 2 exactly: by rational
/// comparison when p = 2, by interval arithmetic at doubling precision
/// otherwise. Throws PrecisionError only if the precision ceiling is hit.
bool exceeds_threshold(const ExactRational& beta, const Integer& p, const BaseFieldData& base);

struct LambdaBeta {
  std::uint64_t lambda = 0;
  ExactRational beta;
};

/// Smallest lambda >= 0 whose beta_lambda passes exceeds_threshold.
LambdaBeta lambda_beta(const Integer& e, const Integer& p, const BaseFieldData& base);

/// Natural log of
///   (beta [K_p:Q_p] / [K:Q] log p - log 2) / (p^{f+lambda} + p^lambda).
/// Throws NonPositiveBound when the numerator is not positive.
Real height_bound(const Integer& f, std::uint64_t lambda, const ExactRational& beta,
                  const Integer& p, const BaseFieldData& base);
Real height_bound(const Factorization& f, std::uint64_t lambda, const ExactRational& beta,
                  const Integer& p, const BaseFieldData& base);

/// lcm of every j <= M prime to p (1 when M = 1).
Integer modulus_N(const Integer& modulus_bound, const Integer& p);

/// Multiplicative order of p modulo modulus_N(M, p); 1 when that is 1.
Integer rational_base_g(const Integer& modulus_bound, const Integer& p);

/// 2 * class_order * e_n * g.
Integer h_n(const BaseFieldData& base, const Integer& e_n, const Integer& g);

/// Full pipeline: e and f bounds at p, lambda and beta, then the height
/// bound. Throws std::invalid_argument on malformed scenarios and
/// NonPositiveBound when the bound degenerates.
BoundReport evaluate_scenario(const TowerScenario& scenario);

}  // namespace hauteur
