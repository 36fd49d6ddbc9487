#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "hauteur/integer.hpp"

namespace hauteur {

/// A finite extension F of Q_p, described only by p and [F : Q_p].
struct LocalField {
  Integer p;
  std::uint64_t abs_degree = 1;

  /// Throws std::invalid_argument unless p is prime and abs_degree >= 1.
  static LocalField make(const Integer& p, std::uint64_t abs_degree = 1);

  /// The unramified extension of degree f over this field.
  LocalField unramified_shift(std::uint64_t f) const;

  friend bool operator==(const LocalField&, const LocalField&) = default;
};

/// Ramification index e and inertia degree f of a local extension.
struct ExtensionProfile {
  std::uint64_t e = 1;
  std::uint64_t f = 1;

  std::uint64_t degree() const { return e * f; }
  bool is_wild(const Integer& p) const { return mpz_divisible_p(Integer(e).get_mpz_t(), p.get_mpz_t()) != 0; }

  friend auto operator<=>(const ExtensionProfile&, const ExtensionProfile&) = default;
};

struct ProfileCount {
  ExtensionProfile profile;
  Integer count;
};

/// Exponent eps(s) * D = sum_{i=1}^{s} D / p^i of the Krasner formulas.
/// Throws std::domain_error when p^s does not divide D.
std::uint64_t krasner_exponent(const Integer& p, std::uint64_t big_d, unsigned s);

/// Number of extensions of F of degree d inside a fixed algebraic closure.
Integer count_extensions(const LocalField& field, std::uint64_t d);

/// Number of totally ramified extensions of F of degree d.
Integer count_totally_ramified(const LocalField& field, std::uint64_t d);

/// Extensions of F with ramification index exactly e and inertia degree
/// exactly f: the totally ramified degree-e extensions of F{f}.
Integer count_with_profile(const LocalField& field, std::uint64_t e, std::uint64_t f);

/// Upper bound for the number of distinct extensions of ramification index e
/// whose inertia degrees lie in `inertia_degrees`.
Integer bound_extensions_with_index(const LocalField& field, std::uint64_t e,
                                    const std::set<std::uint64_t>& inertia_degrees);

inline constexpr std::uint64_t kDefaultProfileDegreeCap = 24;

/// Every (e, f) with e*f <= max_degree and its count, sorted by (e*f, e).
/// Throws std::length_error when max_degree exceeds `cap`.
std::vector<ProfileCount> enumerate_profiles(const LocalField& field, std::uint64_t max_degree,
                                             std::uint64_t cap = kDefaultProfileDegreeCap);

}  // namespace hauteur
