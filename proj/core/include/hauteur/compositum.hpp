#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "hauteur/factorization.hpp"
#include "hauteur/krasner.hpp"

namespace hauteur {

struct MultisetEntry {
  ExtensionProfile profile;
  Integer multiplicity = 1;
};

/// Finite family K_1/F, ..., K_n/F of extensions of a p-adic field, recorded
/// as ramification profiles with multiplicities. A multiplicity may be an
/// upper bound for the true number of distinct completions; every bound
/// computed from it stays valid.
class ExtensionMultiset {
 public:
  ExtensionMultiset(Integer p, std::vector<MultisetEntry> entries);

  /// All extensions of `field` of degree <= max_degree, counted by Krasner.
  static ExtensionMultiset all_extensions(const LocalField& field, std::uint64_t max_degree);

  const Integer& p() const { return p_; }
  const std::vector<MultisetEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// n: total count with multiplicity.
  Integer total() const;
  /// m: count (with multiplicity) of extensions whose e is prime to p.
  Integer tame_total() const;
  /// e -> N(e), summed over all entries with that ramification index.
  std::map<Integer, Integer> index_counts() const;
  std::set<Integer> tame_indices() const;
  std::set<Integer> wild_indices() const;
  Integer inertia_lcm() const;
  /// degree e*f -> number of extensions of that degree.
  std::map<Integer, Integer> degree_counts() const;

 private:
  Integer p_;
  std::vector<MultisetEntry> entries_;
};

/// Ramification index of the compositum: exact lcm when every extension is
/// tame, otherwise the wild bound minimised over the distinguished wild index.
Factorization ramification_bound(const ExtensionMultiset& ms);

/// The factor E with f(compositum) <= lcm(f_i) * E. When more than two
/// extensions are wild, minimised over the choice of the two leading ones.
Factorization inertia_factor(const ExtensionMultiset& ms);

/// inertia_lcm * E, where inertia_lcm is normally ms.inertia_lcm().
Factorization inertia_bound(const ExtensionMultiset& ms, const Integer& inertia_lcm);

/// lcm(f_1, f_2) * gcd(e_1, e_2).
Integer two_field_inertia_bound(const ExtensionProfile& first, const ExtensionProfile& second);

/// prod over degrees d of d^{N_d}: a bound on the full compositum degree.
Factorization crude_bound(const std::map<Integer, Integer>& degree_counts);
Factorization crude_bound(const ExtensionMultiset& ms);

struct ExactRamification {
  Factorization e;
  Factorization f;
};

/// Exact (e, f) of the compositum when the extensions are successively
/// linearly disjoint, all tame, with ramification indices pairwise equal or
/// coprime, and prod f_i = lcm f_i. Otherwise nothing.
std::optional<ExactRamification> equality_case(const ExtensionMultiset& ms, bool linearly_disjoint);

}  // namespace hauteur
