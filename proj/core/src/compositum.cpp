#include "hauteur/compositum.hpp"

#include <stdexcept>

#include "hauteur/exactmath.hpp"

namespace hauteur {
namespace {

void require_non_empty(const ExtensionMultiset& ms, const char* who) {
  if (ms.empty()) throw std::invalid_argument(std::string(who) + ": empty multiset");
}

Factorization lcm_of(const std::set<Integer>& values) {
  Factorization out;
  for (const Integer& v : values) out = Factorization::lcm(out, Factorization::of(v));
  return out;
}

Factorization product_of(const std::set<Integer>& values) {
  Factorization out;
  for (const Integer& v : values) out *= Factorization::of(v);
  return out;
}

// Keeps the smaller candidate; ties keep the earlier one.
void keep_min(std::optional<Factorization>& best, Factorization candidate) {
  if (!best || compare(candidate, *best) == std::strong_ordering::less) {
    best = std::move(candidate);
  }
}

}  // namespace

ExtensionMultiset::ExtensionMultiset(Integer p, std::vector<MultisetEntry> entries)
    : p_(std::move(p)), entries_(std::move(entries)) {
  if (!is_prime(p_)) throw std::invalid_argument("ExtensionMultiset: p must be prime");
  for (const auto& entry : entries_) {
    if (entry.profile.e == 0 || entry.profile.f == 0) {
      throw std::invalid_argument("ExtensionMultiset: e and f must be >= 1");
    }
    if (entry.multiplicity < 1) {
      throw std::invalid_argument("ExtensionMultiset: multiplicity must be >= 1");
    }
  }
}

ExtensionMultiset ExtensionMultiset::all_extensions(const LocalField& field,
                                                    std::uint64_t max_degree) {
  std::vector<MultisetEntry> entries;
  for (auto& [profile, count] : enumerate_profiles(field, max_degree)) {
    entries.push_back({profile, count});
  }
  return ExtensionMultiset(field.p, std::move(entries));
}

Integer ExtensionMultiset::total() const {
  Integer n = 0;
  for (const auto& entry : entries_) n += entry.multiplicity;
  return n;
}

Integer ExtensionMultiset::tame_total() const {
  Integer m = 0;
  for (const auto& entry : entries_) {
    if (!entry.profile.is_wild(p_)) m += entry.multiplicity;
  }
  return m;
}

std::map<Integer, Integer> ExtensionMultiset::index_counts() const {
  std::map<Integer, Integer> out;
  for (const auto& entry : entries_) out[Integer(entry.profile.e)] += entry.multiplicity;
  return out;
}

std::set<Integer> ExtensionMultiset::tame_indices() const {
  std::set<Integer> out;
  for (const auto& entry : entries_) {
    if (!entry.profile.is_wild(p_)) out.insert(Integer(entry.profile.e));
  }
  return out;
}

std::set<Integer> ExtensionMultiset::wild_indices() const {
  std::set<Integer> out;
  for (const auto& entry : entries_) {
    if (entry.profile.is_wild(p_)) out.insert(Integer(entry.profile.e));
  }
  return out;
}

Integer ExtensionMultiset::inertia_lcm() const {
  Integer out = 1;
  for (const auto& entry : entries_) out = lcm(out, Integer(entry.profile.f));
  return out;
}

std::map<Integer, Integer> ExtensionMultiset::degree_counts() const {
  std::map<Integer, Integer> out;
  for (const auto& entry : entries_) out[Integer(entry.profile.degree())] += entry.multiplicity;
  return out;
}

Factorization ramification_bound(const ExtensionMultiset& ms) {
  require_non_empty(ms, "ramification_bound");
  const std::set<Integer> tame = ms.tame_indices();
  const std::set<Integer> wild = ms.wild_indices();
  if (wild.empty()) return lcm_of(tame);

  const auto counts = ms.index_counts();
  std::optional<Factorization> best;
  for (const Integer& leading : wild) {
    std::set<Integer> lcm_part = tame;
    lcm_part.insert(leading);
    Factorization candidate = lcm_of(lcm_part);
    candidate *= Factorization::of(leading).pow(counts.at(leading) - 1);
    for (const Integer& other : wild) {
      if (other != leading) candidate *= Factorization::of(other).pow(counts.at(other));
    }
    keep_min(best, std::move(candidate));
  }
  return *best;
}

Factorization inertia_factor(const ExtensionMultiset& ms) {
  require_non_empty(ms, "inertia_factor");
  const auto counts = ms.index_counts();
  const Integer n = ms.total();
  const Integer m = ms.tame_total();

  if (m >= n - 2) {
    std::set<Integer> all_indices;
    Factorization out;
    for (const auto& [e, count] : counts) {
      all_indices.insert(e);
      out *= Factorization::of(e).pow(count - 1);
    }
    return out * excess_factor(all_indices);
  }

  Factorization full;
  for (const auto& [e, count] : counts) full *= Factorization::of(e).pow(count);

  const std::set<Integer> tame = ms.tame_indices();
  const std::set<Integer> wild = ms.wild_indices();
  std::optional<Factorization> best;
  for (auto first = wild.begin(); first != wild.end(); ++first) {
    for (auto second = first; second != wild.end(); ++second) {
      if (first == second && counts.at(*first) < 2) continue;
      std::set<Integer> leading = tame;
      leading.insert(*first);
      leading.insert(*second);
      // Every index in `leading` occurs at least once in `full`, so the
      // division is exact; exact_div enforces it.
      keep_min(best, full.exact_div(product_of(leading)) * excess_factor(leading));
    }
  }
  return *best;
}

Factorization inertia_bound(const ExtensionMultiset& ms, const Integer& inertia_lcm) {
  if (inertia_lcm < 1) throw std::invalid_argument("inertia_bound: inertia lcm must be >= 1");
  return Factorization::of(inertia_lcm) * inertia_factor(ms);
}

Integer two_field_inertia_bound(const ExtensionProfile& first, const ExtensionProfile& second) {
  if (first.e == 0 || first.f == 0 || second.e == 0 || second.f == 0) {
    throw std::invalid_argument("two_field_inertia_bound: e and f must be >= 1");
  }
  return lcm(Integer(first.f), Integer(second.f)) * gcd(Integer(first.e), Integer(second.e));
}

Factorization crude_bound(const std::map<Integer, Integer>& degree_counts) {
  Factorization out;
  for (const auto& [d, count] : degree_counts) {
    if (d < 1 || count < 0) throw std::invalid_argument("crude_bound: invalid degree count");
    out *= Factorization::of(d).pow(count);
  }
  return out;
}

Factorization crude_bound(const ExtensionMultiset& ms) { return crude_bound(ms.degree_counts()); }

std::optional<ExactRamification> equality_case(const ExtensionMultiset& ms,
                                               bool linearly_disjoint) {
  if (!linearly_disjoint || ms.empty()) return std::nullopt;
  if (!ms.wild_indices().empty()) return std::nullopt;

  const auto counts = ms.index_counts();
  for (auto a = counts.begin(); a != counts.end(); ++a) {
    for (auto b = std::next(a); b != counts.end(); ++b) {
      if (gcd(a->first, b->first) != 1) return std::nullopt;
    }
  }

  Factorization inertia_product;
  for (const auto& entry : ms.entries()) {
    inertia_product *= Factorization::of(Integer(entry.profile.f)).pow(entry.multiplicity);
  }
  if (inertia_product != Factorization::of(ms.inertia_lcm())) return std::nullopt;

  ExactRamification out;
  out.f = inertia_product;
  for (const auto& [e, count] : counts) {
    Factorization index = Factorization::of(e);
    out.e *= index;
    out.f *= index.pow(count - 1);
  }
  return out;
}

}  // namespace hauteur
