#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "hauteur/compositum.hpp"
#include "oracles.hpp"

using namespace hauteur;

namespace {

ExtensionMultiset family(long p, std::vector<std::pair<ExtensionProfile, long>> entries) {
  std::vector<MultisetEntry> out;
  for (auto& [profile, count] : entries) out.push_back({profile, Integer(count)});
  return ExtensionMultiset(p, std::move(out));
}

// Ex 3.4's family over Q_3: tame indices 1, 2, 4, 5 and 21 wild extensions
// with e = 3.
ExtensionMultiset example_3_4() {
  return family(3, {{{1, 1}, 1}, {{2, 1}, 1}, {{4, 1}, 1}, {{5, 1}, 1}, {{3, 1}, 21}});
}

}  // namespace

TEST(Compositum, RamificationExamples) {
  EXPECT_EQ(ramification_bound(family(3, {{{2, 1}, 1}, {{4, 1}, 1}, {{5, 1}, 1}})), Factorization::of(20UL));
  EXPECT_EQ(ramification_bound(example_3_4()), Factorization::of(60UL) * Factorization::prime_power(3, 20));
  EXPECT_EQ(ramification_bound(family(7, {{{6, 5}, 1}})), Factorization::of(6UL));
}

TEST(Compositum, InertiaSingleExtension) {
  const ExtensionMultiset single = family(5, {{{3, 4}, 1}});
  EXPECT_TRUE(inertia_factor(single).is_one());
  EXPECT_EQ(inertia_bound(single, single.inertia_lcm()), Factorization::of(4UL));
}

TEST(Compositum, TwoFieldExamples) {
  EXPECT_EQ(two_field_inertia_bound({2, 3}, {4, 5}), 30);
  EXPECT_EQ(two_field_inertia_bound({6, 7}, {6, 7}), 42);
  EXPECT_EQ(two_field_inertia_bound({1, 4}, {1, 6}), 12);
}

TEST(Compositum, AppendixQ11) {
  const ExtensionMultiset all = ExtensionMultiset::all_extensions(LocalField::make(11), 10);
  Factorization expected = Factorization::of(2520UL) * Factorization::of(1440UL);
  for (unsigned long e = 1; e <= 10; ++e) expected *= Factorization::of(e).pow(e * (10 / e) - 1);
  EXPECT_EQ(inertia_bound(all, all.inertia_lcm()), expected);
  const double refined = inertia_bound(all, all.inertia_lcm()).log10().to_double();
  EXPECT_NEAR(refined, 55.5080674863918, 1e-9);

  Factorization crude;
  for (unsigned long i = 1; i <= 10; ++i) crude *= Factorization::of(i).pow(oracle::sigma(i));
  EXPECT_EQ(crude_bound(all), crude);
  EXPECT_GT(crude.log10().to_double(), 70.0);
  EXPECT_LT(crude.log10().to_double(), 71.5);
  EXPECT_TRUE(compare(expected, crude) < 0);
}

TEST(Compositum, AppendixQ5) {
  const ExtensionMultiset all = ExtensionMultiset::all_extensions(LocalField::make(5), 10);
  const auto counts = all.index_counts();
  EXPECT_EQ(counts.at(5), 710);
  EXPECT_EQ(counts.at(10), 1210);
  const double refined = inertia_bound(all, all.inertia_lcm()).log10().to_double();
  EXPECT_GT(refined, 1744.0);
  EXPECT_LT(refined, 1745.8);

  Factorization crude = Factorization::of(5UL).pow(106) * Factorization::of(10UL).pow(1818);
  for (unsigned long i = 1; i <= 9; ++i) {
    if (i != 5) crude *= Factorization::of(i).pow(oracle::sigma(i));
  }
  EXPECT_EQ(crude_bound(all), crude);
}

TEST(Compositum, CrudeSingleDegree) {
  EXPECT_EQ(crude_bound(std::map<Integer, Integer>{{Integer(7), Integer(1)}}), Factorization::of(7UL));
}

TEST(Compositum, MatchesPermutationOracle) {
  auto rng = oracle::rng(20);
  std::uniform_int_distribution<int> pick_p(0, 2);
  std::uniform_int_distribution<int> pick_n(1, 6);
  std::uniform_int_distribution<unsigned long> pick_e(1, 9);
  const unsigned long primes[] = {2, 3, 5};
  for (int trial = 0; trial < 400; ++trial) {
    const unsigned long p = primes[pick_p(rng)];
    const int n = pick_n(rng);
    std::vector<unsigned long> indices;
    std::vector<MultisetEntry> entries;
    for (int i = 0; i < n; ++i) {
      indices.push_back(pick_e(rng));
      entries.push_back({{indices.back(), 1}, 1});
    }
    const ExtensionMultiset ms(p, entries);
    const oracle::CompositumOracle want = oracle::compositum(p, indices);
    std::string label = "p=" + std::to_string(p) + " e=";
    for (unsigned long e : indices) label += std::to_string(e) + ",";
    EXPECT_EQ(ramification_bound(ms).expand(), want.ramification) << label;
    EXPECT_EQ(inertia_factor(ms).expand(), want.inertia_factor) << label;
  }
}

TEST(Compositum, RefinedNeverExceedsCrude) {
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    for (std::uint64_t dmax = 1; dmax <= 10; ++dmax) {
      const ExtensionMultiset all = ExtensionMultiset::all_extensions(LocalField::make(p), dmax);
      EXPECT_TRUE(compare(inertia_bound(all, all.inertia_lcm()), crude_bound(all)) <= 0) << p << ' ' << dmax;
      EXPECT_TRUE(compare(ramification_bound(all), crude_bound(all)) <= 0) << p << ' ' << dmax;
    }
  }
}

TEST(Compositum, EqualityCaseExamples) {
  // Tame, indices pairwise equal or coprime, inertia degrees coprime.
  const ExtensionMultiset ms = family(7, {{{2, 1}, 1}, {{2, 3}, 1}, {{3, 5}, 1}});
  const auto exact = equality_case(ms, true);
  ASSERT_TRUE(exact.has_value());
  EXPECT_EQ(exact->e, Factorization::of(6UL));
  EXPECT_EQ(exact->f, Factorization::of(2UL * 15UL));

  const auto single = equality_case(family(7, {{{4, 9}, 1}}), true);
  ASSERT_TRUE(single.has_value());
  EXPECT_EQ(single->e, Factorization::of(4UL));
  EXPECT_EQ(single->f, Factorization::of(9UL));

  EXPECT_FALSE(equality_case(family(3, {{{3, 1}, 1}, {{2, 1}, 1}}), true).has_value());
  EXPECT_FALSE(equality_case(ms, false).has_value());
  EXPECT_FALSE(equality_case(family(7, {{{2, 1}, 1}, {{4, 1}, 1}}), true).has_value());
  EXPECT_FALSE(equality_case(family(7, {{{1, 2}, 1}, {{1, 4}, 1}}), true).has_value());
}

TEST(Compositum, EqualityCaseMatchesInertiaBound) {
  // When the exact formula applies it must not exceed the general bound.
  const ExtensionMultiset ms = family(11, {{{2, 1}, 2}, {{3, 2}, 1}, {{5, 1}, 3}});
  const auto exact = equality_case(ms, true);
  ASSERT_TRUE(exact.has_value());
  EXPECT_TRUE(compare(exact->f, inertia_bound(ms, ms.inertia_lcm())) <= 0);
  EXPECT_EQ(exact->f, Factorization::of(2UL * 25UL * 2UL));
}

TEST(Compositum, MultisetAccessors) {
  const ExtensionMultiset ms = example_3_4();
  EXPECT_EQ(ms.total(), 25);
  EXPECT_EQ(ms.tame_total(), 4);
  EXPECT_EQ(ms.wild_indices(), (std::set<Integer>{3}));
  EXPECT_EQ(ms.tame_indices(), (std::set<Integer>{1, 2, 4, 5}));
  EXPECT_EQ(ms.inertia_lcm(), 1);
  EXPECT_THROW(ExtensionMultiset(4, {}), std::invalid_argument);
}
