#pragma once

#include <set>
#include <span>

#include "hauteur/factorization.hpp"
#include "hauteur/integer.hpp"

namespace hauteur {

/// Exponent of the prime q in n >= 1.
Integer valuation(const Integer& n, const Integer& q);

/// Least common multiple of a non-empty list of positive integers.
Integer lcm_list(std::span<const Integer> values);

/// (sum over e in the set of v_q(e)) - max over the set of v_q(e). Zero when
/// at most one element is divisible by q.
Integer excess_valuation(const std::set<Integer>& indices, const Integer& q);

/// prod_q q^{excess_valuation(indices, q)} over every prime q.
Factorization excess_factor(const std::set<Integer>& indices);

/// gcd over j of prod_{i != j} a_i, for at least two positive integers.
/// Computed prime by prime: v_q = sum v_q(a_i) - max v_q(a_i).
Integer gcd_of_products(std::span<const Integer> values);

/// prod_{i=1}^{l-1} gcd(lcm(a_1..a_i), a_{i+1}); equal to gcd_of_products.
Integer gcd_lcm_chain(std::span<const Integer> values);

}  // namespace hauteur
