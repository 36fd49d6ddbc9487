#pragma once

// Independent reference implementations used by the unit and acceptance
// tests. Nothing here calls into the library code it checks: each oracle
// works from the defining formula with plain GMP/MPFR arithmetic.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

namespace oracle {

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(0x5eed'0000ULL + salt); }

inline mpz_class pow(const mpz_class& b, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline std::vector<unsigned long> small_primes(unsigned long limit) {
  std::vector<unsigned long> out;
  for (unsigned long n = 2; n <= limit; ++n) {
    bool prime = true;
    for (unsigned long q = 2; q * q <= n; ++q) prime = prime && n % q != 0;
    if (prime) out.push_back(n);
  }
  return out;
}

inline unsigned long sigma(unsigned long n) {
  unsigned long s = 0;
  for (unsigned long l = 1; l <= n; ++l) s += n % l == 0 ? l : 0;
  return s;
}

// eps(s) * D with eps(s) = 1/p + ... + 1/p^s, summed as a rational.
inline unsigned long eps_times(unsigned long p, unsigned long D, unsigned s) {
  mpq_class eps = 0;
  mpq_class term = 1;
  for (unsigned i = 1; i <= s; ++i) {
    term /= p;
    eps += term;
  }
  mpq_class v = eps * D;
  v.canonicalize();
  if (v.get_den() != 1) throw std::logic_error("non-integral Krasner exponent");
  return v.get_num().get_ui();
}

// Krasner's N_{F,d} (total = true) or N^{(r)}_{F,d}, F of degree n over Q_p.
inline mpz_class krasner(unsigned long p, unsigned long n, unsigned long d, bool total) {
  unsigned long h = d;
  unsigned m = 0;
  while (h % p == 0) {
    h /= p;
    ++m;
  }
  const unsigned long D = d * n;
  mpz_class sum = 0;
  for (unsigned s = 0; s <= m; ++s) {
    mpz_class hi = pow(p, eps_times(p, D, s));
    mpz_class lo = s == 0 ? mpz_class(0) : pow(p, eps_times(p, D, s - 1));
    if (total) {
      mpz_class num = pow(p, m + s + 1) - pow(p, 2 * s);
      sum += num / (p - 1) * (hi - lo);
    } else {
      sum += pow(p, s) * (hi - lo);
    }
  }
  return total ? mpz_class(sigma(h)) * sum : mpz_class(d) * sum;
}

// gcd over j of prod_{i != j} a_i, straight from the definition.
inline mpz_class gcd_of_products(const std::vector<mpz_class>& a) {
  mpz_class g = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    mpz_class prod = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i != j) prod *= a[i];
    }
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), prod.get_mpz_t());
  }
  return g;
}

inline unsigned long valuation(unsigned long n, unsigned long q) {
  unsigned long v = 0;
  while (n % q == 0) {
    n /= q;
    ++v;
  }
  return v;
}

inline mpz_class lcm(const std::vector<unsigned long>& values) {
  mpz_class out = 1;
  for (unsigned long v : values) {
    mpz_class x = v;
    mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), x.get_mpz_t());
  }
  return out;
}

// prod_q q^{a(q)} for a set of indices, a(q) = sum v_q - max v_q.
inline mpz_class excess(const std::vector<unsigned long>& set) {
  mpz_class out = 1;
  unsigned long top = *std::max_element(set.begin(), set.end());
  for (unsigned long q : small_primes(std::max(top, 2UL))) {
    unsigned long sum = 0, mx = 0;
    for (unsigned long e : set) {
      sum += valuation(e, q);
      mx = std::max(mx, valuation(e, q));
    }
    out *= pow(q, sum - mx);
  }
  return out;
}

// Compositum bounds from an explicit list of ramification indices (one per
// extension), evaluated on every ordering with the tame ones first, as in
// the theorem's statement, and minimised.
struct CompositumOracle {
  mpz_class ramification;
  mpz_class inertia_factor;
};

inline CompositumOracle compositum(unsigned long p, std::vector<unsigned long> indices) {
  std::sort(indices.begin(), indices.end());
  const std::size_t n = indices.size();
  std::map<unsigned long, unsigned long> count;
  for (unsigned long e : indices) ++count[e];
  std::vector<unsigned long> distinct;
  for (auto& [e, c] : count) distinct.push_back(e);
  std::vector<unsigned long> tame, wild;
  for (unsigned long e : indices) (e % p == 0 ? wild : tame).push_back(e);
  const std::size_t m = tame.size();

  std::optional<mpz_class> best_e, best_f;
  do {
    bool tame_first = true;
    for (std::size_t i = 0; i < n; ++i) tame_first = tame_first && ((i < m) == (indices[i] % p != 0));
    if (!tame_first) continue;

    mpz_class e_bound;
    if (m == n) {
      e_bound = lcm(indices);
    } else {
      std::vector<unsigned long> head(indices.begin(), indices.begin() + static_cast<long>(m) + 1);
      const unsigned long lead = indices[m];
      e_bound = lcm(head) * pow(lead, count[lead] - 1);
      for (auto& [e, c] : count) {
        if (e % p == 0 && e != lead) e_bound *= pow(e, c);
      }
    }
    if (!best_e || e_bound < *best_e) best_e = e_bound;

    mpz_class f_factor;
    if (m + 2 >= n) {
      f_factor = excess(distinct);
      for (auto& [e, c] : count) f_factor *= pow(e, c - 1);
    } else {
      std::vector<unsigned long> lambda(indices.begin(), indices.begin() + static_cast<long>(m) + 2);
      std::sort(lambda.begin(), lambda.end());
      lambda.erase(std::unique(lambda.begin(), lambda.end()), lambda.end());
      mpz_class full = 1;
      for (auto& [e, c] : count) full *= pow(e, c);
      mpz_class divisor = 1;
      for (unsigned long e : lambda) divisor *= e;
      f_factor = full / divisor * excess(lambda);
    }
    if (!best_f || f_factor < *best_f) best_f = f_factor;
  } while (std::next_permutation(indices.begin(), indices.end()));
  return {*best_e, *best_f};
}

// Decides beta * L * ln p > D * ln 2 for beta = a / b: exactly via
// p^{aL} > 2^{bD} when that is cheap, otherwise at 512 bits with a margin.
// Returns nothing if the 512-bit evaluation is too close to call.
inline std::optional<bool> threshold(const mpq_class& beta, unsigned long p, unsigned long L,
                                     unsigned long D) {
  const mpz_class a = beta.get_num() * L;
  const mpz_class b = beta.get_den() * D;
  if (a < 0) return false;
  const double bits = a.get_d() * std::log2(static_cast<double>(p));
  if (bits < static_cast<double>(1 << 20)) {
    if (b.get_d() >= bits + 2) return false;
    mpz_class lhs, rhs;
    mpz_pow_ui(lhs.get_mpz_t(), mpz_class(p).get_mpz_t(), a.get_ui());
    mpz_ui_pow_ui(rhs.get_mpz_t(), 2, b.get_ui());
    return lhs > rhs;
  }
  mpfr_t x, y, lp, l2;
  mpfr_inits2(512, x, y, lp, l2, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_ui(lp, p, MPFR_RNDN);
  mpfr_log(lp, lp, MPFR_RNDN);
  mpfr_const_log2(l2, MPFR_RNDN);
  mpfr_set_z(x, a.get_mpz_t(), MPFR_RNDN);
  mpfr_mul(x, x, lp, MPFR_RNDN);
  mpfr_set_z(y, b.get_mpz_t(), MPFR_RNDN);
  mpfr_mul(y, y, l2, MPFR_RNDN);
  mpfr_sub(lp, x, y, MPFR_RNDN);
  mpfr_abs(l2, lp, MPFR_RNDN);
  mpfr_div(l2, l2, x, MPFR_RNDN);
  std::optional<bool> out;
  if (mpfr_cmp_d(l2, 1e-120) > 0) out = mpfr_sgn(lp) > 0;
  mpfr_clears(x, y, lp, l2, static_cast<mpfr_ptr>(nullptr));
  return out;
}

// Weil height of a root of a x^2 + b x + c (irreducible), closed form.
inline double quadratic_height(long a, long b, long c) {
  mpfr_t disc, r1, r2, t, acc;
  mpfr_inits2(256, disc, r1, r2, t, acc, static_cast<mpfr_ptr>(nullptr));
  const long delta = b * b - 4 * a * c;
  mpfr_set_si(acc, a < 0 ? -a : a, MPFR_RNDN);
  mpfr_log(acc, acc, MPFR_RNDN);
  if (delta >= 0) {
    mpfr_set_si(disc, delta, MPFR_RNDN);
    mpfr_sqrt(disc, disc, MPFR_RNDN);
    for (int sign : {1, -1}) {
      mpfr_set_si(t, -b, MPFR_RNDN);
      if (sign > 0) mpfr_add(t, t, disc, MPFR_RNDN); else mpfr_sub(t, t, disc, MPFR_RNDN);
      mpfr_div_si(t, t, 2 * a, MPFR_RNDN);
      mpfr_abs(t, t, MPFR_RNDN);
      if (mpfr_cmp_ui(t, 1) > 0) {
        mpfr_log(t, t, MPFR_RNDN);
        mpfr_add(acc, acc, t, MPFR_RNDN);
      }
    }
  } else {
    // |root|^2 = c / a for both conjugates.
    mpfr_set_si(t, c, MPFR_RNDN);
    mpfr_div_si(t, t, a, MPFR_RNDN);
    mpfr_abs(t, t, MPFR_RNDN);
    if (mpfr_cmp_ui(t, 1) > 0) {
      mpfr_log(t, t, MPFR_RNDN);
      mpfr_add(acc, acc, t, MPFR_RNDN);
    }
  }
  mpfr_div_ui(acc, acc, 2, MPFR_RNDN);
  const double out = mpfr_get_d(acc, MPFR_RNDN);
  mpfr_clears(disc, r1, r2, t, acc, static_cast<mpfr_ptr>(nullptr));
  return out;
}

// Hand-simplified inert densities: p/(2(p+1)), p(p-1)/(3(p^2+1)),
// p^3/(4(p^3+p^2+2p+1)), p^4/(5(p^4+p^3+2p^2+2p+1)).
inline mpq_class inert_density(long p, unsigned n) {
  mpz_class P = p;
  mpq_class out;
  switch (n) {
    case 2: out = mpq_class(P, 2 * (P + 1)); break;
    case 3: out = mpq_class(P * (P - 1), 3 * (P * P + 1)); break;
    case 4: out = mpq_class(P * P * P, 4 * (P * P * P + P * P + 2 * P + 1)); break;
    default: out = mpq_class(P * P * P * P, 5 * (P * P * P * P + P * P * P + 2 * P * P + 2 * P + 1)); break;
  }
  out.canonicalize();
  return out;
}

}  // namespace oracle
