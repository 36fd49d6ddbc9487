#include "hauteur/density.hpp"

#include <stdexcept>
#include <string>

namespace hauteur {

ExactRational natural_density(const DensityQuery& query) {
  const Integer& p = query.p;
  if (!is_prime(p)) throw std::invalid_argument("natural_density: p must be prime");
  if (p == 2) throw std::invalid_argument("natural_density: p must be odd");

  const Integer p2 = p * p;
  const Integer p3 = p2 * p;
  const Integer p4 = p3 * p;
  const bool inert = query.kind == SplittingKind::inert;

  switch (query.n) {
    case 2:
      return inert ? ExactRational(p, 2 * (p + 1)) : ExactRational(1, p + 1);
    case 3:
      return inert ? ExactRational(p * (p - 1), 3 * (p2 + 1)) : ExactRational(1, p2 + 1);
    case 4:
      if (inert) {
        ExactRational ratio(Integer((p + 1) * (p + 1)), p3 + p2 + 2 * p + 1);
        return ExactRational(1, 4) * (ExactRational(1) - ratio);
      }
      break;
    case 5:
      if (inert) {
        ExactRational ratio(Integer((p + 1) * (p2 + p + 1)), p4 + p3 + 2 * p2 + 2 * p + 1);
        return ExactRational(1, 5) * (ExactRational(1) - ratio);
      }
      break;
    default:
      break;
  }
  throw std::invalid_argument("natural_density: no formula for n=" + std::to_string(query.n) +
                              (inert ? " (inert)" : " (totally ramified)"));
}

ExactRational conjecture_gap(const Integer& p, unsigned n) {
  return ExactRational(1, n) - natural_density({p, n, SplittingKind::inert});
}

}  // namespace hauteur
