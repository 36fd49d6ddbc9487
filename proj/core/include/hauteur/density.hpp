#pragma once

#include "hauteur/integer.hpp"
#include "hauteur/rational.hpp"

namespace hauteur {

enum class SplittingKind { inert, totally_ramified };

/// Degree-n fields in which p (an odd prime) is inert or totally ramified.
/// Totally ramified is available for n in {2, 3}; inert for n in {2..5}.
struct DensityQuery {
  Integer p;
  unsigned n = 2;
  SplittingKind kind = SplittingKind::inert;
};

/// Natural density of the query's set among degree-n fields ordered by
/// discriminant (Gauss for n = 2, Davenport-Heilbronn for 3, Bhargava for 4
/// and 5). Throws std::invalid_argument for p = 2, non-prime p, or an
/// unsupported (n, kind).
ExactRational natural_density(const DensityQuery& query);

/// 1/n minus the inert density: the distance to the conjectured limit.
ExactRational conjecture_gap(const Integer& p, unsigned n);

}  // namespace hauteur
