#pragma once

#include <stdexcept>
#include <string>

namespace hauteur {

/// A numeric routine could not reach the requested accuracy within its
/// working-precision ceiling.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// beta [K_p : Q_p] log p <= [K : Q] log 2: the height bound would not be
/// positive.
class NonPositiveBound : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace hauteur
