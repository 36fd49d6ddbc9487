#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "hauteur/factorization.hpp"
#include "hauteur/heightbound.hpp"
#include "hauteur/rational.hpp"

namespace hauteur::cli {

/// Thrown for malformed scenario or report documents.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// JSON scenario document:
///   p, base {deg_K, local_deg, e_p, f_p, class_order}, towers [{d, e, count}],
///   M, moduli [{g, eps}]. `count` is a positive integer or "krasner";
///   `base`, `M` and `moduli` are optional. Unknown keys are errors.
TowerScenario parse_scenario(std::string_view text);

/// Report document as written by `hauteur bound`.
nlohmann::ordered_json report_to_json(const BoundReport& report);
std::string render_report(const BoundReport& report);

/// Parsed form of a rendered report.
struct ReportRecord {
  Factorization e_bound;
  Factorization f_bound;
  double log10_f = 0;
  std::uint64_t k = 0;
  std::uint64_t lambda = 0;
  ExactRational beta;
  double ln_height_bound = 0;
  double log10_height_bound = 0;
};

ReportRecord parse_report(std::string_view text);
nlohmann::ordered_json record_to_json(const ReportRecord& record);

/// Rounds to `significant` digits and returns the nearest double.
double rounded(const Real& value, int significant);

}  // namespace hauteur::cli
