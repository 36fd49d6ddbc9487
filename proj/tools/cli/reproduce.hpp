#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hauteur::cli {

struct RowResult {
  std::string row;
  bool pass = false;
  /// One line per failed check: "name: expected ..., got ...".
  std::vector<std::string> failures;
};

/// ex3_1, ex3_2, ex3_3, ex3_4, appendix_q11, appendix_q5, krasner_values,
/// density_values, in print order.
const std::vector<std::string>& reproduce_rows();

/// Compares every row (or just `only`) against the golden document. Throws
/// FormatError when the golden text is malformed or `only` is not a row.
std::vector<RowResult> run_reproduce(std::string_view golden_text,
                                     const std::optional<std::string>& only = std::nullopt);

}  // namespace hauteur::cli
