#pragma once

#include <optional>
#include <string_view>

namespace hauteur::cli {

/// tools/data/golden.json as compiled into the binary.
std::string_view builtin_golden();

/// tools/data/scenarios/<name>.scenario as compiled into the binary.
std::optional<std::string_view> builtin_scenario(std::string_view name);

}  // namespace hauteur::cli
