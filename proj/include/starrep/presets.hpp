#pragma once

#include <optional>
#include <string>
#include <vector>

namespace starrep {

/// Names accepted by preset_text (monomial takes a ':'-separated suffix).
std::vector<std::string> preset_names();

/// DSL text of a bundled presentation. `spec` is a preset name, or
/// "monomial:W1,W2,..." with words over single-letter or named generators,
/// e.g. "monomial:x^2" or "monomial:x y x,y^3". nullopt for unknown names.
std::optional<std::string> preset_text(const std::string& spec);

} // namespace starrep
