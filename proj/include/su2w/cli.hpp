#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "su2w/figures.hpp"

namespace su2w::cli {

enum class Format { csv, json };

enum ExitCode : int { kSuccess = 0, kInvalidArguments = 1, kInternalFailure = 2 };

/// 12 significant digits, '.' separator, "inf"/"nan" for non-finite values, no "-0".
std::string format_number(double v);

std::string render_table(const Table& table, Format format);
std::string render_report(const Report& report, Format format);

/// "10", "2.5" and "5/2" all name a spin.
SpinJ parse_spin(const std::string& text);

/// "x,y,z"; normalized on input.
Direction parse_direction(const std::string& text);

/// Builds a state from either {"family": ..., params} or an explicit matrix
/// [[{"re": ., "im": .}, ...], ...]. `j` and `alpha_sq` fill in parameters the JSON omits.
DensityOperator parse_state(const nlohmann::json& doc, std::optional<SpinJ> j,
                            std::optional<double> alpha_sq = std::nullopt);

/// Entry point behind the su2w executable. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace su2w::cli
