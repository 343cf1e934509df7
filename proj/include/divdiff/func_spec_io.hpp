#pragma once

#include <filesystem>
#include <istream>
#include <string_view>
#include <vector>

#include "divdiff/func_spec.hpp"

namespace divdiff {

/// Comma-separated rationals, e.g. "0,1/2,-3".
std::vector<Rational> parse_rational_list(std::string_view text);

/// Grid file: a header line `L=<integer>` followed by `k,<p/q>` rows with
/// 0 <= k <= L. Missing k default to 0. Blank lines and `#` comments are skipped.
GridFunction read_grid_function(std::istream& in);
GridFunction read_grid_function(const std::filesystem::path& path);

/// `poly:a0,a1,...`, `ratfun:a0,...;b0,...` or `pl:<path>`.
FuncSpec parse_func_spec(std::string_view text, bool extend_by_zero = false);

}  // namespace divdiff
