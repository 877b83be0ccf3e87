#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace lft {

/// Parses "3", "1..5" (inclusive) or comma-separated mixtures such as
/// "0,2,4..6". Values come back sorted and deduplicated. Throws
/// std::invalid_argument on malformed or empty input.
std::vector<std::size_t> parse_range(const std::string& text);

}  // namespace lft
