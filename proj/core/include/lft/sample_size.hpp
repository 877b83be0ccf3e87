#pragma once

#include <cstddef>
#include <optional>

namespace lft {

/// Two-sided standard normal critical value z with P(-z < Z < z) = confidence.
double two_sided_z(double confidence);

/// Sample size for estimating a proportion: ceil((z / (2 margin))^2).
///
/// Printed z-tables list critical values to three decimals (2.576 at 99%), and
/// by default z is rounded the same way before squaring. Pass
/// `table_decimals = std::nullopt` to use the unrounded quantile instead.
/// Throws std::invalid_argument unless both arguments lie in (0, 1).
std::size_t required_sample_size(double confidence, double margin,
                                 std::optional<int> table_decimals = 3);

}  // namespace lft
