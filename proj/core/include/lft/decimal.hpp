#pragma once

#include <string>

#include <gmpxx.h>

namespace lft {

/// Scientific notation with `significant` digits, rounded half away from
/// zero from the exact value, e.g. "3.91e+03". Zero renders as "0".
std::string to_scientific(const mpq_class& value, int significant);

/// Fixed-point rendering with `decimals` digits after the point, same rounding.
std::string to_fixed(const mpq_class& value, int decimals);

/// "num/den", or just "num" for integers.
std::string to_rational_string(const mpq_class& value);

}  // namespace lft
