#include "lft/sample_size.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/normal.hpp>

namespace lft {

double two_sided_z(double confidence) {
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw std::invalid_argument("confidence must lie in (0, 1)");
  }
  const boost::math::normal_distribution<double> standard;
  return boost::math::quantile(standard, 0.5 + confidence / 2.0);
}

std::size_t required_sample_size(double confidence, double margin,
                                 std::optional<int> table_decimals) {
  if (!(margin > 0.0 && margin < 1.0)) throw std::invalid_argument("margin must lie in (0, 1)");
  double z = two_sided_z(confidence);
  if (table_decimals) {
    const double scale = std::pow(10.0, *table_decimals);
    z = std::round(z * scale) / scale;
  }
  const double ratio = z / (2.0 * margin);
  // Guard the ceiling against representation noise such as 16590.000000000002.
  return static_cast<std::size_t>(std::ceil(ratio * ratio - 1e-9));
}

}  // namespace lft
