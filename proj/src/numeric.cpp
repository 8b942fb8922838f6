#include "distid/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "distid/errors.hpp"

namespace distid {

double log_sum_exp(std::span<const double> terms) {
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  if (terms.empty()) return kNegInf;
  const double peak = *std::max_element(terms.begin(), terms.end());
  if (peak == kNegInf) return kNegInf;
  if (std::isinf(peak)) return peak;
  double sum = 0.0;
  for (double t : terms) sum += std::exp(t - peak);
  return peak + std::log(sum);
}

double least_squares_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw PreconditionError("least_squares_slope: need at least two paired points");
  }
  const auto count = static_cast<double>(x.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= count;
  mean_y /= count;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mean_x) * (x[i] - mean_x);
    sxy += (x[i] - mean_x) * (y[i] - mean_y);
  }
  if (sxx == 0.0) throw PreconditionError("least_squares_slope: x values are all equal");
  return sxy / sxx;
}

}  // namespace distid
