#include "detta/metrics/orientation.hpp"

#include <cmath>

#include "detta/core/errors.hpp"

namespace detta::metrics {

double pco(std::span<const double> abs_errors, double threshold) {
  if (abs_errors.empty()) throw UndefinedMetric("PCO over zero samples");
  std::size_t correct = 0;
  for (double e : abs_errors) {
    if (std::abs(e) <= threshold) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(abs_errors.size());
}

double mean_offset(std::span<const double> abs_errors) {
  if (abs_errors.empty()) throw UndefinedMetric("mean offset over zero samples");
  double sum = 0.0;
  for (double e : abs_errors) sum += std::abs(e);
  return sum / static_cast<double>(abs_errors.size());
}

}  // namespace detta::metrics
