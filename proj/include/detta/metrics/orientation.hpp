#pragma once

#include <span>

namespace detta::metrics {

inline constexpr double kPcoThresholdDeg = 45.0;

/// Fraction of absolute wrapped angular errors (degrees) within `threshold`,
/// boundary inclusive. Throws UndefinedMetric on empty input.
double pco(std::span<const double> abs_errors, double threshold = kPcoThresholdDeg);

/// Mean of absolute errors. Throws UndefinedMetric on empty input.
double mean_offset(std::span<const double> abs_errors);

}  // namespace detta::metrics
