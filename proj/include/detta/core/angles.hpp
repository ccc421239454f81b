#pragma once

namespace detta {

/// Maps any finite angle in degrees onto the canonical range (-180, 180].
/// Throws InvalidArgument for non-finite input.
double wrap_angle(double theta);

/// Shortest signed arc from b to a, i.e. wrap_angle(a - b).
double angular_diff(double a, double b);

}  // namespace detta
