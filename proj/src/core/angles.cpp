#include "detta/core/angles.hpp"

#include <cmath>

#include "detta/core/errors.hpp"

namespace detta {

double wrap_angle(double theta) {
  if (!std::isfinite(theta)) {
    throw InvalidArgument("wrap_angle: non-finite angle");
  }
  double r = std::fmod(theta, 360.0);  // exact, r in (-360, 360)
  if (r <= -180.0) {
    r += 360.0;
  } else if (r > 180.0) {
    r -= 360.0;
  }
  return r;
}

double angular_diff(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw InvalidArgument("angular_diff: non-finite angle");
  }
  return wrap_angle(a - b);
}

}  // namespace detta
