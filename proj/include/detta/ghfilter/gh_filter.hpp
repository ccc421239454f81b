#pragma once

#include <optional>

#include "detta/core/types.hpp"

namespace detta::gh {

/// Update gains: g blends the value toward the measurement, h the velocity.
struct GHParams {
  double g = 0.5;
  double h = 0.02;

  /// Throws InvalidArgument unless 0 <= g <= 1 and h >= 0 (both finite).
  void validate() const;

  friend bool operator==(const GHParams&, const GHParams&) = default;
};

/// Scalar filter state. Velocity is in value units per second.
struct GHState {
  double x = 0.0;
  double v = 0.0;
  double last_time = 0.0;

  friend bool operator==(const GHState&, const GHState&) = default;
};

/// Linear values filter on the real line; angular values live on the circle
/// (degrees, canonical range) and take shortest-arc residuals.
enum class Domain { linear, angular };

GHState init(double z0, double t0, Domain domain = Domain::linear);

/// Advances the state to time t along its velocity. Throws TimeRegression if
/// t precedes the state's last_time.
GHState predict(const GHState& state, double t, Domain domain = Domain::linear);

/// Predict to t, then correct with measurement z:
///   x~ = x + v*dt;  r = z - x~;  x = x~ + g*r;  v = v + h*r/dt.
/// With dt == 0 the velocity correction is skipped. dt < 0 throws DegenerateStep.
GHState update(const GHState& state, double z, double t, const GHParams& params,
               Domain domain = Domain::linear);

/// update() when a measurement is present, predict() otherwise.
GHState step(const GHState& state, std::optional<double> z, double t, const GHParams& params,
             Domain domain = Domain::linear);

/// Two independent scalar filters for an image point, sharing a clock.
struct PointGHState {
  GHState u;
  GHState v;

  Point2 position() const { return {u.x, v.x}; }
  double last_time() const { return u.last_time; }

  friend bool operator==(const PointGHState&, const PointGHState&) = default;
};

PointGHState init(const Point2& z0, double t0);
PointGHState predict(const PointGHState& state, double t);
PointGHState update(const PointGHState& state, const Point2& z, double t, const GHParams& params);
PointGHState step(const PointGHState& state, const std::optional<Point2>& z, double t,
                  const GHParams& params);

}  // namespace detta::gh
