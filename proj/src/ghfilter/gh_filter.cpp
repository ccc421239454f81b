#include "detta/ghfilter/gh_filter.hpp"

#include <cmath>
#include <string>

#include "detta/core/angles.hpp"
#include "detta/core/errors.hpp"

namespace detta::gh {

namespace {

double normalize(double x, Domain domain) {
  return domain == Domain::angular ? wrap_angle(x) : x;
}

double residual(double z, double predicted, Domain domain) {
  return domain == Domain::angular ? angular_diff(z, predicted) : z - predicted;
}

void require_finite(double z, const char* what) {
  if (!std::isfinite(z)) throw InvalidArgument(std::string(what) + ": non-finite observation");
}

}  // namespace

void GHParams::validate() const {
  if (!std::isfinite(g) || g < 0.0 || g > 1.0) {
    throw InvalidArgument("g must lie in [0, 1], got " + std::to_string(g));
  }
  if (!std::isfinite(h) || h < 0.0) {
    throw InvalidArgument("h must be non-negative, got " + std::to_string(h));
  }
}

GHState init(double z0, double t0, Domain domain) {
  require_finite(z0, "init");
  require_finite(t0, "init");
  return {normalize(z0, domain), 0.0, t0};
}

GHState predict(const GHState& state, double t, Domain domain) {
  if (t < state.last_time) {
    throw TimeRegression("predict: t=" + std::to_string(t) + " precedes last update at " +
                         std::to_string(state.last_time));
  }
  const double dt = t - state.last_time;
  return {normalize(state.x + state.v * dt, domain), state.v, t};
}

GHState update(const GHState& state, double z, double t, const GHParams& params, Domain domain) {
  require_finite(z, "update");
  params.validate();
  const double dt = t - state.last_time;
  if (dt < 0.0) {
    throw DegenerateStep("update: t=" + std::to_string(t) + " precedes last update at " +
                         std::to_string(state.last_time));
  }
  const double predicted = normalize(state.x + state.v * dt, domain);
  const double r = residual(z, predicted, domain);
  GHState next;
  // Same blend either way; anchoring at the nearer endpoint keeps g == 1
  // bitwise equal to z and g == 0 bitwise equal to the prediction.
  next.x = params.g < 0.5 ? normalize(predicted + params.g * r, domain)
                          : normalize(z - (1.0 - params.g) * r, domain);
  next.v = dt > 0.0 ? state.v + params.h * r / dt : state.v;
  next.last_time = t;
  return next;
}

GHState step(const GHState& state, std::optional<double> z, double t, const GHParams& params,
             Domain domain) {
  return z ? update(state, *z, t, params, domain) : predict(state, t, domain);
}

PointGHState init(const Point2& z0, double t0) { return {init(z0.u, t0), init(z0.v, t0)}; }

PointGHState predict(const PointGHState& state, double t) {
  return {predict(state.u, t), predict(state.v, t)};
}

PointGHState update(const PointGHState& state, const Point2& z, double t, const GHParams& params) {
  return {update(state.u, z.u, t, params), update(state.v, z.v, t, params)};
}

PointGHState step(const PointGHState& state, const std::optional<Point2>& z, double t,
                  const GHParams& params) {
  return z ? update(state, *z, t, params) : predict(state, t);
}

}  // namespace detta::gh
