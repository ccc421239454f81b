#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "detta/core/angles.hpp"
#include "detta/core/errors.hpp"
#include "detta/ghfilter/gh_filter.hpp"

namespace detta::gh {
namespace {

constexpr Domain kAng = Domain::angular;

TEST(GhInit, Examples) {
  EXPECT_EQ(init(42.0, 0.0), (GHState{42.0, 0.0, 0.0}));
  EXPECT_EQ(init(-180.0, 1.0, kAng), (GHState{180.0, 0.0, 1.0}));
  const PointGHState p = init(Point2{100.0, 50.0}, 0.0);
  EXPECT_EQ(p.position(), (Point2{100.0, 50.0}));
  EXPECT_EQ(p.u.v, 0.0);
  EXPECT_EQ(p.v.v, 0.0);
  EXPECT_THROW(init(std::nan(""), 0.0), InvalidArgument);
}

TEST(GhPredict, Examples) {
  EXPECT_EQ(predict(GHState{10.0, 2.0, 0.0}, 1.0), (GHState{12.0, 2.0, 1.0}));
  EXPECT_EQ(predict(GHState{170.0, 20.0, 0.0}, 1.0, kAng), (GHState{-170.0, 20.0, 1.0}));
  const GHState s{3.25, -7.5, 4.0};
  EXPECT_EQ(predict(s, 4.0), s);
  EXPECT_THROW(predict(s, 3.9), TimeRegression);
}

TEST(GhUpdate, Examples) {
  const GHState out = update(GHState{0.0, 0.0, 0.0}, 10.0, 1.0, GHParams{0.5, 0.02});
  EXPECT_EQ(out.x, 5.0);
  EXPECT_EQ(out.v, 0.2);
  EXPECT_EQ(out.last_time, 1.0);

  const GHState wrapped = update(GHState{170.0, 0.0, 0.0}, -170.0, 1.0, GHParams{0.5, 0.0}, kAng);
  EXPECT_EQ(wrapped.x, 180.0);
  EXPECT_EQ(wrapped.v, 0.0);
}

TEST(GhUpdate, ZeroResidualKeepsPrediction) {
  const GHState s{1.0, 3.0, 0.0};
  const GHState out = update(s, 4.0, 1.0, GHParams{0.7, 0.3});
  EXPECT_EQ(out.x, 4.0);
  EXPECT_EQ(out.v, 3.0);
}

TEST(GhUpdate, Errors) {
  const GHState s{0.0, 0.0, 2.0};
  EXPECT_THROW(update(s, 1.0, 1.0, GHParams{}), DegenerateStep);
  EXPECT_THROW(update(s, 1.0, 1.0, GHParams{}), TimeRegression);
  EXPECT_THROW(update(s, std::numeric_limits<double>::infinity(), 3.0, GHParams{}),
               InvalidArgument);
  EXPECT_THROW(update(s, 1.0, 3.0, GHParams{1.5, 0.0}), InvalidArgument);
  EXPECT_THROW(update(s, 1.0, 3.0, GHParams{0.5, -0.1}), InvalidArgument);
}

TEST(GhUpdate, SameTimestampBlendsWithoutVelocity) {
  const GHState out = update(GHState{2.0, 5.0, 1.0}, 6.0, 1.0, GHParams{0.25, 0.5});
  EXPECT_EQ(out.x, 3.0);
  EXPECT_EQ(out.v, 5.0);
  EXPECT_EQ(out.last_time, 1.0);
}

TEST(GhStep, Definitional) {
  const GHState s{10.0, -4.0, 0.5};
  const GHParams p{0.3, 0.1};
  EXPECT_EQ(step(s, std::nullopt, 0.75, p), predict(s, 0.75));
  EXPECT_EQ(step(s, 7.0, 0.75, p), update(s, 7.0, 0.75, p));
  EXPECT_EQ(step(s, 7.0, 0.75, p, kAng), update(s, 7.0, 0.75, p, kAng));
}

TEST(GhStep, KeepIsExactPassThrough) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> val(-1e4, 1e4);
  std::bernoulli_distribution have(0.4);
  const GHParams keep{1.0, 0.0};
  GHState lin = init(val(rng), 0.0);
  GHState ang = init(wrap_angle(val(rng)), 0.0, kAng);
  double last_lin = lin.x;
  double last_ang = ang.x;
  for (int f = 1; f < 5000; ++f) {
    const double t = f / 30.0;
    std::optional<double> z;
    if (have(rng)) z = val(rng);
    lin = step(lin, z, t, keep);
    ang = step(ang, z, t, keep, kAng);
    if (z) {
      last_lin = *z;
      last_ang = wrap_angle(*z);
    }
    ASSERT_EQ(lin.x, last_lin) << f;
    ASSERT_EQ(ang.x, last_ang) << f;
    ASSERT_EQ(lin.v, 0.0);
  }
}

TEST(GhStep, FrozenFilterIgnoresObservations) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> noise(0.0, 50.0);
  GHState s = init(12.5, 0.0);
  for (int f = 1; f < 1000; ++f) {
    s = step(s, noise(rng), f / 30.0, GHParams{0.0, 0.0});
    ASSERT_EQ(s.x, 12.5);
  }
}

TEST(GhStep, NoiseFreeConstantVelocityConverges) {
  // unit velocity per frame at 30 fps
  const double fps = 30.0;
  const GHParams p{0.5, 0.02};
  // tracking error obeys e[k+1] = (2-g-h) e[k] - (1-g) e[k-1]; dominant root
  const double b = 2.0 - p.g - p.h;
  const double lambda = 0.5 * (b + std::sqrt(b * b - 4.0 * (1.0 - p.g)));
  GHState s = init(0.0, 0.0);
  const double initial = std::abs(1.0 - predict(s, 1.0 / fps).x);
  std::vector<double> residual(401, initial);
  for (int f = 1; f <= 400; ++f) {
    const double t = f / fps;
    const double z = static_cast<double>(f);
    residual[f] = std::abs(z - predict(s, t).x);
    s = update(s, z, t, p);
  }
  EXPECT_NEAR(residual[300] / residual[299], lambda, 1e-6);
  EXPECT_LT(residual[200], 1e-3 * initial);
  EXPECT_LT(residual[400], 1e-6 * initial);
}

TEST(GhStep, AngularEquivariance) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> obs(-180.0, 180.0);
  std::bernoulli_distribution have(0.6);
  const GHParams p{0.5, 0.02};
  for (double offset : {37.0, -123.5, 180.0, 90.25}) {
    GHState a = init(20.0, 0.0, kAng);
    GHState b = init(wrap_angle(20.0 + offset), 0.0, kAng);
    for (int f = 1; f < 500; ++f) {
      const double t = f / 30.0;
      std::optional<double> za, zb;
      if (have(rng)) {
        za = obs(rng);
        zb = wrap_angle(*za + offset);
      }
      a = step(a, za, t, p, kAng);
      b = step(b, zb, t, p, kAng);
      ASSERT_NEAR(angular_diff(b.x, wrap_angle(a.x + offset)), 0.0, 1e-6) << f;
      ASSERT_NEAR(a.v, b.v, 1e-6);
    }
  }
}

TEST(GhStep, ReducesVarianceOfConstantSignal) {
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> noise(0.0, 1.0);
  const GHParams p{0.5, 0.02};
  GHState s = init(noise(rng), 0.0);
  double in_sum = 0, in_sq = 0, out_sum = 0, out_sq = 0;
  int n = 0;
  for (int f = 1; f <= 10000; ++f) {
    const double z = noise(rng);
    s = update(s, z, f / 30.0, p);
    if (f <= 100) continue;  // transient
    in_sum += z;
    in_sq += z * z;
    out_sum += s.x;
    out_sq += s.x * s.x;
    ++n;
  }
  const double in_var = in_sq / n - (in_sum / n) * (in_sum / n);
  const double out_var = out_sq / n - (out_sum / n) * (out_sum / n);
  EXPECT_LT(out_var / in_var, 0.5);
}

TEST(GhPredict, PerFrameEqualsOneGap) {
  for (Domain d : {Domain::linear, kAng}) {
    GHState start{100.0, 37.0, 0.0};
    if (d == kAng) start.x = 100.0;
    GHState stepped = start;
    for (int f = 1; f <= 4; ++f) stepped = predict(stepped, f / 30.0, d);
    const GHState jumped = predict(start, 4 / 30.0, d);
    EXPECT_NEAR(stepped.x, jumped.x, 1e-9);
    EXPECT_EQ(stepped.v, jumped.v);
    EXPECT_EQ(stepped.last_time, jumped.last_time);

    const GHState a = update(stepped, 50.0, 5 / 30.0, GHParams{}, d);
    const GHState b = update(jumped, 50.0, 5 / 30.0, GHParams{}, d);
    EXPECT_NEAR(a.x, b.x, 1e-9);
    EXPECT_NEAR(a.v, b.v, 1e-9);
  }
}

TEST(GhPoint, AxesAreIndependent) {
  const PointGHState s = init(Point2{0.0, 100.0}, 0.0);
  const PointGHState out = update(s, Point2{10.0, 100.0}, 1.0, GHParams{0.5, 0.02});
  EXPECT_EQ(out.u.x, 5.0);
  EXPECT_EQ(out.u.v, 0.2);
  EXPECT_EQ(out.v.x, 100.0);
  EXPECT_EQ(out.v.v, 0.0);
  EXPECT_EQ(step(out, std::nullopt, 2.0, GHParams{}), predict(out, 2.0));
}

}  // namespace
}  // namespace detta::gh
