#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>

#include "detta/core/types.hpp"

namespace detta::metrics {

/// Fraction of the head size used as the correctness radius.
inline constexpr double kPckhFraction = 0.5;

/// error <= 0.5 * head_size. Throws DataError for a missing (non-positive) head size.
bool keypoint_correct(double error_px, double head_size);

struct KeypointSample {
  JointName joint = JointName::head;
  double error_px = 0.0;
  double head_size = 0.0;
};

struct PckhResult {
  std::array<std::optional<double>, kJointCount> per_joint{};
  std::array<std::size_t, kJointCount> counts{};
  double pooled = 0.0;
  std::size_t total = 0;
};

/// Per-joint and pooled PCKh. Throws UndefinedMetric when there are no samples.
PckhResult pckh(std::span<const KeypointSample> samples);

/// One frame's skeleton estimate paired with its ground truth.
struct SkeletonPair {
  SkeletonObservation estimate;
  std::array<GtJoint, kJointCount> gt{};
  double head_size = 0.0;
};

/// PCKh over paired skeletons. Invisible ground-truth joints are skipped;
/// a visible joint without an estimate counts as incorrect.
PckhResult pckh(std::span<const SkeletonPair> pairs);

}  // namespace detta::metrics
