#include "detta/metrics/keypoints.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "detta/core/errors.hpp"

namespace detta::metrics {

bool keypoint_correct(double error_px, double head_size) {
  if (!std::isfinite(head_size) || head_size <= 0.0) {
    throw DataError("PCKh needs a positive head size");
  }
  return error_px <= kPckhFraction * head_size;
}

PckhResult pckh(std::span<const KeypointSample> samples) {
  if (samples.empty()) throw UndefinedMetric("PCKh over zero keypoints");
  PckhResult r;
  std::array<std::size_t, kJointCount> correct{};
  std::size_t pooled_correct = 0;
  for (const KeypointSample& s : samples) {
    const std::size_t j = index_of(s.joint);
    ++r.counts[j];
    if (keypoint_correct(s.error_px, s.head_size)) {
      ++correct[j];
      ++pooled_correct;
    }
  }
  for (std::size_t j = 0; j < kJointCount; ++j) {
    if (r.counts[j] > 0) {
      r.per_joint[j] = static_cast<double>(correct[j]) / static_cast<double>(r.counts[j]);
    }
  }
  r.total = samples.size();
  r.pooled = static_cast<double>(pooled_correct) / static_cast<double>(r.total);
  return r;
}

PckhResult pckh(std::span<const SkeletonPair> pairs) {
  std::vector<KeypointSample> samples;
  for (const SkeletonPair& p : pairs) {
    for (JointName j : kAllJoints) {
      const GtJoint& gt = p.gt[index_of(j)];
      if (!gt.visible) continue;
      const auto& est = p.estimate[j];
      const double err = est ? distance(*est, gt.point) : std::numeric_limits<double>::infinity();
      samples.push_back({j, err, p.head_size});
    }
  }
  return pckh(samples);
}

}  // namespace detta::metrics
