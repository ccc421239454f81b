#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "detta/core/scenario.hpp"

namespace detta::metrics {

inline constexpr double kClearIouThreshold = 0.5;

/// One labelled box in either the ground-truth or the hypothesis stream.
struct LabelledBox {
  FrameIndex frame = 0;
  std::uint64_t id = 0;
  BBox bbox;
};

struct Correspondence {
  FrameIndex frame = 0;
  PersonId gt_id = 0;
  TrackId track_id;
  double iou = 0.0;

  friend bool operator==(const Correspondence&, const Correspondence&) = default;
};

struct ClearReport {
  double mota = 0.0;
  double motp = 0.0;  // mean IoU over matches
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t ids = 0;
  std::size_t matches = 0;
  std::size_t total_gt = 0;
  double ids_rate = 0.0;  // ids / total_gt
};

struct ClearResult {
  ClearReport report;
  std::vector<Correspondence> correspondences;  // ordered by (frame, gt_id)
};

/// CLEAR MOT evaluation. Per frame, last frame's correspondences are kept
/// while their IoU stays >= iou_threshold; the rest are matched by an
/// IoU-maximizing assignment. A ground-truth object matched to a hypothesis
/// other than the one it was last matched to counts as an ID switch.
///
/// Throws DataError for records outside [0, frame_count) or duplicate ids
/// within a frame, UndefinedMetric when there are no ground-truth boxes.
ClearResult clear(std::span<const LabelledBox> gt, std::span<const LabelledBox> hyp,
                  FrameIndex frame_count, double iou_threshold = kClearIouThreshold);

/// Convenience over a scenario's gt and trk records.
ClearResult clear(const Scenario& scenario, double iou_threshold = kClearIouThreshold);

}  // namespace detta::metrics
