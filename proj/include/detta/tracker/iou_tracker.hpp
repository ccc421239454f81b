#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "detta/core/types.hpp"

namespace detta::tracker {

struct TrackerOptions {
  double iou_threshold = 0.3;  // minimum IoU for a detection to continue a track
  int confirm_hits = 2;        // consecutive hits before a track is reported
  int kill_misses = 5;         // a confirmed track dies once it misses more frames than this

  void validate() const;

  friend bool operator==(const TrackerOptions&, const TrackerOptions&) = default;
};

enum class TrackStatus { tentative, confirmed, dead };

struct TrackState {
  TrackId id;
  BBox bbox;
  int hits = 0;
  int misses = 0;
  TrackStatus status = TrackStatus::tentative;
};

struct Association {
  std::vector<std::pair<std::size_t, std::size_t>> matches;  // (track, detection)
  std::vector<std::size_t> unmatched_tracks;
  std::vector<std::size_t> unmatched_detections;
};

/// Optimal one-to-one matching of tracks to detections that maximizes the
/// summed IoU over pairs with IoU >= iou_threshold.
Association associate(std::span<const TrackState> tracks, std::span<const BBox> detections,
                      double iou_threshold);

struct TrackOutput {
  TrackId id;
  BBox bbox;

  friend bool operator==(const TrackOutput&, const TrackOutput&) = default;
};

/// Online tracker associating detections against each track's last box.
class IouTracker {
 public:
  explicit IouTracker(TrackerOptions options = {});

  /// Consumes one frame of detections and returns the confirmed tracks that
  /// were matched on this frame, ordered by id. Frames must strictly increase.
  std::vector<TrackOutput> tick(FrameIndex frame, std::span<const BBox> detections);

  const std::vector<TrackState>& tracks() const { return tracks_; }
  const TrackerOptions& options() const { return options_; }

 private:
  TrackerOptions options_;
  std::vector<TrackState> tracks_;
  std::uint64_t next_id_ = 1;
  std::optional<FrameIndex> last_frame_;
};

}  // namespace detta::tracker
