#include "detta/tracker/iou_tracker.hpp"

#include <algorithm>
#include <string>

#include "detta/core/assignment.hpp"
#include "detta/core/errors.hpp"

namespace detta::tracker {

void TrackerOptions::validate() const {
  if (!(iou_threshold > 0.0 && iou_threshold <= 1.0)) {
    throw ConfigError("tracker: iou_threshold must lie in (0, 1]");
  }
  if (confirm_hits < 1) throw ConfigError("tracker: confirm_hits must be >= 1");
  if (kill_misses < 0) throw ConfigError("tracker: kill_misses must be >= 0");
}

Association associate(std::span<const TrackState> tracks, std::span<const BBox> detections,
                      double iou_threshold) {
  Association out;
  WeightMatrix w(tracks.size(), detections.size());
  for (std::size_t i = 0; i < tracks.size(); ++i) {
    for (std::size_t j = 0; j < detections.size(); ++j) {
      w.at(i, j) = iou(tracks[i].bbox, detections[j]);
    }
  }
  out.matches = max_weight_assignment(w, iou_threshold);

  std::vector<bool> track_used(tracks.size(), false), det_used(detections.size(), false);
  for (const auto& [t, d] : out.matches) {
    track_used[t] = true;
    det_used[d] = true;
  }
  for (std::size_t i = 0; i < tracks.size(); ++i) {
    if (!track_used[i]) out.unmatched_tracks.push_back(i);
  }
  for (std::size_t j = 0; j < detections.size(); ++j) {
    if (!det_used[j]) out.unmatched_detections.push_back(j);
  }
  return out;
}

IouTracker::IouTracker(TrackerOptions options) : options_(options) { options_.validate(); }

std::vector<TrackOutput> IouTracker::tick(FrameIndex frame, std::span<const BBox> detections) {
  if (last_frame_ && frame <= *last_frame_) {
    throw TimeRegression("tracker: frame " + std::to_string(frame) +
                         " arrived after frame " + std::to_string(*last_frame_));
  }
  last_frame_ = frame;

  const Association a = associate(tracks_, detections, options_.iou_threshold);

  for (const auto& [t, d] : a.matches) {
    TrackState& track = tracks_[t];
    track.bbox = detections[d];
    ++track.hits;
    track.misses = 0;
    if (track.status == TrackStatus::tentative && track.hits >= options_.confirm_hits) {
      track.status = TrackStatus::confirmed;
    }
  }
  for (std::size_t t : a.unmatched_tracks) {
    TrackState& track = tracks_[t];
    ++track.misses;
    if (track.status == TrackStatus::tentative || track.misses > options_.kill_misses) {
      track.status = TrackStatus::dead;
    }
  }
  for (std::size_t d : a.unmatched_detections) {
    TrackState track;
    track.id = TrackId{next_id_++};
    track.bbox = detections[d];
    track.hits = 1;
    track.status = options_.confirm_hits <= 1 ? TrackStatus::confirmed : TrackStatus::tentative;
    tracks_.push_back(track);
  }

  std::erase_if(tracks_, [](const TrackState& t) { return t.status == TrackStatus::dead; });

  std::vector<TrackOutput> out;
  for (const TrackState& t : tracks_) {
    if (t.status == TrackStatus::confirmed && t.misses == 0) out.push_back({t.id, t.bbox});
  }
  std::sort(out.begin(), out.end(),
            [](const TrackOutput& a, const TrackOutput& b) { return a.id < b.id; });
  return out;
}

}  // namespace detta::tracker
