#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "detta/core/types.hpp"

namespace detta {

struct DetectionRecord {
  FrameIndex frame = 0;
  BBox bbox;

  friend bool operator==(const DetectionRecord&, const DetectionRecord&) = default;
};

struct HeadObservationRecord {
  FrameIndex frame = 0;
  PersonId person_id = 0;
  HeadOrientation orientation;

  friend bool operator==(const HeadObservationRecord&, const HeadObservationRecord&) = default;
};

struct SkeletonObservationRecord {
  FrameIndex frame = 0;
  PersonId person_id = 0;
  SkeletonObservation skeleton;

  friend bool operator==(const SkeletonObservationRecord&,
                         const SkeletonObservationRecord&) = default;
};

struct TrackRecord {
  FrameIndex frame = 0;
  TrackId track_id;
  BBox bbox;

  friend bool operator==(const TrackRecord&, const TrackRecord&) = default;
};

/// One filtered attribute value for one (track, channel) at one frame.
/// Angular channels use value[0] only; joints use (u, v).
struct AttributeOutputRecord {
  FrameIndex frame = 0;
  TrackId track_id;
  Channel channel = Channel::head;
  std::array<double, 2> value{};
  bool observed = false;

  friend bool operator==(const AttributeOutputRecord&, const AttributeOutputRecord&) = default;
};

/// A complete scenario stream. Every record vector is ordered by frame.
struct Scenario {
  double fps = 30.0;
  FrameIndex frame_count = 0;

  std::vector<GroundTruthRecord> gt;
  std::vector<DetectionRecord> detections;
  std::vector<HeadObservationRecord> head_observations;
  std::vector<SkeletonObservationRecord> skeleton_observations;
  std::vector<TrackRecord> tracks;
  std::vector<AttributeOutputRecord> attribute_outputs;

  FrameStamp stamp(FrameIndex frame) const {
    return {frame, static_cast<double>(frame) / fps};
  }

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

inline constexpr int kScenarioFormatVersion = 1;

void write_scenario(const Scenario& scenario, std::ostream& out);
void write_scenario(const Scenario& scenario, const std::filesystem::path& path);

/// Throws ParseError (with the offending line number) on malformed records
/// and UnsupportedVersion on a header from another format version.
Scenario read_scenario(std::istream& in);
Scenario read_scenario(const std::filesystem::path& path);

/// Random access to a scenario's records grouped by frame. Holds pointers
/// into the scenario, which must outlive the index.
class ScenarioIndex {
 public:
  explicit ScenarioIndex(const Scenario& scenario);

  const std::vector<const GroundTruthRecord*>& gt(FrameIndex f) const { return gt_[slot(f)]; }
  const std::vector<const DetectionRecord*>& detections(FrameIndex f) const {
    return det_[slot(f)];
  }
  const std::vector<const HeadObservationRecord*>& head_observations(FrameIndex f) const {
    return head_[slot(f)];
  }
  const std::vector<const SkeletonObservationRecord*>& skeleton_observations(FrameIndex f) const {
    return skel_[slot(f)];
  }
  const std::vector<const TrackRecord*>& tracks(FrameIndex f) const { return trk_[slot(f)]; }
  const std::vector<const AttributeOutputRecord*>& attribute_outputs(FrameIndex f) const {
    return attr_[slot(f)];
  }

  FrameIndex frame_count() const { return static_cast<FrameIndex>(gt_.size()); }

 private:
  std::size_t slot(FrameIndex f) const;

  std::vector<std::vector<const GroundTruthRecord*>> gt_;
  std::vector<std::vector<const DetectionRecord*>> det_;
  std::vector<std::vector<const HeadObservationRecord*>> head_;
  std::vector<std::vector<const SkeletonObservationRecord*>> skel_;
  std::vector<std::vector<const TrackRecord*>> trk_;
  std::vector<std::vector<const AttributeOutputRecord*>> attr_;
};

}  // namespace detta
