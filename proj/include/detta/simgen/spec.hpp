#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "detta/core/types.hpp"

namespace detta::simgen {

struct VelocitySegment {
  std::int64_t frames = 0;
  double vx = 0.0;  // px/s
  double vy = 0.0;
};

struct AngularSegment {
  std::int64_t frames = 0;
  double rate = 0.0;  // deg/s
};

struct PersonSpec {
  PersonId id = 1;
  FrameIndex entry = 0;
  FrameIndex exit = 0;  // inclusive
  BBox start;           // box at the entry frame
  std::vector<VelocitySegment> motion;
  double head_initial = 0.0;
  std::vector<AngularSegment> head;

  std::int64_t lifetime() const { return exit - entry + 1; }
};

struct JointArticulation {
  double amplitude = 0.0;  // px
  double period = 1.0;     // s
};

struct SkeletonSpec {
  /// Joint position as fractions of the box (0,0 top-left, 1,1 bottom-right).
  std::array<Point2, kJointCount> layout{};
  std::array<JointArticulation, kJointCount> articulation{};
  /// Visible joints must stay within the box grown by this fraction of its size.
  double margin = 0.25;

  static SkeletonSpec standard();
};

struct NoiseSpec {
  double det_miss_prob = 0.0;
  double det_fp_rate = 0.0;  // expected false boxes per frame
  double det_center_sigma = 0.0;
  double det_size_sigma = 0.0;

  double head_sigma = 0.0;  // deg
  double head_outlier_prob = 0.0;

  std::array<double, kJointCount> joint_sigma{};    // px
  std::array<double, kJointCount> joint_dropout{};  // probability

  static NoiseSpec none() { return {}; }
};

struct ScenarioSpec {
  std::string name = "custom";
  double fps = 30.0;
  FrameIndex frames = 0;
  double image_width = 640.0;
  double image_height = 480.0;
  SkeletonSpec skeleton = SkeletonSpec::standard();
  NoiseSpec noise;
  std::vector<PersonSpec> persons;

  /// Throws ValidationError naming the offending person and segment.
  void validate() const;
};

}  // namespace detta::simgen
