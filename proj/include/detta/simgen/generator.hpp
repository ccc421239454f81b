#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "detta/core/scenario.hpp"
#include "detta/simgen/spec.hpp"

namespace detta::simgen {

/// Ground-truth state of one person at one frame, before quantization.
struct PersonFrame {
  FrameIndex frame = 0;
  BBox bbox;
  double head_theta = 0.0;
  std::array<Point2, kJointCount> joints{};
};

/// Integrates a person's motion and attribute trajectories over its lifetime.
std::vector<PersonFrame> person_trajectory(const PersonSpec& person, const ScenarioSpec& spec);

/// Builds a fully populated scenario: ground truth for every live person and
/// frame, emulated detections, and one head and one skeleton observation per
/// (frame, person). Deterministic in (spec, seed).
Scenario generate(const ScenarioSpec& spec, std::uint64_t seed);

/// Built-in specs: "single-walker", "crossing-pair", "deboarding-77",
/// "turning-heads". Throws ConfigError for unknown names.
ScenarioSpec preset(std::string_view name);

std::vector<std::string_view> preset_names();

/// Same spec with every noise source switched off.
ScenarioSpec without_noise(ScenarioSpec spec);

}  // namespace detta::simgen
