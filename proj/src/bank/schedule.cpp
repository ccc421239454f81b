#include "detta/bank/schedule.hpp"

#include <string>

#include "detta/core/errors.hpp"

namespace detta::bank {

std::string_view to_string(AnalysisModule m) {
  return m == AnalysisModule::head ? "head" : "skeleton";
}

std::optional<AnalysisModule> parse_module(std::string_view name) {
  if (name == "head") return AnalysisModule::head;
  if (name == "skeleton") return AnalysisModule::skeleton;
  return std::nullopt;
}

std::int64_t default_phase(AnalysisModule m, std::int64_t stride) {
  if (stride < 1) throw ConfigError("stride must be >= 1");
  return static_cast<std::int64_t>(m) % stride;
}

FreeFlightConfig FreeFlightConfig::every_frame() { return uniform(1); }

FreeFlightConfig FreeFlightConfig::uniform(std::int64_t stride) {
  FreeFlightConfig config;
  for (AnalysisModule m : kAllModules) config.set(m, stride);
  return config;
}

void FreeFlightConfig::set(AnalysisModule m, std::int64_t stride) {
  set(m, stride, default_phase(m, stride));
}

void FreeFlightConfig::set(AnalysisModule m, std::int64_t stride, std::int64_t phase) {
  if (stride < 1) {
    throw ConfigError(std::string(to_string(m)) + ": stride must be >= 1, got " +
                      std::to_string(stride));
  }
  if (phase < 0 || phase >= stride) {
    throw ConfigError(std::string(to_string(m)) + ": phase must lie in [0, stride), got " +
                      std::to_string(phase));
  }
  modules_[m] = {stride, phase};
}

const ModuleSchedule& FreeFlightConfig::at(AnalysisModule m) const {
  auto it = modules_.find(m);
  if (it == modules_.end()) {
    throw ConfigError("no schedule for analysis module '" + std::string(to_string(m)) + "'");
  }
  return it->second;
}

bool should_observe(AnalysisModule m, FrameIndex frame, const FreeFlightConfig& config) {
  if (frame < 0) throw InvalidArgument("should_observe: negative frame index");
  const ModuleSchedule& s = config.at(m);
  return frame % s.stride == s.phase;
}

std::int64_t scheduled_count(AnalysisModule m, FrameIndex frame_count,
                             const FreeFlightConfig& config) {
  const ModuleSchedule& s = config.at(m);
  if (frame_count <= s.phase) return 0;
  return (frame_count - s.phase + s.stride - 1) / s.stride;
}

}  // namespace detta::bank
