#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>

#include "detta/core/types.hpp"

namespace detta::bank {

/// The expensive per-person analysis modules whose invocations are scheduled.
enum class AnalysisModule : std::uint8_t { head, skeleton };

inline constexpr std::array<AnalysisModule, 2> kAllModules = {AnalysisModule::head,
                                                              AnalysisModule::skeleton};

std::string_view to_string(AnalysisModule m);
std::optional<AnalysisModule> parse_module(std::string_view name);

/// Which module produces the observations for a channel.
constexpr AnalysisModule module_of(Channel c) {
  return is_angular(c) ? AnalysisModule::head : AnalysisModule::skeleton;
}

struct ModuleSchedule {
  std::int64_t stride = 1;
  std::int64_t phase = 0;

  friend bool operator==(const ModuleSchedule&, const ModuleSchedule&) = default;
};

/// Free-flight schedule: module m runs on frames where frame % stride == phase.
class FreeFlightConfig {
 public:
  /// Every known module at stride 1.
  static FreeFlightConfig every_frame();

  /// All modules at the same stride with staggered phases.
  static FreeFlightConfig uniform(std::int64_t stride);

  /// Sets a module's stride with the staggered default phase
  /// (module index mod stride).
  void set(AnalysisModule m, std::int64_t stride);
  void set(AnalysisModule m, std::int64_t stride, std::int64_t phase);

  bool contains(AnalysisModule m) const { return modules_.count(m) != 0; }

  /// Throws ConfigError for a module without a schedule.
  const ModuleSchedule& at(AnalysisModule m) const;

  const std::map<AnalysisModule, ModuleSchedule>& modules() const { return modules_; }

  friend bool operator==(const FreeFlightConfig&, const FreeFlightConfig&) = default;

 private:
  std::map<AnalysisModule, ModuleSchedule> modules_;
};

std::int64_t default_phase(AnalysisModule m, std::int64_t stride);

bool should_observe(AnalysisModule m, FrameIndex frame, const FreeFlightConfig& config);

/// Number of frames in [0, frame_count) on which module m runs.
std::int64_t scheduled_count(AnalysisModule m, FrameIndex frame_count,
                             const FreeFlightConfig& config);

}  // namespace detta::bank
