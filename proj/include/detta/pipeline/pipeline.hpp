#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "detta/core/scenario.hpp"
#include "detta/metrics/attr_eval.hpp"
#include "detta/metrics/clear.hpp"
#include "detta/pipeline/run_config.hpp"

namespace detta::pipeline {

/// A named group of channels scored together: "head", a single joint
/// ("skel.l_wrist") or "skeleton" for all joints pooled.
struct ChannelSelection {
  std::string name;
  std::vector<Channel> channels;
  bank::AnalysisModule module = bank::AnalysisModule::head;
};

/// Throws ConfigError for unknown names.
ChannelSelection select_channels(std::string_view name);

/// Runs the tracker over the scenario's detections.
std::vector<TrackRecord> run_tracking(const Scenario& scenario,
                                      const tracker::TrackerOptions& options);

struct FilteringResult {
  std::vector<AttributeOutputRecord> outputs;
  bank::ThroughputSummary cost;
  std::size_t dropped = 0;
};

/// Feeds the scenario's track records and the observations their boxes cover
/// through a filter bank, charging the cost model frame by frame.
FilteringResult run_filtering(const Scenario& tracked, const bank::ChannelParams& params,
                              const bank::FreeFlightConfig& schedule,
                              const bank::CostModel& cost, const bank::BankOptions& options,
                              double crop_min_iou = kCropSubjectMinIou);

struct RunResult {
  Scenario scenario;  // input plus fresh trk and trk-attr records
  bank::ThroughputSummary cost;
  std::size_t dropped = 0;
  std::optional<double> wall_clock_hz;
};

/// Tracking followed by filtering. Existing trk/trk-attr records are replaced.
/// Throws ValidationError when the scenario cannot drive a run.
RunResult run_pipeline(const Scenario& input, const RunConfig& config, bool wall_clock = false);

struct Evaluation {
  metrics::ClearResult clear;
  metrics::AttrEvaluation attributes;
};

/// Throws DataError when the scenario carries no trk or trk-attr records.
Evaluation evaluate(const Scenario& augmented, const EvalOptions& options = {});

}  // namespace detta::pipeline
