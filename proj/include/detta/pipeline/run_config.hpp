#pragma once

#include <cstdint>
#include <filesystem>

#include <nlohmann/json.hpp>

#include "detta/bank/channel_params.hpp"
#include "detta/bank/cost_model.hpp"
#include "detta/bank/filter_bank.hpp"
#include "detta/bank/schedule.hpp"
#include "detta/metrics/attr_eval.hpp"
#include "detta/tracker/iou_tracker.hpp"

namespace detta::pipeline {

struct EvalOptions {
  double clear_iou_threshold = metrics::kClearIouThreshold;
  metrics::AttrEvalOptions attributes;
};

/// Everything a run depends on besides the scenario itself.
struct RunConfig {
  std::uint64_t seed = 1;
  bank::ChannelParams channel_params;
  bank::FreeFlightConfig schedule = bank::FreeFlightConfig::every_frame();
  bank::CostModel cost_model = default_cost_model();
  tracker::TrackerOptions tracker;
  bank::BankOptions bank;
  EvalOptions eval;

  /// 1 ms pipeline overhead, 9 ms per analysis-module call.
  static bank::CostModel default_cost_model();

  /// Throws ConfigError on any invalid field.
  void validate() const;
};

nlohmann::json to_json(const RunConfig& config);

/// Missing keys keep their defaults. Throws ConfigError on bad values.
RunConfig run_config_from_json(const nlohmann::json& j);

RunConfig load_run_config(const std::filesystem::path& path);

}  // namespace detta::pipeline
