#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "detta/core/scenario.hpp"
#include "detta/metrics/attr_eval.hpp"
#include "detta/pipeline/run_config.hpp"

namespace detta::pipeline {

struct SweepCell {
  double g = 0.0;
  double h = 0.0;
  metrics::ScoreSummary filtered;
  bool best = false;
};

struct SweepResult {
  std::string channel;
  metrics::ScoreSummary raw;
  std::vector<SweepCell> cells;  // g-major grid order
  std::size_t best_index = 0;
};

/// Scores the selected channel(s) for every (g, h) in the grid; the other
/// channels keep the base config's gains. The best cell has the highest
/// score, then the lowest mean offset, then comes first in grid order.
/// Throws ValidationError for an empty grid or gains outside their ranges.
SweepResult sweep(const Scenario& input, std::string_view channel, std::span<const double> g_grid,
                  std::span<const double> h_grid, const RunConfig& base);

struct FreeflightRow {
  std::int64_t stride = 1;
  metrics::ScoreSummary keep;
  metrics::ScoreSummary predict;
  double model_hz = 0.0;
  double measured_hz = 0.0;
};

struct FreeflightTable {
  std::string channel;
  std::vector<FreeflightRow> rows;
};

inline constexpr std::int64_t kDefaultStrides[] = {1, 2, 3, 5};

/// For each stride, runs the selected channel's module at that stride twice
/// over the same schedule: once holding the last observation (g=1, h=0) and
/// once with the base config's gains. Only that module is charged to the
/// cost model.
FreeflightTable freeflight(const Scenario& input, std::string_view channel,
                           std::span<const std::int64_t> strides, const bank::CostModel& cost,
                           const RunConfig& base);

}  // namespace detta::pipeline
