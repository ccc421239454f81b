#include "detta/pipeline/experiments.hpp"

#include <cmath>
#include <string>

#include "detta/core/errors.hpp"
#include "detta/pipeline/pipeline.hpp"

namespace detta::pipeline {

namespace {

// Scenario with tracks attached plus the CLEAR correspondence, shared by all
// configurations of an experiment.
struct Prepared {
  Scenario scenario;
  std::vector<metrics::Correspondence> correspondences;
};

Prepared prepare(const Scenario& input, const RunConfig& config) {
  config.validate();
  if (input.frame_count <= 0) throw ValidationError("scenario has no frames to run");
  Prepared p;
  p.scenario = input;
  p.scenario.attribute_outputs.clear();
  p.scenario.tracks = run_tracking(input, config.tracker);
  p.correspondences = metrics::clear(p.scenario, config.eval.clear_iou_threshold).correspondences;
  return p;
}

metrics::ChannelReport score_selection(Prepared& p, const ChannelSelection& selection,
                                       const bank::ChannelParams& params,
                                       const bank::FreeFlightConfig& schedule,
                                       const bank::CostModel& cost, const RunConfig& config,
                                       bank::ThroughputSummary* throughput = nullptr) {
  FilteringResult r = run_filtering(p.scenario, params, schedule, cost, config.bank,
                                    config.eval.attributes.crop_min_iou);
  if (throughput != nullptr) *throughput = r.cost;
  p.scenario.attribute_outputs = std::move(r.outputs);
  const auto eval = metrics::attr_eval(p.scenario, p.correspondences, config.eval.attributes);
  return eval.report(selection.name);
}

}  // namespace

SweepResult sweep(const Scenario& input, std::string_view channel, std::span<const double> g_grid,
                  std::span<const double> h_grid, const RunConfig& base) {
  if (g_grid.empty() || h_grid.empty()) throw ValidationError("sweep grids must not be empty");
  for (double g : g_grid) {
    if (!(g >= 0.0 && g <= 1.0)) throw ValidationError("sweep: g=" + std::to_string(g) + " outside [0, 1]");
  }
  for (double h : h_grid) {
    if (!(h >= 0.0) || !std::isfinite(h)) {
      throw ValidationError("sweep: h=" + std::to_string(h) + " must be a non-negative number");
    }
  }
  const ChannelSelection selection = select_channels(channel);
  Prepared prepared = prepare(input, base);

  SweepResult result;
  result.channel = selection.name;
  for (double g : g_grid) {
    for (double h : h_grid) {
      bank::ChannelParams params = base.channel_params;
      for (Channel c : selection.channels) params.set(c, {g, h});
      const auto report =
          score_selection(prepared, selection, params, base.schedule, base.cost_model, base);
      result.raw = report.raw;
      result.cells.push_back({g, h, report.filtered, false});
    }
  }
  for (std::size_t i = 1; i < result.cells.size(); ++i) {
    const auto& cand = result.cells[i].filtered;
    const auto& best = result.cells[result.best_index].filtered;
    if (cand.score > best.score || (cand.score == best.score && cand.mean_offset < best.mean_offset)) {
      result.best_index = i;
    }
  }
  result.cells[result.best_index].best = true;
  return result;
}

FreeflightTable freeflight(const Scenario& input, std::string_view channel,
                           std::span<const std::int64_t> strides, const bank::CostModel& cost,
                           const RunConfig& base) {
  if (strides.empty()) throw ValidationError("freeflight needs at least one stride");
  for (std::int64_t s : strides) {
    if (s < 1) throw ValidationError("freeflight: stride " + std::to_string(s) + " must be >= 1");
  }
  cost.validate();
  const ChannelSelection selection = select_channels(channel);
  Prepared prepared = prepare(input, base);

  bank::CostModel charged;
  charged.fixed_per_frame = cost.fixed_per_frame;
  charged.per_call[selection.module] = cost.call_cost(selection.module);

  bank::ChannelParams keep = base.channel_params;
  for (Channel c : selection.channels) keep.set(c, {1.0, 0.0});

  FreeflightTable table;
  table.channel = selection.name;
  for (std::int64_t stride : strides) {
    bank::FreeFlightConfig schedule = base.schedule;
    schedule.set(selection.module, stride);

    FreeflightRow row;
    row.stride = stride;
    bank::ThroughputSummary throughput;
    row.keep = score_selection(prepared, selection, keep, schedule, charged, base).filtered;
    row.predict = score_selection(prepared, selection, base.channel_params, schedule, charged, base,
                                  &throughput)
                      .filtered;
    row.model_hz = bank::analytic_hz(charged.fixed_per_frame, charged.call_cost(selection.module),
                                     stride);
    row.measured_hz = throughput.effective_hz;
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace detta::pipeline
