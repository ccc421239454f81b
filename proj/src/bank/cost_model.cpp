#include "detta/bank/cost_model.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "detta/core/errors.hpp"

namespace detta::bank {

double CostModel::call_cost(AnalysisModule m) const {
  auto it = per_call.find(m);
  return it == per_call.end() ? 0.0 : it->second;
}

void CostModel::validate() const {
  if (!std::isfinite(fixed_per_frame) || fixed_per_frame < 0.0) {
    throw ConfigError("cost model: fixed_per_frame must be a non-negative number");
  }
  for (const auto& [m, c] : per_call) {
    if (!std::isfinite(c) || c < 0.0) {
      throw ConfigError("cost model: per-call cost of '" + std::string(to_string(m)) +
                        "' must be a non-negative number");
    }
  }
}

double account_cost(FrameIndex frame, const FreeFlightConfig& config, const CostModel& cost) {
  double charge = cost.fixed_per_frame;
  for (const auto& [m, schedule] : config.modules()) {
    if (should_observe(m, frame, config)) charge += cost.call_cost(m);
  }
  return charge;
}

double analytic_hz(double fixed_per_frame, double per_call, std::int64_t stride) {
  if (stride < 1) throw ConfigError("stride must be >= 1");
  const double per_frame = fixed_per_frame + per_call / static_cast<double>(stride);
  if (per_frame <= 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / per_frame;
}

double analytic_speedup(double fixed_per_frame, double per_call, std::int64_t stride) {
  if (stride < 1) throw ConfigError("stride must be >= 1");
  const double per_frame = fixed_per_frame + per_call / static_cast<double>(stride);
  if (per_frame <= 0.0) return std::numeric_limits<double>::infinity();
  return (fixed_per_frame + per_call) / per_frame;
}

ThroughputMeter::ThroughputMeter(FreeFlightConfig config, CostModel cost)
    : config_(std::move(config)), cost_(std::move(cost)) {
  cost_.validate();
}

double ThroughputMeter::charge(FrameIndex frame) {
  const double c = account_cost(frame, config_, cost_);
  total_ += c;
  ++frames_;
  return c;
}

ThroughputSummary ThroughputMeter::summarize_throughput(std::int64_t total_frames) const {
  ThroughputSummary s;
  s.frames = total_frames;
  s.total_seconds = total_;
  s.effective_hz = total_ > 0.0 ? static_cast<double>(total_frames) / total_
                                : std::numeric_limits<double>::infinity();

  const AnalysisModule* costed = nullptr;
  int costed_count = 0;
  for (const auto& [m, schedule] : config_.modules()) {
    if (cost_.call_cost(m) > 0.0) {
      costed = &m;
      ++costed_count;
    }
  }
  if (costed_count == 1) {
    const double c = cost_.call_cost(*costed);
    const std::int64_t stride = config_.at(*costed).stride;
    s.analytic_hz = analytic_hz(cost_.fixed_per_frame, c, stride);
    s.analytic_speedup = analytic_speedup(cost_.fixed_per_frame, c, stride);
  }
  return s;
}

}  // namespace detta::bank
