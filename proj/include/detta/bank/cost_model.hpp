#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "detta/bank/schedule.hpp"

namespace detta::bank {

/// Declared per-frame pipeline overhead and per-invocation module cost, in seconds.
struct CostModel {
  double fixed_per_frame = 0.0;
  std::map<AnalysisModule, double> per_call;

  double call_cost(AnalysisModule m) const;
  void validate() const;

  friend bool operator==(const CostModel&, const CostModel&) = default;
};

/// Seconds charged for one frame: overhead plus every module scheduled on it.
double account_cost(FrameIndex frame, const FreeFlightConfig& config, const CostModel& cost);

/// Closed-form rate for one module of cost c at stride s on top of overhead f:
/// 1 / (f + c/s). Infinite when the denominator is zero.
double analytic_hz(double fixed_per_frame, double per_call, std::int64_t stride);

/// (f + c) / (f + c/s).
double analytic_speedup(double fixed_per_frame, double per_call, std::int64_t stride);

struct ThroughputSummary {
  std::int64_t frames = 0;
  double total_seconds = 0.0;
  double effective_hz = 0.0;  // +inf when nothing was charged
  // Present only when a single module carries cost.
  std::optional<double> analytic_hz;
  std::optional<double> analytic_speedup;
};

/// Accumulates per-frame charges over a run.
class ThroughputMeter {
 public:
  ThroughputMeter(FreeFlightConfig config, CostModel cost);

  /// Charges one frame and returns the amount charged.
  double charge(FrameIndex frame);

  ThroughputSummary summarize_throughput(std::int64_t total_frames) const;

  std::int64_t frames() const { return frames_; }
  double total_seconds() const { return total_; }

 private:
  FreeFlightConfig config_;
  CostModel cost_;
  std::int64_t frames_ = 0;
  double total_ = 0.0;
};

}  // namespace detta::bank
