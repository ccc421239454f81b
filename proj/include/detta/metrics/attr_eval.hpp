#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "detta/core/crop_subject.hpp"
#include "detta/core/scenario.hpp"
#include "detta/metrics/clear.hpp"
#include "detta/metrics/orientation.hpp"

namespace detta::metrics {

struct ScoreSummary {
  std::size_t samples = 0;
  double mean_offset = 0.0;  // degrees or pixels
  double score = 0.0;        // PCO for the head channel, PCKh for joints
};

struct ChannelReport {
  std::string channel;  // channel name, or "skeleton" for all joints pooled
  ScoreSummary raw;
  ScoreSummary filtered;
};

/// One paired comparison point: the same (frame, person, channel) seen through
/// the raw observation and through the filter output of the matched track.
struct AttrSample {
  FrameIndex frame = 0;
  PersonId person = 0;
  TrackId track;
  Channel channel = Channel::head;
  double raw_error = 0.0;
  double filtered_error = 0.0;
  double head_size = 0.0;
  bool filter_observed = false;
};

struct AttrEvaluation {
  std::vector<ChannelReport> channels;
  std::vector<AttrSample> samples;

  /// Throws UndefinedMetric if the channel has no samples.
  const ChannelReport& report(std::string_view channel) const;
};

struct AttrEvalOptions {
  double pco_threshold = kPcoThresholdDeg;
  double crop_min_iou = kCropSubjectMinIou;
};

/// Scores raw observations and filtered outputs on ground-truth/track pairs
/// taken from the CLEAR correspondence. The raw value for a track is the
/// observation of the person its box covers, i.e. what the module would have
/// returned had it run on that frame. Only points where the ground truth is
/// visible and both a raw and a filtered value exist are scored, so both
/// rows are computed over identical samples.
///
/// Throws UndefinedMetric when no sample can be formed.
AttrEvaluation attr_eval(const Scenario& scenario, std::span<const Correspondence> correspondences,
                         const AttrEvalOptions& options = {});

/// Summaries for one channel name over a subset of samples.
ChannelReport summarize(std::string channel, std::span<const AttrSample> samples,
                        double pco_threshold = kPcoThresholdDeg);

}  // namespace detta::metrics
