#include "detta/pipeline/pipeline.hpp"

#include <chrono>
#include <limits>

#include "detta/core/crop_subject.hpp"
#include "detta/core/errors.hpp"

namespace detta::pipeline {

ChannelSelection select_channels(std::string_view name) {
  ChannelSelection s;
  s.name = std::string(name);
  if (name == "skeleton") {
    for (JointName j : kAllJoints) s.channels.push_back(channel_for(j));
    s.module = bank::AnalysisModule::skeleton;
    return s;
  }
  const auto channel = parse_channel(name);
  if (!channel) {
    throw ConfigError("unknown channel '" + std::string(name) +
                      "' (expected head, skeleton or skel.<joint>)");
  }
  s.channels = {*channel};
  s.module = bank::module_of(*channel);
  return s;
}

std::vector<TrackRecord> run_tracking(const Scenario& scenario,
                                      const tracker::TrackerOptions& options) {
  const ScenarioIndex index(scenario);
  tracker::IouTracker tracker(options);
  std::vector<TrackRecord> out;
  std::vector<BBox> boxes;
  for (FrameIndex f = 0; f < scenario.frame_count; ++f) {
    boxes.clear();
    for (const DetectionRecord* d : index.detections(f)) boxes.push_back(d->bbox);
    for (const tracker::TrackOutput& t : tracker.tick(f, boxes)) out.push_back({f, t.id, t.bbox});
  }
  return out;
}

FilteringResult run_filtering(const Scenario& tracked, const bank::ChannelParams& params,
                              const bank::FreeFlightConfig& schedule,
                              const bank::CostModel& cost, const bank::BankOptions& options,
                              double crop_min_iou) {
  const ScenarioIndex index(tracked);
  bank::FilterBank filters(params, schedule, options);
  bank::ThroughputMeter meter(schedule, cost);
  FilteringResult result;

  std::vector<bank::LiveTrack> live;
  std::vector<bank::TrackObservations> observations;
  for (FrameIndex f = 0; f < tracked.frame_count; ++f) {
    live.clear();
    observations.clear();
    const auto& people = index.gt(f);
    for (const TrackRecord* t : index.tracks(f)) {
      live.push_back({t->track_id, t->bbox});
      const auto subject = crop_subject(t->bbox, people, crop_min_iou);
      if (!subject) continue;
      bank::TrackObservations obs{t->track_id, std::nullopt, std::nullopt};
      for (const HeadObservationRecord* o : index.head_observations(f)) {
        if (o->person_id == *subject) obs.head = o->orientation;
      }
      for (const SkeletonObservationRecord* o : index.skeleton_observations(f)) {
        if (o->person_id == *subject) obs.skeleton = o->skeleton;
      }
      if (obs.head || obs.skeleton) observations.push_back(obs);
    }

    const bank::FrameResult frame = filters.on_frame(tracked.stamp(f), live, observations);
    for (const bank::FilterOutput& o : frame.outputs) {
      result.outputs.push_back({f, o.key.track_id, o.key.channel, o.value, o.observed});
    }
    meter.charge(f);
  }
  result.dropped = filters.dropped_observations();
  result.cost = meter.summarize_throughput(tracked.frame_count);
  return result;
}

RunResult run_pipeline(const Scenario& input, const RunConfig& config, bool wall_clock) {
  config.validate();
  if (input.frame_count <= 0) throw ValidationError("scenario has no frames to run");
  if (input.detections.empty()) throw ValidationError("scenario has no detection records to track");
  if (input.head_observations.empty() && input.skeleton_observations.empty()) {
    throw ValidationError("scenario has no analysis-module observations to filter");
  }

  const auto start = std::chrono::steady_clock::now();
  RunResult result;
  result.scenario = input;
  result.scenario.tracks = run_tracking(input, config.tracker);
  FilteringResult filtered =
      run_filtering(result.scenario, config.channel_params, config.schedule, config.cost_model,
                    config.bank, config.eval.attributes.crop_min_iou);
  const auto stop = std::chrono::steady_clock::now();

  result.scenario.attribute_outputs = std::move(filtered.outputs);
  result.cost = filtered.cost;
  result.dropped = filtered.dropped;
  if (wall_clock) {
    const double seconds = std::chrono::duration<double>(stop - start).count();
    result.wall_clock_hz = seconds > 0.0 ? static_cast<double>(input.frame_count) / seconds
                                         : std::numeric_limits<double>::infinity();
  }
  return result;
}

Evaluation evaluate(const Scenario& augmented, const EvalOptions& options) {
  if (augmented.tracks.empty()) throw DataError("scenario has no trk records; run it first");
  if (augmented.attribute_outputs.empty()) {
    throw DataError("scenario has no trk-attr records; run it first");
  }
  Evaluation e;
  e.clear = metrics::clear(augmented, options.clear_iou_threshold);
  e.attributes = metrics::attr_eval(augmented, e.clear.correspondences, options.attributes);
  return e;
}

}  // namespace detta::pipeline
