#include "detta/metrics/attr_eval.hpp"

#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "detta/core/angles.hpp"
#include "detta/core/errors.hpp"
#include "detta/metrics/keypoints.hpp"

namespace detta::metrics {

namespace {

ScoreSummary score(std::span<const AttrSample> samples, bool filtered, double pco_threshold) {
  ScoreSummary s;
  s.samples = samples.size();
  if (samples.empty()) return s;
  std::vector<double> angular;
  std::vector<KeypointSample> keypoints;
  double sum = 0.0;
  for (const AttrSample& a : samples) {
    const double e = filtered ? a.filtered_error : a.raw_error;
    sum += e;
    if (const auto joint = joint_of(a.channel)) {
      keypoints.push_back({*joint, e, a.head_size});
    } else {
      angular.push_back(e);
    }
  }
  s.mean_offset = sum / static_cast<double>(samples.size());
  if (!angular.empty() && !keypoints.empty()) {
    throw InvalidArgument("cannot pool angular and keypoint samples into one score");
  }
  s.score = angular.empty() ? pckh(keypoints).pooled : pco(angular, pco_threshold);
  return s;
}

}  // namespace

const ChannelReport& AttrEvaluation::report(std::string_view channel) const {
  for (const ChannelReport& r : channels) {
    if (r.channel == channel) return r;
  }
  throw UndefinedMetric("no samples for channel '" + std::string(channel) + "'");
}

ChannelReport summarize(std::string channel, std::span<const AttrSample> samples,
                        double pco_threshold) {
  ChannelReport r;
  r.channel = std::move(channel);
  r.raw = score(samples, false, pco_threshold);
  r.filtered = score(samples, true, pco_threshold);
  return r;
}

AttrEvaluation attr_eval(const Scenario& scenario, std::span<const Correspondence> correspondences,
                         const AttrEvalOptions& options) {
  const ScenarioIndex index(scenario);
  AttrEvaluation out;

  // Per-frame lookups, rebuilt when the correspondence stream moves on.
  FrameIndex current = -1;
  std::map<PersonId, const GroundTruthRecord*> gt_by_id;
  std::map<TrackId, const TrackRecord*> track_by_id;
  std::map<PersonId, const HeadObservationRecord*> head_by_person;
  std::map<PersonId, const SkeletonObservationRecord*> skel_by_person;
  std::multimap<TrackId, const AttributeOutputRecord*> attr_by_track;

  for (const Correspondence& c : correspondences) {
    if (c.frame != current) {
      current = c.frame;
      gt_by_id.clear();
      track_by_id.clear();
      head_by_person.clear();
      skel_by_person.clear();
      attr_by_track.clear();
      for (const auto* r : index.gt(c.frame)) gt_by_id[r->gt_person_id] = r;
      for (const auto* r : index.tracks(c.frame)) track_by_id[r->track_id] = r;
      for (const auto* r : index.head_observations(c.frame)) head_by_person[r->person_id] = r;
      for (const auto* r : index.skeleton_observations(c.frame)) skel_by_person[r->person_id] = r;
      for (const auto* r : index.attribute_outputs(c.frame)) attr_by_track.emplace(r->track_id, r);
    }

    const auto gt_it = gt_by_id.find(c.gt_id);
    const auto track_it = track_by_id.find(c.track_id);
    if (gt_it == gt_by_id.end() || track_it == track_by_id.end()) {
      throw DataError("correspondence at frame " + std::to_string(c.frame) +
                      " refers to a missing ground-truth or track record");
    }
    const GroundTruthRecord* gt = gt_it->second;

    const auto subject = crop_subject(track_it->second->bbox, index.gt(c.frame), options.crop_min_iou);
    const HeadObservationRecord* raw_head = nullptr;
    const SkeletonObservationRecord* raw_skel = nullptr;
    if (subject) {
      if (auto it = head_by_person.find(*subject); it != head_by_person.end()) raw_head = it->second;
      if (auto it = skel_by_person.find(*subject); it != skel_by_person.end()) raw_skel = it->second;
    }

    const auto [first, last] = attr_by_track.equal_range(c.track_id);
    for (auto it = first; it != last; ++it) {
      const AttributeOutputRecord* a = it->second;
      AttrSample s{c.frame, c.gt_id, c.track_id, a->channel, 0.0, 0.0, gt->head_size, a->observed};
      if (const auto joint = joint_of(a->channel)) {
        const GtJoint& truth = gt->skeleton[index_of(*joint)];
        if (!truth.visible || raw_skel == nullptr) continue;
        const auto& raw = raw_skel->skeleton[*joint];
        if (!raw) continue;
        s.raw_error = distance(*raw, truth.point);
        s.filtered_error = distance(Point2{a->value[0], a->value[1]}, truth.point);
      } else {
        if (raw_head == nullptr) continue;
        s.raw_error = std::abs(angular_diff(raw_head->orientation.degrees(), gt->head_theta));
        s.filtered_error = std::abs(angular_diff(a->value[0], gt->head_theta));
        s.head_size = 0.0;
      }
      out.samples.push_back(s);
    }
  }

  if (out.samples.empty()) {
    throw UndefinedMetric("no matched frames with both raw and filtered attribute values");
  }

  std::map<Channel, std::vector<AttrSample>> by_channel;
  std::vector<AttrSample> joints;
  for (const AttrSample& s : out.samples) {
    by_channel[s.channel].push_back(s);
    if (!is_angular(s.channel)) joints.push_back(s);
  }
  for (const auto& [channel, samples] : by_channel) {
    out.channels.push_back(summarize(std::string(to_string(channel)), samples, options.pco_threshold));
  }
  if (!joints.empty()) {
    out.channels.push_back(summarize("skeleton", joints, options.pco_threshold));
  }
  return out;
}

}  // namespace detta::metrics
