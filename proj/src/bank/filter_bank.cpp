#include "detta/bank/filter_bank.hpp"

#include <set>
#include <string>

#include "detta/core/errors.hpp"

namespace detta::bank {

namespace {

// The scheduled measurement for one channel, if the module ran and produced it.
struct Measurement {
  std::optional<double> angle;
  std::optional<Point2> point;

  bool present() const { return angle.has_value() || point.has_value(); }
};

Measurement measurement_for(Channel c, const TrackObservations* obs, bool head_runs,
                            bool skeleton_runs) {
  Measurement m;
  if (obs == nullptr) return m;
  if (const auto joint = joint_of(c)) {
    if (skeleton_runs && obs->skeleton) m.point = (*obs->skeleton)[*joint];
  } else if (head_runs && obs->head) {
    m.angle = obs->head->degrees();
  }
  return m;
}

FilterOutput output_of(const FilterKey& key, const std::variant<gh::GHState, gh::PointGHState>& s,
                       bool observed) {
  FilterOutput out{key, {}, observed};
  if (const auto* scalar = std::get_if<gh::GHState>(&s)) {
    out.value = {scalar->x, 0.0};
  } else {
    const auto& point = std::get<gh::PointGHState>(s);
    out.value = {point.u.x, point.v.x};
  }
  return out;
}

}  // namespace

FilterBank::FilterBank(ChannelParams params, FreeFlightConfig schedule, BankOptions options)
    : params_(std::move(params)), schedule_(std::move(schedule)), options_(options) {
  params_.validate();
  for (AnalysisModule m : kAllModules) schedule_.at(m);  // every module needs a schedule
  if (options_.expire_after < 1) throw ConfigError("expire_after must be >= 1");
}

FrameResult FilterBank::on_frame(const FrameStamp& frame, std::span<const LiveTrack> live,
                                 std::span<const TrackObservations> observations) {
  if (last_frame_ && (frame.frame_index <= last_frame_->frame_index ||
                      frame.time <= last_frame_->time)) {
    throw TimeRegression("filter bank: frame " + std::to_string(frame.frame_index) +
                         " does not advance past frame " +
                         std::to_string(last_frame_->frame_index));
  }
  last_frame_ = frame;

  FrameResult result;
  const double t = frame.time;

  std::set<TrackId> live_ids;
  for (const LiveTrack& track : live) {
    live_ids.insert(track.id);
    last_seen_[track.id] = frame.frame_index;
  }

  // Expire tracks that have been absent long enough.
  for (auto it = last_seen_.begin(); it != last_seen_.end();) {
    if (frame.frame_index - it->second < options_.expire_after) {
      ++it;
      continue;
    }
    const TrackId gone = it->first;
    auto key_it = filters_.lower_bound(FilterKey{gone, Channel::head});
    while (key_it != filters_.end() && key_it->first.track_id == gone) {
      result.events.push_back({LifecycleEvent::Kind::expired, key_it->first});
      key_it = filters_.erase(key_it);
    }
    it = last_seen_.erase(it);
  }

  std::map<TrackId, const TrackObservations*> by_track;
  for (const TrackObservations& obs : observations) {
    if (live_ids.count(obs.id) == 0) {
      ++result.dropped;
      continue;
    }
    by_track.emplace(obs.id, &obs);
  }
  dropped_ += result.dropped;

  const bool head_runs = should_observe(AnalysisModule::head, frame.frame_index, schedule_);
  const bool skeleton_runs = should_observe(AnalysisModule::skeleton, frame.frame_index, schedule_);
  auto lookup = [&](TrackId id) -> const TrackObservations* {
    auto it = by_track.find(id);
    return it == by_track.end() ? nullptr : it->second;
  };

  // Advance every existing filter.
  std::map<FilterKey, bool> observed;
  for (auto& [key, slot] : filters_) {
    const Measurement m = measurement_for(key.channel, lookup(key.track_id), head_runs,
                                          skeleton_runs);
    const gh::GHParams& p = params_[key.channel];
    if (auto* scalar = std::get_if<gh::GHState>(&slot)) {
      *scalar = gh::step(*scalar, m.angle, t, p, gh::Domain::angular);
    } else {
      auto& point = std::get<gh::PointGHState>(slot);
      point = gh::step(point, m.point, t, p);
    }
    observed[key] = m.present();
  }

  // Start filters for channels observed for the first time.
  for (const auto& [id, obs] : by_track) {
    for (Channel c : kAllChannels) {
      const FilterKey key{id, c};
      if (filters_.count(key) != 0) continue;
      const Measurement m = measurement_for(c, obs, head_runs, skeleton_runs);
      if (m.angle) {
        filters_.emplace(key, gh::init(*m.angle, t, gh::Domain::angular));
      } else if (m.point) {
        filters_.emplace(key, gh::init(*m.point, t));
      } else {
        continue;
      }
      observed[key] = true;
      result.events.push_back({LifecycleEvent::Kind::created, key});
    }
  }

  result.outputs.reserve(filters_.size());
  for (const auto& [key, slot] : filters_) {
    result.outputs.push_back(output_of(key, slot, observed[key]));
  }
  return result;
}

}  // namespace detta::bank
