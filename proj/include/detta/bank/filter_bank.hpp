#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "detta/bank/channel_params.hpp"
#include "detta/bank/schedule.hpp"
#include "detta/core/types.hpp"
#include "detta/ghfilter/gh_filter.hpp"

namespace detta::bank {

struct FilterKey {
  TrackId track_id;
  Channel channel = Channel::head;

  friend auto operator<=>(const FilterKey&, const FilterKey&) = default;
};

struct LiveTrack {
  TrackId id;
  BBox bbox;
};

/// What the analysis modules produced for one track this frame.
struct TrackObservations {
  TrackId id;
  std::optional<HeadOrientation> head;
  std::optional<SkeletonObservation> skeleton;
};

struct FilterOutput {
  FilterKey key;
  std::array<double, 2> value{};  // angle in value[0], or (u, v)
  bool observed = false;
};

struct LifecycleEvent {
  enum class Kind { created, expired };
  Kind kind = Kind::created;
  FilterKey key;
};

struct FrameResult {
  std::vector<FilterOutput> outputs;  // ordered by key
  std::vector<LifecycleEvent> events;
  std::size_t dropped = 0;
};

struct BankOptions {
  /// A track's filters are destroyed once it has been absent this many
  /// consecutive frames.
  std::int64_t expire_after = 10;
};

/// Owns one g-h filter per (track, channel). Filters start on the first
/// consumed observation, advance every frame (update on scheduled frames with
/// an observation, predict otherwise) and die with their track.
class FilterBank {
 public:
  FilterBank(ChannelParams params, FreeFlightConfig schedule, BankOptions options = {});

  /// Processes one frame. Frames must arrive with strictly increasing index
  /// and time. Observations for tracks not in `live` are dropped and counted.
  FrameResult on_frame(const FrameStamp& frame, std::span<const LiveTrack> live,
                       std::span<const TrackObservations> observations);

  std::size_t dropped_observations() const { return dropped_; }
  std::size_t live_filter_count() const { return filters_.size(); }
  bool has_filter(const FilterKey& key) const { return filters_.count(key) != 0; }

  const FreeFlightConfig& schedule() const { return schedule_; }
  const ChannelParams& params() const { return params_; }

 private:
  using Slot = std::variant<gh::GHState, gh::PointGHState>;

  ChannelParams params_;
  FreeFlightConfig schedule_;
  BankOptions options_;
  std::map<FilterKey, Slot> filters_;
  std::map<TrackId, FrameIndex> last_seen_;
  std::optional<FrameStamp> last_frame_;
  std::size_t dropped_ = 0;
};

}  // namespace detta::bank
