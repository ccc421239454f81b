#pragma once

#include <array>

#include "detta/core/types.hpp"
#include "detta/ghfilter/gh_filter.hpp"

namespace detta::bank {

/// g-h gains for every channel.
class ChannelParams {
 public:
  /// Tuned defaults: head orientation g=0.5 h=0.02; head, neck, shoulder and
  /// elbow joints g=0.9 h=0.2; wrists g=0.5 h=0.02.
  ChannelParams();

  /// Every channel at the same gains.
  static ChannelParams uniform(const gh::GHParams& params);

  /// g=1, h=0 everywhere: the filter holds the last observation.
  static ChannelParams keep() { return uniform({1.0, 0.0}); }

  const gh::GHParams& operator[](Channel c) const { return params_[static_cast<std::size_t>(c)]; }
  void set(Channel c, const gh::GHParams& params);

  void validate() const;

  friend bool operator==(const ChannelParams&, const ChannelParams&) = default;

 private:
  std::array<gh::GHParams, kChannelCount> params_{};
};

}  // namespace detta::bank
