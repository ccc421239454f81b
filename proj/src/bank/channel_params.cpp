#include "detta/bank/channel_params.hpp"

namespace detta::bank {

ChannelParams::ChannelParams() {
  for (Channel c : kAllChannels) {
    const auto joint = joint_of(c);
    if (!joint) {
      params_[static_cast<std::size_t>(c)] = {0.5, 0.02};
    } else if (*joint == JointName::l_wrist || *joint == JointName::r_wrist) {
      params_[static_cast<std::size_t>(c)] = {0.5, 0.02};
    } else {
      params_[static_cast<std::size_t>(c)] = {0.9, 0.2};
    }
  }
}

ChannelParams ChannelParams::uniform(const gh::GHParams& params) {
  params.validate();
  ChannelParams out;
  out.params_.fill(params);
  return out;
}

void ChannelParams::set(Channel c, const gh::GHParams& params) {
  params.validate();
  params_[static_cast<std::size_t>(c)] = params;
}

void ChannelParams::validate() const {
  for (const auto& p : params_) p.validate();
}

}  // namespace detta::bank
