#include "detta/core/types.hpp"

#include <algorithm>
#include <cmath>

namespace detta {

double iou(const BBox& a, const BBox& b) {
  if (!a.valid() || !b.valid()) return 0.0;
  const double ix = std::max(0.0, std::min(a.x + a.w, b.x + b.w) - std::max(a.x, b.x));
  const double iy = std::max(0.0, std::min(a.y + a.h, b.y + b.h) - std::max(a.y, b.y));
  const double inter = ix * iy;
  if (inter <= 0.0) return 0.0;
  return inter / (a.area() + b.area() - inter);
}

double distance(const Point2& a, const Point2& b) { return std::hypot(a.u - b.u, a.v - b.v); }

namespace {

constexpr std::array<std::string_view, kJointCount> kJointNames = {
    "head", "neck", "l_shoulder", "r_shoulder", "l_elbow", "r_elbow", "l_wrist", "r_wrist",
};

constexpr std::array<std::string_view, kChannelCount> kChannelNames = {
    "head",         "skel.head",    "skel.neck",    "skel.l_shoulder", "skel.r_shoulder",
    "skel.l_elbow", "skel.r_elbow", "skel.l_wrist", "skel.r_wrist",
};

}  // namespace

std::string_view to_string(JointName j) { return kJointNames[index_of(j)]; }

std::optional<JointName> parse_joint(std::string_view name) {
  for (JointName j : kAllJoints) {
    if (kJointNames[index_of(j)] == name) return j;
  }
  return std::nullopt;
}

std::string_view to_string(Channel c) { return kChannelNames[static_cast<std::size_t>(c)]; }

std::optional<Channel> parse_channel(std::string_view name) {
  for (Channel c : kAllChannels) {
    if (kChannelNames[static_cast<std::size_t>(c)] == name) return c;
  }
  return std::nullopt;
}

}  // namespace detta
