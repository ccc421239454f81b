#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>

#include "detta/core/angles.hpp"

namespace detta {

using FrameIndex = std::int64_t;

struct FrameStamp {
  FrameIndex frame_index = 0;
  double time = 0.0;  // seconds

  friend bool operator==(const FrameStamp&, const FrameStamp&) = default;
};

/// Tracker-assigned identity. Ids are handed out from a monotone counter and
/// never reused within a run; 0 is not a valid id.
struct TrackId {
  std::uint64_t value = 0;

  friend auto operator<=>(const TrackId&, const TrackId&) = default;
};

using PersonId = std::uint32_t;

/// Axis-aligned box in image pixels, (x, y) is the top-left corner.
struct BBox {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;

  bool valid() const { return w > 0.0 && h > 0.0; }
  double area() const { return w * h; }
  double center_x() const { return x + 0.5 * w; }
  double center_y() const { return y + 0.5 * h; }

  friend bool operator==(const BBox&, const BBox&) = default;
};

/// Intersection over union; 0 when either box is degenerate.
double iou(const BBox& a, const BBox& b);

struct Point2 {
  double u = 0.0;
  double v = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

double distance(const Point2& a, const Point2& b);

enum class JointName : std::uint8_t {
  head,
  neck,
  l_shoulder,
  r_shoulder,
  l_elbow,
  r_elbow,
  l_wrist,
  r_wrist,
};

inline constexpr std::size_t kJointCount = 8;

inline constexpr std::array<JointName, kJointCount> kAllJoints = {
    JointName::head,    JointName::neck,    JointName::l_shoulder, JointName::r_shoulder,
    JointName::l_elbow, JointName::r_elbow, JointName::l_wrist,    JointName::r_wrist,
};

constexpr std::size_t index_of(JointName j) { return static_cast<std::size_t>(j); }

std::string_view to_string(JointName j);
std::optional<JointName> parse_joint(std::string_view name);

/// Head orientation in degrees, always held in (-180, 180].
class HeadOrientation {
 public:
  HeadOrientation() = default;
  explicit HeadOrientation(double theta) : theta_(wrap_angle(theta)) {}

  double degrees() const { return theta_; }

  friend bool operator==(const HeadOrientation&, const HeadOrientation&) = default;

 private:
  double theta_ = 0.0;
};

/// Per-joint output of the skeleton module. A joint that was not detected
/// carries no point.
struct SkeletonObservation {
  std::array<std::optional<Point2>, kJointCount> joints{};

  bool visible(JointName j) const { return joints[index_of(j)].has_value(); }
  const std::optional<Point2>& operator[](JointName j) const { return joints[index_of(j)]; }
  std::optional<Point2>& operator[](JointName j) { return joints[index_of(j)]; }

  friend bool operator==(const SkeletonObservation&, const SkeletonObservation&) = default;
};

using AttributeObservation = std::variant<HeadOrientation, SkeletonObservation>;

struct GtJoint {
  Point2 point;
  bool visible = true;

  friend bool operator==(const GtJoint&, const GtJoint&) = default;
};

struct GroundTruthRecord {
  FrameStamp frame;
  PersonId gt_person_id = 0;
  BBox bbox;
  double head_theta = 0.0;
  std::array<GtJoint, kJointCount> skeleton{};
  double head_size = 0.0;  // pixels, > 0

  friend bool operator==(const GroundTruthRecord&, const GroundTruthRecord&) = default;
};

/// An attribute channel a filter can be attached to: the head orientation,
/// or one of the eight skeleton joints.
enum class Channel : std::uint8_t {
  head,
  skel_head,
  skel_neck,
  skel_l_shoulder,
  skel_r_shoulder,
  skel_l_elbow,
  skel_r_elbow,
  skel_l_wrist,
  skel_r_wrist,
};

inline constexpr std::size_t kChannelCount = 1 + kJointCount;

inline constexpr std::array<Channel, kChannelCount> kAllChannels = {
    Channel::head,         Channel::skel_head,    Channel::skel_neck,
    Channel::skel_l_shoulder, Channel::skel_r_shoulder, Channel::skel_l_elbow,
    Channel::skel_r_elbow, Channel::skel_l_wrist, Channel::skel_r_wrist,
};

constexpr Channel channel_for(JointName j) {
  return static_cast<Channel>(1 + static_cast<std::uint8_t>(j));
}

constexpr std::optional<JointName> joint_of(Channel c) {
  if (c == Channel::head) return std::nullopt;
  return static_cast<JointName>(static_cast<std::uint8_t>(c) - 1);
}

constexpr bool is_angular(Channel c) { return c == Channel::head; }

/// Number of scalar components a channel carries (1 for angles, 2 for points).
constexpr std::size_t channel_arity(Channel c) { return is_angular(c) ? 1 : 2; }

/// "head" for the orientation channel, "skel.<joint>" for joints.
std::string_view to_string(Channel c);
std::optional<Channel> parse_channel(std::string_view name);

}  // namespace detta
