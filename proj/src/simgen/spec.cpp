#include "detta/simgen/spec.hpp"

#include <cmath>
#include <set>
#include <string>

#include "detta/core/errors.hpp"
#include "detta/simgen/generator.hpp"

namespace detta::simgen {

SkeletonSpec SkeletonSpec::standard() {
  SkeletonSpec s;
  s.layout = {{
      {0.50, 0.10},  // head
      {0.50, 0.22},  // neck
      {0.70, 0.26},  // l_shoulder
      {0.30, 0.26},  // r_shoulder
      {0.78, 0.42},  // l_elbow
      {0.22, 0.42},  // r_elbow
      {0.80, 0.56},  // l_wrist
      {0.20, 0.56},  // r_wrist
  }};
  // Wrists swing the most.
  s.articulation = {{
      {1.0, 3.0},
      {0.5, 3.0},
      {1.0, 2.0},
      {1.0, 2.0},
      {3.0, 1.6},
      {3.0, 1.6},
      {8.0, 1.2},
      {8.0, 1.2},
  }};
  return s;
}

namespace {

std::string person_tag(const PersonSpec& p) { return "person " + std::to_string(p.id); }

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

void require_probability(double p, const std::string& name) {
  require(std::isfinite(p) && p >= 0.0 && p <= 1.0, name + " must lie in [0, 1]");
}

void require_sigma(double s, const std::string& name) {
  require(std::isfinite(s) && s >= 0.0, name + " must be a non-negative number");
}

// Index of the motion segment that is active on lifetime step k.
std::size_t segment_at(const std::vector<VelocitySegment>& segments, std::int64_t k) {
  std::int64_t end = 0;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    end += segments[i].frames;
    if (k < end) return i;
  }
  return segments.empty() ? 0 : segments.size() - 1;
}

}  // namespace

void ScenarioSpec::validate() const {
  require(std::isfinite(fps) && fps > 0.0, "fps must be positive");
  require(frames >= 0, "frame count must be non-negative");
  require(image_width > 0.0 && image_height > 0.0, "image size must be positive");
  require(skeleton.margin >= 0.0, "skeleton margin must be non-negative");
  for (JointName j : kAllJoints) {
    const auto& a = skeleton.articulation[index_of(j)];
    const std::string name = "joint " + std::string(to_string(j));
    require_sigma(a.amplitude, name + " articulation amplitude");
    require(std::isfinite(a.period) && a.period > 0.0, name + " articulation period must be positive");
    require_sigma(noise.joint_sigma[index_of(j)], name + " noise sigma");
    require_probability(noise.joint_dropout[index_of(j)], name + " dropout probability");
  }
  require_probability(noise.det_miss_prob, "detector miss probability");
  require_sigma(noise.det_fp_rate, "detector false-positive rate");
  require_sigma(noise.det_center_sigma, "detector center sigma");
  require_sigma(noise.det_size_sigma, "detector size sigma");
  require_sigma(noise.head_sigma, "head noise sigma");
  require_probability(noise.head_outlier_prob, "head outlier probability");

  std::set<PersonId> ids;
  for (const PersonSpec& p : persons) {
    const std::string tag = person_tag(p);
    require(p.id > 0, "person ids must be positive");
    require(ids.insert(p.id).second, tag + " is declared twice");
    require(p.entry >= 0 && p.exit >= p.entry && p.exit < frames,
            tag + ": lifetime [" + std::to_string(p.entry) + ", " + std::to_string(p.exit) +
                "] does not fit in " + std::to_string(frames) + " frames");
    require(p.start.valid(), tag + ": start box needs positive width and height");
    require(std::isfinite(p.head_initial), tag + ": head_initial must be finite");

    std::int64_t motion_frames = 0;
    for (std::size_t i = 0; i < p.motion.size(); ++i) {
      const auto& s = p.motion[i];
      require(s.frames > 0, tag + ": motion segment " + std::to_string(i) + " is empty");
      require(std::isfinite(s.vx) && std::isfinite(s.vy),
              tag + ": motion segment " + std::to_string(i) + " has a non-finite velocity");
      motion_frames += s.frames;
    }
    require(motion_frames == p.lifetime(),
            tag + ": motion segments cover " + std::to_string(motion_frames) +
                " frames but the lifetime is " + std::to_string(p.lifetime()));
    std::int64_t head_frames = 0;
    for (std::size_t i = 0; i < p.head.size(); ++i) {
      require(p.head[i].frames > 0, tag + ": head segment " + std::to_string(i) + " is empty");
      require(std::isfinite(p.head[i].rate),
              tag + ": head segment " + std::to_string(i) + " has a non-finite rate");
      head_frames += p.head[i].frames;
    }
    require(head_frames == p.lifetime(),
            tag + ": head segments cover " + std::to_string(head_frames) +
                " frames but the lifetime is " + std::to_string(p.lifetime()));

    const auto trajectory = person_trajectory(p, *this);
    for (std::size_t k = 0; k < trajectory.size(); ++k) {
      const PersonFrame& pf = trajectory[k];
      const BBox& b = pf.bbox;
      const bool inside = b.x >= 0.0 && b.y >= 0.0 && b.x + b.w <= image_width &&
                          b.y + b.h <= image_height;
      if (!inside) {
        const std::size_t seg = k == 0 ? 0 : segment_at(p.motion, static_cast<std::int64_t>(k) - 1);
        throw ValidationError(tag + ": motion segment " + std::to_string(seg) + " moves the box out of the " +
                              std::to_string(static_cast<int>(image_width)) + "x" +
                              std::to_string(static_cast<int>(image_height)) + " image at frame " +
                              std::to_string(pf.frame));
      }
      const double mu = skeleton.margin * b.w;
      const double mv = skeleton.margin * b.h;
      for (JointName j : kAllJoints) {
        const Point2& q = pf.joints[index_of(j)];
        const bool near = q.u >= b.x - mu && q.u <= b.x + b.w + mu && q.v >= b.y - mv &&
                          q.v <= b.y + b.h + mv;
        require(near, tag + ": joint " + std::string(to_string(j)) +
                          " leaves the box margin at frame " + std::to_string(pf.frame));
      }
      require(distance(pf.joints[index_of(JointName::head)],
                       pf.joints[index_of(JointName::neck)]) > 1e-3,
              tag + ": head and neck coincide at frame " + std::to_string(pf.frame) +
                  ", head size would be zero");
    }
  }
}

}  // namespace detta::simgen
