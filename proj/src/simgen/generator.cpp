#include "detta/simgen/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "detta/core/angles.hpp"
#include "detta/core/numfmt.hpp"

namespace detta::simgen {

namespace {

enum class Stream : std::uint32_t { detector = 1, false_positives = 2, head = 3, skeleton = 4 };

// Independent generator per (purpose, person) so that adding a person or a
// noise source leaves every other stream untouched.
std::mt19937_64 make_rng(std::uint64_t seed, Stream stream, PersonId person) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                    static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(person)};
  return std::mt19937_64(seq);
}

double gaussian(std::mt19937_64& rng, double sigma) {
  if (sigma <= 0.0) return 0.0;
  return std::normal_distribution<double>(0.0, sigma)(rng);
}

bool chance(std::mt19937_64& rng, double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  return std::bernoulli_distribution(p)(rng);
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

BBox quantized(const BBox& b) {
  return {quantize6(b.x), quantize6(b.y), quantize6(b.w), quantize6(b.h)};
}

Point2 quantized(const Point2& p) { return {quantize6(p.u), quantize6(p.v)}; }

struct PersonStreams {
  std::mt19937_64 detector;
  std::mt19937_64 head;
  std::mt19937_64 skeleton;
};

}  // namespace

std::vector<PersonFrame> person_trajectory(const PersonSpec& person, const ScenarioSpec& spec) {
  std::vector<PersonFrame> out;
  const std::int64_t lifetime = person.lifetime();
  if (lifetime <= 0) return out;
  out.reserve(static_cast<std::size_t>(lifetime));

  const double dt = 1.0 / spec.fps;
  BBox box = person.start;
  double theta = wrap_angle(person.head_initial);
  std::size_t motion_seg = 0, head_seg = 0;
  std::int64_t motion_left = person.motion.empty() ? 0 : person.motion[0].frames;
  std::int64_t head_left = person.head.empty() ? 0 : person.head[0].frames;

  for (std::int64_t k = 0; k < lifetime; ++k) {
    PersonFrame pf;
    pf.frame = person.entry + k;
    pf.bbox = box;
    pf.head_theta = theta;
    const double t = static_cast<double>(pf.frame) * dt;
    for (JointName j : kAllJoints) {
      const std::size_t i = index_of(j);
      const Point2& f = spec.skeleton.layout[i];
      const JointArticulation& a = spec.skeleton.articulation[i];
      const double phase = 0.9 * static_cast<double>(person.id) + 1.3 * static_cast<double>(i);
      const double arg = 2.0 * std::numbers::pi * t / a.period + phase;
      pf.joints[i] = {box.x + f.u * box.w + a.amplitude * std::sin(arg),
                      box.y + f.v * box.h + 0.5 * a.amplitude * std::cos(arg)};
    }
    out.push_back(pf);

    // Advance by the segment active on this step.
    if (motion_seg < person.motion.size()) {
      box.x += person.motion[motion_seg].vx * dt;
      box.y += person.motion[motion_seg].vy * dt;
      if (--motion_left == 0 && ++motion_seg < person.motion.size()) {
        motion_left = person.motion[motion_seg].frames;
      }
    }
    if (head_seg < person.head.size()) {
      theta = wrap_angle(theta + person.head[head_seg].rate * dt);
      if (--head_left == 0 && ++head_seg < person.head.size()) {
        head_left = person.head[head_seg].frames;
      }
    }
  }
  return out;
}

Scenario generate(const ScenarioSpec& spec, std::uint64_t seed) {
  spec.validate();

  Scenario s;
  s.fps = quantize6(spec.fps);
  s.frame_count = spec.frames;

  std::vector<const PersonSpec*> persons;
  for (const PersonSpec& p : spec.persons) persons.push_back(&p);
  std::sort(persons.begin(), persons.end(),
            [](const PersonSpec* a, const PersonSpec* b) { return a->id < b->id; });

  std::vector<std::vector<PersonFrame>> trajectories;
  std::vector<PersonStreams> streams;
  for (const PersonSpec* p : persons) {
    trajectories.push_back(person_trajectory(*p, spec));
    streams.push_back({make_rng(seed, Stream::detector, p->id), make_rng(seed, Stream::head, p->id),
                       make_rng(seed, Stream::skeleton, p->id)});
  }
  auto fp_rng = make_rng(seed, Stream::false_positives, 0);
  const NoiseSpec& noise = spec.noise;

  for (FrameIndex f = 0; f < spec.frames; ++f) {
    const FrameStamp stamp = s.stamp(f);
    for (std::size_t i = 0; i < persons.size(); ++i) {
      const PersonSpec& person = *persons[i];
      if (f < person.entry || f > person.exit) continue;
      const PersonFrame& pf = trajectories[i][static_cast<std::size_t>(f - person.entry)];
      PersonStreams& rng = streams[i];

      GroundTruthRecord gt;
      gt.frame = stamp;
      gt.gt_person_id = person.id;
      gt.bbox = quantized(pf.bbox);
      gt.head_theta = quantize_angle6(pf.head_theta);
      for (JointName j : kAllJoints) {
        const Point2& q = pf.joints[index_of(j)];
        const bool in_image =
            q.u >= 0.0 && q.v >= 0.0 && q.u <= spec.image_width && q.v <= spec.image_height;
        gt.skeleton[index_of(j)] = {quantized(q), in_image};
      }
      gt.head_size = quantize6(2.0 * distance(pf.joints[index_of(JointName::head)],
                                              pf.joints[index_of(JointName::neck)]));
      s.gt.push_back(gt);

      // Detector
      if (!chance(rng.detector, noise.det_miss_prob)) {
        const double cx = pf.bbox.center_x() + gaussian(rng.detector, noise.det_center_sigma);
        const double cy = pf.bbox.center_y() + gaussian(rng.detector, noise.det_center_sigma);
        const double w = std::max(1.0, pf.bbox.w + gaussian(rng.detector, noise.det_size_sigma));
        const double h = std::max(1.0, pf.bbox.h + gaussian(rng.detector, noise.det_size_sigma));
        const BBox det = noise.det_center_sigma > 0.0 || noise.det_size_sigma > 0.0
                             ? BBox{cx - 0.5 * w, cy - 0.5 * h, w, h}
                             : pf.bbox;
        s.detections.push_back({f, quantized(det)});
      }

      // Head orientation module
      double theta = pf.head_theta;
      if (chance(rng.head, noise.head_outlier_prob)) {
        theta = uniform(rng.head, -180.0, 180.0);
      } else {
        theta += gaussian(rng.head, noise.head_sigma);
      }
      s.head_observations.push_back({f, person.id, HeadOrientation(quantize_angle6(theta))});

      // Skeleton module
      SkeletonObservationRecord skel{f, person.id, {}};
      for (JointName j : kAllJoints) {
        const std::size_t ji = index_of(j);
        const bool dropped = chance(rng.skeleton, noise.joint_dropout[ji]);
        const double du = gaussian(rng.skeleton, noise.joint_sigma[ji]);
        const double dv = gaussian(rng.skeleton, noise.joint_sigma[ji]);
        if (dropped || !gt.skeleton[ji].visible) continue;
        const Point2& q = pf.joints[ji];
        skel.skeleton.joints[ji] = quantized(Point2{q.u + du, q.v + dv});
      }
      s.skeleton_observations.push_back(skel);
    }

    if (noise.det_fp_rate > 0.0) {
      const int count = std::poisson_distribution<int>(noise.det_fp_rate)(fp_rng);
      for (int n = 0; n < count; ++n) {
        const double w = uniform(fp_rng, 30.0, std::min(90.0, spec.image_width));
        const double h = std::min(2.4 * w, spec.image_height);
        const double x = uniform(fp_rng, 0.0, spec.image_width - w);
        const double y = uniform(fp_rng, 0.0, spec.image_height - h);
        s.detections.push_back({f, quantized(BBox{x, y, w, h})});
      }
    }
  }
  return s;
}

ScenarioSpec without_noise(ScenarioSpec spec) {
  spec.noise = NoiseSpec::none();
  return spec;
}

}  // namespace detta::simgen
