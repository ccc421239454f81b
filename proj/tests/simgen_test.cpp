#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <sstream>

#include "detta/core/angles.hpp"
#include "detta/core/errors.hpp"
#include "detta/core/scenario.hpp"
#include "detta/simgen/generator.hpp"
#include "detta/simgen/spec_json.hpp"

namespace detta::simgen {
namespace {

std::string text_of(const Scenario& s) {
  std::ostringstream os;
  write_scenario(s, os);
  return os.str();
}

PersonSpec stationary(PersonId id, FrameIndex frames, BBox box = {200, 100, 60, 150}) {
  PersonSpec p;
  p.id = id;
  p.entry = 0;
  p.exit = frames - 1;
  p.start = box;
  p.motion = {{frames, 0.0, 0.0}};
  p.head = {{frames, 0.0}};
  return p;
}

TEST(Presets, Catalogue) {
  EXPECT_EQ(preset("single-walker").persons.size(), 1u);
  EXPECT_EQ(preset("single-walker").frames, 300);
  EXPECT_EQ(preset("crossing-pair").persons.size(), 2u);
  EXPECT_EQ(preset("deboarding-77").persons.size(), 77u);
  EXPECT_EQ(preset("deboarding-77").frames, 1218);
  EXPECT_EQ(preset("turning-heads").persons.size(), 100u);
  EXPECT_THROW(preset("foo"), ConfigError);
  for (auto name : preset_names()) EXPECT_NO_THROW(preset(name).validate()) << name;
}

TEST(Generate, ZeroNoiseIsTransparent) {
  for (auto name : preset_names()) {
    const ScenarioSpec spec = without_noise(preset(name));
    const Scenario s = generate(spec, 5);
    const ScenarioIndex idx(s);
    std::size_t checked = 0;
    for (FrameIndex f = 0; f < s.frame_count; ++f) {
      const auto& gt = idx.gt(f);
      const auto& det = idx.detections(f);
      const auto& head = idx.head_observations(f);
      const auto& skel = idx.skeleton_observations(f);
      ASSERT_EQ(det.size(), gt.size());
      ASSERT_EQ(head.size(), gt.size());
      ASSERT_EQ(skel.size(), gt.size());
      for (std::size_t i = 0; i < gt.size(); ++i) {
        ASSERT_EQ(det[i]->bbox, gt[i]->bbox) << name << " frame " << f;
        ASSERT_EQ(head[i]->person_id, gt[i]->gt_person_id);
        ASSERT_EQ(head[i]->orientation.degrees(), gt[i]->head_theta);
        for (JointName j : kAllJoints) {
          const GtJoint& truth = gt[i]->skeleton[index_of(j)];
          const auto& obs = skel[i]->skeleton[j];
          ASSERT_EQ(obs.has_value(), truth.visible);
          if (obs) {
            ASSERT_EQ(*obs, truth.point);
          }
        }
        ++checked;
      }
    }
    EXPECT_GT(checked, 0u) << name;
  }
}

TEST(Generate, HeadSizeIsTwiceHeadToNeck) {
  const Scenario s = generate(preset("crossing-pair"), 1);
  for (const auto& g : s.gt) {
    const double expect = 2.0 * distance(g.skeleton[index_of(JointName::head)].point,
                                         g.skeleton[index_of(JointName::neck)].point);
    ASSERT_NEAR(g.head_size, expect, 1e-5);
    ASSERT_GT(g.head_size, 0.0);
  }
}

TEST(Generate, DeterministicPerSeed) {
  const ScenarioSpec spec = preset("crossing-pair");
  const Scenario a = generate(spec, 42);
  const Scenario b = generate(spec, 42);
  EXPECT_EQ(a, b);
  EXPECT_EQ(text_of(a), text_of(b));
  const Scenario c = generate(spec, 43);
  EXPECT_NE(text_of(a), text_of(c));
  // ground truth does not depend on the seed
  EXPECT_EQ(a.gt, c.gt);
}

TEST(Generate, HeadNoiseMatchesSigma) {
  ScenarioSpec spec;
  spec.frames = 10000;
  spec.noise.head_sigma = 20.0;
  spec.persons = {stationary(1, spec.frames)};
  spec.persons[0].head_initial = 175.0;  // residuals have to wrap correctly
  const Scenario s = generate(spec, 2024);
  ASSERT_EQ(s.head_observations.size(), 10000u);
  double sum = 0.0, sq = 0.0;
  for (std::size_t i = 0; i < s.gt.size(); ++i) {
    const double r = angular_diff(s.head_observations[i].orientation.degrees(), s.gt[i].head_theta);
    sum += r;
    sq += r * r;
  }
  const double n = static_cast<double>(s.gt.size());
  const double sigma = std::sqrt(sq / n - (sum / n) * (sum / n));
  EXPECT_NEAR(sigma, 20.0, 0.03 * 20.0);
}

TEST(Generate, JointNoiseAndDropoutMatchSpec) {
  ScenarioSpec spec;
  spec.frames = 5000;
  spec.noise.joint_sigma.fill(3.0);
  spec.noise.joint_dropout.fill(0.2);
  spec.persons = {stationary(1, spec.frames)};
  const Scenario s = generate(spec, 9);
  double sq = 0.0;
  std::size_t present = 0, total = 0;
  for (std::size_t i = 0; i < s.gt.size(); ++i) {
    for (JointName j : kAllJoints) {
      ++total;
      const auto& obs = s.skeleton_observations[i].skeleton[j];
      if (!obs) continue;
      ++present;
      const Point2& t = s.gt[i].skeleton[index_of(j)].point;
      sq += (obs->u - t.u) * (obs->u - t.u) + (obs->v - t.v) * (obs->v - t.v);
    }
  }
  EXPECT_NEAR(std::sqrt(sq / (2.0 * present)), 3.0, 0.03 * 3.0);
  EXPECT_NEAR(1.0 - static_cast<double>(present) / total, 0.2, 0.01);
}

TEST(Generate, TrajectoryStartsAtSpecBox) {
  const ScenarioSpec spec = preset("single-walker");
  const auto traj = person_trajectory(spec.persons[0], spec);
  ASSERT_EQ(static_cast<std::int64_t>(traj.size()), spec.persons[0].lifetime());
  EXPECT_EQ(traj.front().bbox, spec.persons[0].start);
  EXPECT_EQ(traj.front().frame, spec.persons[0].entry);
}

TEST(SpecValidation, NamesOffendingSegment) {
  ScenarioSpec spec;
  spec.frames = 100;
  PersonSpec p = stationary(4, 100, {500, 100, 60, 150});
  p.motion = {{50, 0.0, 0.0}, {50, 90.0, 0.0}};  // drifts off the right edge
  spec.persons = {p};
  try {
    spec.validate();
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("person 4"), std::string::npos) << what;
    EXPECT_NE(what.find("motion segment 1"), std::string::npos) << what;
  }
  EXPECT_THROW(generate(spec, 1), ValidationError);
}

TEST(SpecValidation, RejectsBadNoiseAndTiling) {
  ScenarioSpec spec;
  spec.frames = 10;
  spec.persons = {stationary(1, 10)};
  spec.noise.det_miss_prob = 1.5;
  EXPECT_THROW(spec.validate(), ValidationError);
  spec.noise = {};
  spec.persons[0].motion = {{9, 0.0, 0.0}};  // does not cover the lifetime
  EXPECT_THROW(spec.validate(), ValidationError);
}

TEST(SpecJson, RoundTrip) {
  const ScenarioSpec spec = preset("crossing-pair");
  const nlohmann::json j = spec;
  const ScenarioSpec back = j.get<ScenarioSpec>();
  EXPECT_EQ(nlohmann::json(back), j);
  EXPECT_EQ(text_of(generate(back, 3)), text_of(generate(spec, 3)));

  const auto path = std::filesystem::temp_directory_path() / "detta_spec_roundtrip.json";
  save_spec(spec, path);
  EXPECT_EQ(nlohmann::json(load_spec(path)), j);
  std::filesystem::remove(path);
  EXPECT_THROW(load_spec("/nonexistent/spec.json"), ConfigError);
}

}  // namespace
}  // namespace detta::simgen
