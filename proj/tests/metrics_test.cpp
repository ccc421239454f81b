#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "detta/core/angles.hpp"
#include "detta/core/errors.hpp"
#include "detta/metrics/attr_eval.hpp"
#include "detta/metrics/clear.hpp"
#include "detta/metrics/keypoints.hpp"
#include "detta/metrics/orientation.hpp"
#include "detta/pipeline/pipeline.hpp"
#include "detta/simgen/generator.hpp"
#include "oracles.hpp"

namespace detta::metrics {
namespace {

TEST(Pco, Examples) {
  const std::vector<double> errors{10, 50, 44, 46};
  EXPECT_EQ(pco(errors), 0.5);
  const std::vector<double> zeros(7, 0.0);
  EXPECT_EQ(pco(zeros), 1.0);
  const std::vector<double> boundary{45.0};
  EXPECT_EQ(pco(boundary), 1.0);
  const std::vector<double> just_over{std::nextafter(45.0, 90.0)};
  EXPECT_EQ(pco(just_over), 0.0);
  EXPECT_THROW(pco({}), UndefinedMetric);
  EXPECT_THROW(mean_offset({}), UndefinedMetric);
  EXPECT_DOUBLE_EQ(mean_offset(errors), 37.5);
}

TEST(Pco, MonotoneInThreshold) {
  std::mt19937_64 rng(1000);
  std::uniform_real_distribution<double> err(0.0, 180.0);
  std::uniform_int_distribution<int> size(1, 50);
  for (int set = 0; set < 1000; ++set) {
    std::vector<double> e(size(rng));
    for (double& x : e) x = err(rng);
    double previous = -1.0;
    for (double thr = 0.0; thr <= 180.0; thr += 2.5) {
      const double p = pco(e, thr);
      ASSERT_GE(p, previous);
      ASSERT_GE(p, 0.0);
      ASSERT_LE(p, 1.0);
      previous = p;
    }
    ASSERT_EQ(pco(e, 180.0), 1.0);
  }
}

TEST(Pckh, KeypointBoundaryIsInclusive) {
  EXPECT_TRUE(keypoint_correct(0.0, 7.0));
  EXPECT_TRUE(keypoint_correct(5.0, 10.0));
  EXPECT_TRUE(keypoint_correct(0.5 * 37.3, 37.3));
  EXPECT_FALSE(keypoint_correct(std::nextafter(5.0, 6.0), 10.0));
  EXPECT_THROW(keypoint_correct(1.0, 0.0), DataError);
  EXPECT_THROW(keypoint_correct(1.0, -3.0), DataError);
}

TEST(Pckh, PerJointAndPooled) {
  const std::vector<KeypointSample> s{
      {JointName::l_wrist, 1.0, 10.0},
      {JointName::l_wrist, 6.0, 10.0},
      {JointName::neck, 5.0, 10.0},
  };
  const PckhResult r = pckh(s);
  EXPECT_EQ(r.per_joint[index_of(JointName::l_wrist)], 0.5);
  EXPECT_EQ(r.per_joint[index_of(JointName::neck)], 1.0);
  EXPECT_FALSE(r.per_joint[index_of(JointName::head)].has_value());
  EXPECT_EQ(r.counts[index_of(JointName::l_wrist)], 2u);
  EXPECT_DOUBLE_EQ(r.pooled, 2.0 / 3.0);
  EXPECT_EQ(r.total, 3u);
  EXPECT_THROW(pckh(std::span<const KeypointSample>{}), UndefinedMetric);
}

TEST(Pckh, SkeletonPairsSkipInvisibleGroundTruth) {
  SkeletonPair p;
  p.head_size = 20.0;
  for (JointName j : kAllJoints) {
    p.gt[index_of(j)] = {{100.0, 100.0}, true};
    p.estimate[j] = Point2{103.0, 104.0};  // 5 px off, within 10
  }
  p.gt[index_of(JointName::r_wrist)].visible = false;
  p.estimate[JointName::r_wrist] = Point2{0.0, 0.0};
  p.estimate[JointName::l_elbow].reset();  // visible in truth, not estimated
  const std::vector<SkeletonPair> pairs{p};
  const PckhResult r = pckh(pairs);
  EXPECT_EQ(r.total, 7u);
  EXPECT_DOUBLE_EQ(r.pooled, 6.0 / 7.0);
  EXPECT_EQ(r.per_joint[index_of(JointName::l_elbow)], 0.0);
  EXPECT_FALSE(r.per_joint[index_of(JointName::r_wrist)].has_value());
}

void expect_report(const ClearReport& got, const ClearReport& want) {
  EXPECT_EQ(got.fp, want.fp);
  EXPECT_EQ(got.fn, want.fn);
  EXPECT_EQ(got.ids, want.ids);
  EXPECT_EQ(got.matches, want.matches);
  EXPECT_EQ(got.total_gt, want.total_gt);
  EXPECT_NEAR(got.mota, want.mota, 1e-12);
  EXPECT_NEAR(got.motp, want.motp, 1e-12);
  EXPECT_NEAR(got.ids_rate, want.ids_rate, 1e-12);
}

TEST(Clear, PerfectStream) {
  const auto c = oracle::perfect_stream();
  const auto r = clear(c.gt, c.hyp, c.frames).report;
  expect_report(r, c.expected);
  EXPECT_EQ(r.mota, 1.0);
  EXPECT_EQ(r.motp, 1.0);
}

TEST(Clear, TenBoxPerturbation) {
  const auto c = oracle::ten_box_perturbation();
  expect_report(clear(c.gt, c.hyp, c.frames).report, c.expected);
}

TEST(Clear, HandTracedCrossing) {
  const auto c = oracle::crossing_three_frames();
  const ClearResult r = clear(c.gt, c.hyp, c.frames);
  expect_report(r.report, c.expected);
  const std::vector<Correspondence> want{
      {0, 1, TrackId{10}, 1.0},
      {0, 2, TrackId{20}, 1.0},
      {1, 2, TrackId{20}, 0.8},
      {2, 1, TrackId{20}, 1.0},
  };
  ASSERT_EQ(r.correspondences.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_EQ(r.correspondences[i].frame, want[i].frame);
    EXPECT_EQ(r.correspondences[i].gt_id, want[i].gt_id);
    EXPECT_EQ(r.correspondences[i].track_id, want[i].track_id);
    EXPECT_NEAR(r.correspondences[i].iou, want[i].iou, 1e-12);
  }
}

TEST(Clear, PreviousMatchPersistsOverBetterOverlap) {
  const std::vector<LabelledBox> gt{{0, 1, {0, 0, 10, 10}}, {1, 1, {0, 0, 10, 10}}};
  const std::vector<LabelledBox> hyp{
      {0, 1, {0, 0, 10, 10}},
      {1, 1, {2, 0, 10, 10}},  // IoU 80/120, still above 0.5
      {1, 2, {0, 0, 10, 10}},  // perfect, but would be a switch
  };
  const ClearReport r = clear(gt, hyp, 2).report;
  EXPECT_EQ(r.ids, 0u);
  EXPECT_EQ(r.fp, 1u);
  EXPECT_NEAR(r.motp, (1.0 + 80.0 / 120.0) / 2.0, 1e-12);
}

TEST(Clear, MotaDropsUnderInjectedErrors) {
  const auto base = oracle::perfect_stream();
  const double perfect = clear(base.gt, base.hyp, base.frames).report.mota;

  auto with_fp = base.hyp;
  with_fp.push_back({2, 900, {500, 400, 10, 10}});
  auto with_fn = base.hyp;
  with_fn.erase(with_fn.begin() + 4);
  auto with_ids = base.hyp;
  for (auto& h : with_ids) {
    if (h.frame >= 2 && h.id == 101) h.id = 555;
  }
  for (const auto& hyp : {with_fp, with_fn, with_ids}) {
    const ClearReport r = clear(base.gt, hyp, base.frames).report;
    EXPECT_LT(r.mota, perfect);
    EXPECT_EQ(r.fp + r.fn + r.ids, 1u);
  }
}

TEST(Clear, IndependentOfRecordOrder) {
  const auto c = oracle::crossing_three_frames();
  const ClearResult ref = clear(c.gt, c.hyp, c.frames);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    auto gt = c.gt;
    auto hyp = c.hyp;
    std::shuffle(gt.begin(), gt.end(), rng);
    std::shuffle(hyp.begin(), hyp.end(), rng);
    const ClearResult r = clear(gt, hyp, c.frames);
    EXPECT_EQ(r.correspondences, ref.correspondences);
    expect_report(r.report, ref.report);
  }
}

TEST(Clear, Errors) {
  const std::vector<LabelledBox> gt{{0, 1, {0, 0, 10, 10}}};
  EXPECT_THROW(clear({}, gt, 1), UndefinedMetric);
  EXPECT_THROW(clear(gt, {}, 0), DataError);
  const std::vector<LabelledBox> late{{3, 1, {0, 0, 10, 10}}};
  EXPECT_THROW(clear(gt, late, 2), DataError);
  const std::vector<LabelledBox> dup{{0, 1, {0, 0, 10, 10}}, {0, 1, {5, 5, 10, 10}}};
  EXPECT_THROW(clear(dup, {}, 1), DataError);
  EXPECT_THROW(clear(gt, dup, 1), DataError);
}

Scenario run_preset(const simgen::ScenarioSpec& spec, const pipeline::RunConfig& config,
                    std::uint64_t seed = 3) {
  return pipeline::run_pipeline(simgen::generate(spec, seed), config).scenario;
}

TEST(AttrEval, ZeroNoiseIsPerfect) {
  const Scenario s = run_preset(simgen::without_noise(simgen::preset("crossing-pair")), {});
  const auto eval = pipeline::evaluate(s);
  for (const auto& ch : eval.attributes.channels) {
    EXPECT_EQ(ch.raw.score, 1.0) << ch.channel;
    EXPECT_EQ(ch.raw.mean_offset, 0.0) << ch.channel;
    // filters lag when the truth changes speed, but never by a full threshold
    EXPECT_EQ(ch.filtered.score, 1.0) << ch.channel;
  }
}

TEST(AttrEval, KeepConfigMatchesRaw) {
  pipeline::RunConfig config;
  config.channel_params = bank::ChannelParams::keep();
  const Scenario s = run_preset(simgen::preset("crossing-pair"), config);
  const auto eval = pipeline::evaluate(s);
  for (const auto& ch : eval.attributes.channels) {
    EXPECT_EQ(ch.raw.samples, ch.filtered.samples) << ch.channel;
    EXPECT_EQ(ch.raw.score, ch.filtered.score) << ch.channel;
    EXPECT_EQ(ch.raw.mean_offset, ch.filtered.mean_offset) << ch.channel;
  }
}

TEST(AttrEval, FilteredHeadAgreesWithReferenceAndBeatsRaw) {
  simgen::ScenarioSpec spec = simgen::preset("single-walker");
  spec.noise = {};
  spec.noise.head_sigma = 20.0;
  const Scenario s = run_preset(spec, {});

  // the walker's only track exists from frame 1; feed the raw stream to the
  // reference recursion from there
  std::vector<std::optional<double>> z(s.frame_count);
  for (const auto& o : s.head_observations) z[o.frame] = o.orientation.degrees();
  z[0].reset();
  const auto reference = oracle::reference_angle_filter(z, s.fps, 0.5, 0.02);
  std::size_t compared = 0;
  for (const auto& a : s.attribute_outputs) {
    if (a.channel != Channel::head) continue;
    ASSERT_NEAR(angular_diff(a.value[0], reference[a.frame]), 0.0, 1e-9) << a.frame;
    ++compared;
  }
  EXPECT_EQ(compared, static_cast<std::size_t>(s.frame_count - 1));

  const auto head = pipeline::evaluate(s).attributes.report("head");
  EXPECT_LT(head.filtered.mean_offset, head.raw.mean_offset);
  EXPECT_GT(head.filtered.score, head.raw.score);
}

TEST(AttrEval, InvariantUnderTrackRelabelling) {
  Scenario s = run_preset(simgen::preset("crossing-pair"), {});
  const auto before = pipeline::evaluate(s).attributes;
  auto relabel = [](TrackId id) { return TrackId{1000 - id.value * 7}; };
  for (auto& t : s.tracks) t.track_id = relabel(t.track_id);
  for (auto& a : s.attribute_outputs) a.track_id = relabel(a.track_id);
  const auto after = pipeline::evaluate(s).attributes;
  ASSERT_EQ(before.channels.size(), after.channels.size());
  for (std::size_t i = 0; i < before.channels.size(); ++i) {
    EXPECT_EQ(before.channels[i].channel, after.channels[i].channel);
    EXPECT_EQ(before.channels[i].raw.score, after.channels[i].raw.score);
    EXPECT_EQ(before.channels[i].filtered.score, after.channels[i].filtered.score);
    EXPECT_DOUBLE_EQ(before.channels[i].filtered.mean_offset,
                     after.channels[i].filtered.mean_offset);
  }
}

TEST(AttrEval, NoMatchedFramesIsUndefined) {
  Scenario s = run_preset(simgen::preset("single-walker"), {});
  const auto eval = pipeline::evaluate(s);
  EXPECT_THROW(attr_eval(s, {}), UndefinedMetric);
  EXPECT_THROW(eval.attributes.report("skel.knee"), UndefinedMetric);
}

}  // namespace
}  // namespace detta::metrics
