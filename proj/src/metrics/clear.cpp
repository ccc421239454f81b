#include "detta/metrics/clear.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "detta/core/assignment.hpp"
#include "detta/core/errors.hpp"

namespace detta::metrics {

namespace {

std::vector<std::vector<LabelledBox>> bucket(std::span<const LabelledBox> boxes,
                                             FrameIndex frame_count, const char* stream) {
  std::vector<std::vector<LabelledBox>> frames(static_cast<std::size_t>(frame_count));
  for (const LabelledBox& b : boxes) {
    if (b.frame < 0 || b.frame >= frame_count) {
      throw DataError(std::string(stream) + " record at frame " + std::to_string(b.frame) +
                      " lies outside [0, " + std::to_string(frame_count) + ")");
    }
    frames[static_cast<std::size_t>(b.frame)].push_back(b);
  }
  for (auto& f : frames) {
    std::sort(f.begin(), f.end(),
              [](const LabelledBox& a, const LabelledBox& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < f.size(); ++i) {
      if (f[i].id == f[i - 1].id) {
        throw DataError(std::string(stream) + " id " + std::to_string(f[i].id) +
                        " appears twice in frame " + std::to_string(f[i].frame));
      }
    }
  }
  return frames;
}

}  // namespace

ClearResult clear(std::span<const LabelledBox> gt, std::span<const LabelledBox> hyp,
                  FrameIndex frame_count, double iou_threshold) {
  if (frame_count < 0) throw DataError("negative frame count");
  const auto gt_frames = bucket(gt, frame_count, "ground-truth");
  const auto hyp_frames = bucket(hyp, frame_count, "hypothesis");

  ClearResult result;
  ClearReport& r = result.report;
  double iou_sum = 0.0;

  std::map<std::uint64_t, std::uint64_t> previous;   // gt -> hyp on the previous frame
  std::map<std::uint64_t, std::uint64_t> last_seen;  // gt -> most recent hyp ever matched

  for (FrameIndex f = 0; f < frame_count; ++f) {
    const auto& g = gt_frames[static_cast<std::size_t>(f)];
    const auto& h = hyp_frames[static_cast<std::size_t>(f)];
    r.total_gt += g.size();

    std::vector<std::ptrdiff_t> gt_match(g.size(), -1);
    std::vector<bool> hyp_used(h.size(), false);

    // Keep last frame's pairs that still overlap enough.
    for (std::size_t i = 0; i < g.size(); ++i) {
      auto prev = previous.find(g[i].id);
      if (prev == previous.end()) continue;
      for (std::size_t j = 0; j < h.size(); ++j) {
        if (h[j].id != prev->second || hyp_used[j]) continue;
        if (iou(g[i].bbox, h[j].bbox) >= iou_threshold) {
          gt_match[i] = static_cast<std::ptrdiff_t>(j);
          hyp_used[j] = true;
        }
        break;
      }
    }

    // Match the rest optimally.
    std::vector<std::size_t> free_gt, free_hyp;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (gt_match[i] < 0) free_gt.push_back(i);
    }
    for (std::size_t j = 0; j < h.size(); ++j) {
      if (!hyp_used[j]) free_hyp.push_back(j);
    }
    WeightMatrix w(free_gt.size(), free_hyp.size());
    for (std::size_t a = 0; a < free_gt.size(); ++a) {
      for (std::size_t b = 0; b < free_hyp.size(); ++b) {
        w.at(a, b) = iou(g[free_gt[a]].bbox, h[free_hyp[b]].bbox);
      }
    }
    for (const auto& [a, b] : max_weight_assignment(w, iou_threshold)) {
      gt_match[free_gt[a]] = static_cast<std::ptrdiff_t>(free_hyp[b]);
      hyp_used[free_hyp[b]] = true;
    }

    previous.clear();
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (gt_match[i] < 0) {
        ++r.fn;
        continue;
      }
      const LabelledBox& hb = h[static_cast<std::size_t>(gt_match[i])];
      auto last = last_seen.find(g[i].id);
      if (last != last_seen.end() && last->second != hb.id) ++r.ids;
      last_seen[g[i].id] = hb.id;
      previous[g[i].id] = hb.id;

      const double overlap = iou(g[i].bbox, hb.bbox);
      iou_sum += overlap;
      ++r.matches;
      result.correspondences.push_back(
          {f, static_cast<PersonId>(g[i].id), TrackId{hb.id}, overlap});
    }
    for (bool used : hyp_used) {
      if (!used) ++r.fp;
    }
  }

  if (r.total_gt == 0) throw UndefinedMetric("CLEAR metrics need at least one ground-truth box");
  const double total = static_cast<double>(r.total_gt);
  r.mota = 1.0 - static_cast<double>(r.fp + r.fn + r.ids) / total;
  r.motp = r.matches > 0 ? iou_sum / static_cast<double>(r.matches) : 0.0;
  r.ids_rate = static_cast<double>(r.ids) / total;
  return result;
}

ClearResult clear(const Scenario& scenario, double iou_threshold) {
  std::vector<LabelledBox> gt, hyp;
  gt.reserve(scenario.gt.size());
  hyp.reserve(scenario.tracks.size());
  for (const auto& r : scenario.gt) gt.push_back({r.frame.frame_index, r.gt_person_id, r.bbox});
  for (const auto& r : scenario.tracks) hyp.push_back({r.frame, r.track_id.value, r.bbox});
  return clear(gt, hyp, scenario.frame_count, iou_threshold);
}

}  // namespace detta::metrics
