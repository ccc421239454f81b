#include "detta/core/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "detta/core/errors.hpp"
#include "detta/core/numfmt.hpp"

namespace detta {

namespace {

constexpr std::string_view kMagic = "detta-scenario";

void put(std::string& line, double v) {
  line += ' ';
  line += format_fixed6(v);
}

void put(std::string& line, std::uint64_t v) {
  line += ' ';
  line += std::to_string(v);
}

void put_bbox(std::string& line, const BBox& b) {
  put(line, b.x);
  put(line, b.y);
  put(line, b.w);
  put(line, b.h);
}

std::string gt_line(const GroundTruthRecord& r) {
  std::string line = "gt " + std::to_string(r.frame.frame_index);
  put(line, static_cast<std::uint64_t>(r.gt_person_id));
  put_bbox(line, r.bbox);
  put(line, r.head_theta);
  put(line, r.head_size);
  for (const GtJoint& j : r.skeleton) {
    line += j.visible ? " 1" : " 0";
    put(line, j.point.u);
    put(line, j.point.v);
  }
  return line;
}

std::string det_line(const DetectionRecord& r) {
  std::string line = "det " + std::to_string(r.frame);
  put_bbox(line, r.bbox);
  return line;
}

std::string head_line(const HeadObservationRecord& r) {
  std::string line = "obs-head " + std::to_string(r.frame);
  put(line, static_cast<std::uint64_t>(r.person_id));
  put(line, r.orientation.degrees());
  return line;
}

std::string skel_line(const SkeletonObservationRecord& r) {
  std::string line = "obs-skel " + std::to_string(r.frame);
  put(line, static_cast<std::uint64_t>(r.person_id));
  for (const auto& joint : r.skeleton.joints) {
    if (joint) {
      line += " 1";
      put(line, joint->u);
      put(line, joint->v);
    } else {
      line += " 0 0.000000 0.000000";
    }
  }
  return line;
}

std::string trk_line(const TrackRecord& r) {
  std::string line = "trk " + std::to_string(r.frame);
  put(line, r.track_id.value);
  put_bbox(line, r.bbox);
  return line;
}

std::string attr_line(const AttributeOutputRecord& r) {
  std::string line = "trk-attr " + std::to_string(r.frame);
  put(line, r.track_id.value);
  line += ' ';
  line += to_string(r.channel);
  for (std::size_t i = 0; i < channel_arity(r.channel); ++i) put(line, r.value[i]);
  line += r.observed ? " 1" : " 0";
  return line;
}

FrameIndex frame_of(const GroundTruthRecord& r) { return r.frame.frame_index; }
template <typename R>
FrameIndex frame_of(const R& r) {
  return r.frame;
}

// Emits every record of `records` that belongs to `frame`, advancing `pos`.
template <typename R, typename Fmt>
void emit_frame(std::ostream& out, const std::vector<R>& records, std::size_t& pos,
                FrameIndex frame, Fmt fmt) {
  while (pos < records.size() && frame_of(records[pos]) == frame) {
    out << fmt(records[pos]) << '\n';
    ++pos;
  }
}

template <typename R>
void check_ordered(const std::vector<R>& records, FrameIndex frame_count, std::string_view kind) {
  FrameIndex prev = 0;
  for (const R& r : records) {
    const FrameIndex f = frame_of(r);
    if (f < prev || f >= frame_count) {
      throw DataError("write_scenario: " + std::string(kind) + " record at frame " +
                      std::to_string(f) + " is out of order or outside [0, " +
                      std::to_string(frame_count) + ")");
    }
    prev = f;
  }
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

class LineParser {
 public:
  LineParser(std::size_t line_no, std::vector<std::string_view> tokens)
      : line_no_(line_no), tokens_(std::move(tokens)) {}

  void expect_count(std::size_t n) const {
    if (tokens_.size() != n) {
      fail("'" + std::string(tokens_[0]) + "' record needs " + std::to_string(n) +
           " fields, found " + std::to_string(tokens_.size()));
    }
  }

  double real() {
    double v = 0.0;
    if (!parse_double(next(), v)) fail("bad number '" + std::string(last()) + "'");
    return v;
  }

  FrameIndex frame() {
    std::int64_t v = 0;
    if (!parse_int(next(), v) || v < 0) fail("bad frame index '" + std::string(last()) + "'");
    return v;
  }

  std::uint64_t positive_id() {
    std::uint64_t v = 0;
    if (!parse_uint(next(), v) || v == 0) fail("bad id '" + std::string(last()) + "'");
    return v;
  }

  bool flag() {
    const std::string_view t = next();
    if (t == "1") return true;
    if (t == "0") return false;
    fail("bad flag '" + std::string(t) + "'");
  }

  BBox bbox() {
    BBox b;
    b.x = real();
    b.y = real();
    b.w = real();
    b.h = real();
    if (!b.valid()) fail("bounding box needs positive width and height");
    return b;
  }

  std::string_view word() { return next(); }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_no_, what); }

 private:
  std::string_view next() {
    if (pos_ >= tokens_.size()) fail("record truncated");
    return tokens_[pos_++];
  }
  std::string_view last() const { return tokens_[pos_ - 1]; }

  std::size_t line_no_;
  std::vector<std::string_view> tokens_;
  std::size_t pos_ = 1;  // token 0 is the record kind
};

template <typename R>
void sort_by_frame(std::vector<R>& records) {
  std::stable_sort(records.begin(), records.end(),
                   [](const R& a, const R& b) { return frame_of(a) < frame_of(b); });
}

}  // namespace

void write_scenario(const Scenario& s, std::ostream& out) {
  if (!(s.fps > 0.0)) throw DataError("write_scenario: fps must be positive");
  check_ordered(s.gt, s.frame_count, "gt");
  check_ordered(s.detections, s.frame_count, "det");
  check_ordered(s.head_observations, s.frame_count, "obs-head");
  check_ordered(s.skeleton_observations, s.frame_count, "obs-skel");
  check_ordered(s.tracks, s.frame_count, "trk");
  check_ordered(s.attribute_outputs, s.frame_count, "trk-attr");

  out << kMagic << " v" << kScenarioFormatVersion << " fps=" << format_fixed6(s.fps)
      << " frames=" << s.frame_count << '\n';
  std::size_t gt = 0, det = 0, head = 0, skel = 0, trk = 0, attr = 0;
  for (FrameIndex f = 0; f < s.frame_count; ++f) {
    emit_frame(out, s.gt, gt, f, gt_line);
    emit_frame(out, s.detections, det, f, det_line);
    emit_frame(out, s.head_observations, head, f, head_line);
    emit_frame(out, s.skeleton_observations, skel, f, skel_line);
    emit_frame(out, s.tracks, trk, f, trk_line);
    emit_frame(out, s.attribute_outputs, attr, f, attr_line);
  }
}

void write_scenario(const Scenario& scenario, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot open " + path.string() + " for writing");
  write_scenario(scenario, out);
  if (!out) throw DataError("write to " + path.string() + " failed");
}

Scenario read_scenario(std::istream& in) {
  Scenario s;
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (text.empty()) throw ParseError(1, "missing header");

  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_frames = false;
  FrameIndex max_frame = -1;

  while (pos < text.size()) {
    ++line_no;
    const std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) {
      throw ParseError(line_no, "truncated record (no terminating newline)");
    }
    std::string_view line(text.data() + pos, nl - pos);
    pos = nl + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto tokens = split(line);
    if (tokens.empty()) throw ParseError(line_no, "empty line");

    if (line_no == 1) {
      if (tokens[0] != kMagic) throw ParseError(1, "not a scenario file");
      if (tokens.size() < 3) throw ParseError(1, "header truncated");
      if (tokens[1] != "v1") {
        throw UnsupportedVersion("unsupported scenario format version '" +
                                 std::string(tokens[1]) + "'");
      }
      bool have_fps = false;
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        const auto eq = tokens[i].find('=');
        const auto key = tokens[i].substr(0, eq);
        const auto value = eq == std::string_view::npos ? std::string_view{}
                                                        : tokens[i].substr(eq + 1);
        if (key == "fps") {
          if (!parse_double(value, s.fps) || !(s.fps > 0.0)) throw ParseError(1, "bad fps");
          have_fps = true;
        } else if (key == "frames") {
          std::int64_t n = 0;
          if (!parse_int(value, n) || n < 0) throw ParseError(1, "bad frame count");
          s.frame_count = n;
          have_frames = true;
        } else {
          throw ParseError(1, "unknown header field '" + std::string(tokens[i]) + "'");
        }
      }
      if (!have_fps) throw ParseError(1, "header lacks fps");
      continue;
    }

    const std::string_view kind = tokens[0];
    LineParser p(line_no, tokens);
    FrameIndex frame = 0;
    if (kind == "gt") {
      p.expect_count(9 + 3 * kJointCount);
      GroundTruthRecord r;
      frame = p.frame();
      r.frame = s.stamp(frame);
      r.gt_person_id = static_cast<PersonId>(p.positive_id());
      r.bbox = p.bbox();
      r.head_theta = wrap_angle(p.real());
      r.head_size = p.real();
      if (!(r.head_size > 0.0)) p.fail("head_size must be positive");
      for (GtJoint& j : r.skeleton) {
        j.visible = p.flag();
        j.point.u = p.real();
        j.point.v = p.real();
      }
      s.gt.push_back(r);
    } else if (kind == "det") {
      p.expect_count(6);
      DetectionRecord r;
      frame = r.frame = p.frame();
      r.bbox = p.bbox();
      s.detections.push_back(r);
    } else if (kind == "obs-head") {
      p.expect_count(4);
      HeadObservationRecord r;
      frame = r.frame = p.frame();
      r.person_id = static_cast<PersonId>(p.positive_id());
      r.orientation = HeadOrientation(p.real());
      s.head_observations.push_back(r);
    } else if (kind == "obs-skel") {
      p.expect_count(3 + 3 * kJointCount);
      SkeletonObservationRecord r;
      frame = r.frame = p.frame();
      r.person_id = static_cast<PersonId>(p.positive_id());
      for (auto& joint : r.skeleton.joints) {
        const bool visible = p.flag();
        const double u = p.real();
        const double v = p.real();
        if (visible) joint = Point2{u, v};
      }
      s.skeleton_observations.push_back(r);
    } else if (kind == "trk") {
      p.expect_count(7);
      TrackRecord r;
      frame = r.frame = p.frame();
      r.track_id = TrackId{p.positive_id()};
      r.bbox = p.bbox();
      s.tracks.push_back(r);
    } else if (kind == "trk-attr") {
      if (tokens.size() < 4) p.expect_count(5);
      AttributeOutputRecord r;
      frame = r.frame = p.frame();
      r.track_id = TrackId{p.positive_id()};
      const auto channel = parse_channel(p.word());
      if (!channel) p.fail("unknown channel '" + std::string(tokens[3]) + "'");
      r.channel = *channel;
      p.expect_count(5 + channel_arity(r.channel));
      for (std::size_t i = 0; i < channel_arity(r.channel); ++i) r.value[i] = p.real();
      if (is_angular(r.channel)) r.value[0] = wrap_angle(r.value[0]);
      r.observed = p.flag();
      s.attribute_outputs.push_back(r);
    } else {
      throw ParseError(line_no, "unknown record kind '" + std::string(kind) + "'");
    }
    if (have_frames && frame >= s.frame_count) {
      throw ParseError(line_no, "frame " + std::to_string(frame) + " beyond declared frame count");
    }
    max_frame = std::max(max_frame, frame);
  }

  if (line_no == 0) throw ParseError(1, "missing header");
  if (!have_frames) s.frame_count = max_frame + 1;

  sort_by_frame(s.gt);
  sort_by_frame(s.detections);
  sort_by_frame(s.head_observations);
  sort_by_frame(s.skeleton_observations);
  sort_by_frame(s.tracks);
  sort_by_frame(s.attribute_outputs);
  return s;
}

Scenario read_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open scenario " + path.string());
  return read_scenario(in);
}

ScenarioIndex::ScenarioIndex(const Scenario& s)
    : gt_(static_cast<std::size_t>(s.frame_count)),
      det_(gt_.size()),
      head_(gt_.size()),
      skel_(gt_.size()),
      trk_(gt_.size()),
      attr_(gt_.size()) {
  for (const auto& r : s.gt) gt_[slot(r.frame.frame_index)].push_back(&r);
  for (const auto& r : s.detections) det_[slot(r.frame)].push_back(&r);
  for (const auto& r : s.head_observations) head_[slot(r.frame)].push_back(&r);
  for (const auto& r : s.skeleton_observations) skel_[slot(r.frame)].push_back(&r);
  for (const auto& r : s.tracks) trk_[slot(r.frame)].push_back(&r);
  for (const auto& r : s.attribute_outputs) attr_[slot(r.frame)].push_back(&r);
}

std::size_t ScenarioIndex::slot(FrameIndex f) const {
  if (f < 0 || f >= static_cast<FrameIndex>(gt_.size())) {
    throw DataError("frame " + std::to_string(f) + " outside scenario range");
  }
  return static_cast<std::size_t>(f);
}

}  // namespace detta
