#include "detta/simgen/spec_json.hpp"

#include <fstream>
#include <string>

#include "detta/core/errors.hpp"

using nlohmann::json;

namespace detta::simgen {

namespace {

json bbox_json(const BBox& b) { return json::array({b.x, b.y, b.w, b.h}); }

BBox bbox_from(const json& j) {
  if (!j.is_array() || j.size() != 4) throw ConfigError("box must be [x, y, w, h]");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

template <typename T>
void read_joint_array(const json& j, const char* key, std::array<T, kJointCount>& out,
                      auto&& convert) {
  if (!j.contains(key)) return;
  const json& v = j.at(key);
  if (v.is_number()) {
    out.fill(convert(v));
    return;
  }
  if (v.is_object()) {
    for (const auto& [name, value] : v.items()) {
      const auto joint = parse_joint(name);
      if (!joint) throw ConfigError(std::string(key) + ": unknown joint '" + name + "'");
      out[index_of(*joint)] = convert(value);
    }
    return;
  }
  throw ConfigError(std::string(key) + " must be a number or an object keyed by joint");
}

}  // namespace

void to_json(json& j, const ScenarioSpec& s) {
  json persons = json::array();
  for (const PersonSpec& p : s.persons) {
    json motion = json::array();
    for (const auto& seg : p.motion) motion.push_back({{"frames", seg.frames}, {"vx", seg.vx}, {"vy", seg.vy}});
    json head = json::array();
    for (const auto& seg : p.head) head.push_back({{"frames", seg.frames}, {"rate", seg.rate}});
    persons.push_back({{"id", p.id},
                       {"entry", p.entry},
                       {"exit", p.exit},
                       {"box", bbox_json(p.start)},
                       {"motion", motion},
                       {"head_initial", p.head_initial},
                       {"head", head}});
  }
  json layout = json::object(), articulation = json::object();
  json joint_sigma = json::object(), joint_dropout = json::object();
  for (JointName jn : kAllJoints) {
    const std::string name(to_string(jn));
    const std::size_t i = index_of(jn);
    layout[name] = {s.skeleton.layout[i].u, s.skeleton.layout[i].v};
    articulation[name] = {{"amplitude", s.skeleton.articulation[i].amplitude},
                          {"period", s.skeleton.articulation[i].period}};
    joint_sigma[name] = s.noise.joint_sigma[i];
    joint_dropout[name] = s.noise.joint_dropout[i];
  }
  j = {{"name", s.name},
       {"fps", s.fps},
       {"frames", s.frames},
       {"image", {{"width", s.image_width}, {"height", s.image_height}}},
       {"skeleton", {{"layout", layout}, {"articulation", articulation}, {"margin", s.skeleton.margin}}},
       {"noise",
        {{"det_miss_prob", s.noise.det_miss_prob},
         {"det_fp_rate", s.noise.det_fp_rate},
         {"det_center_sigma", s.noise.det_center_sigma},
         {"det_size_sigma", s.noise.det_size_sigma},
         {"head_sigma", s.noise.head_sigma},
         {"head_outlier_prob", s.noise.head_outlier_prob},
         {"joint_sigma", joint_sigma},
         {"joint_dropout", joint_dropout}}},
       {"persons", persons}};
}

void from_json(const json& j, ScenarioSpec& s) {
  s = ScenarioSpec{};
  s.name = j.value("name", s.name);
  s.fps = j.value("fps", s.fps);
  s.frames = j.at("frames").get<FrameIndex>();
  if (j.contains("image")) {
    s.image_width = j.at("image").value("width", s.image_width);
    s.image_height = j.at("image").value("height", s.image_height);
  }
  if (j.contains("skeleton")) {
    const json& sk = j.at("skeleton");
    s.skeleton.margin = sk.value("margin", s.skeleton.margin);
    read_joint_array(sk, "layout", s.skeleton.layout, [](const json& v) {
      return Point2{v.at(0).get<double>(), v.at(1).get<double>()};
    });
    read_joint_array(sk, "articulation", s.skeleton.articulation, [](const json& v) {
      return JointArticulation{v.at("amplitude").get<double>(), v.at("period").get<double>()};
    });
  }
  if (j.contains("noise")) {
    const json& n = j.at("noise");
    s.noise.det_miss_prob = n.value("det_miss_prob", 0.0);
    s.noise.det_fp_rate = n.value("det_fp_rate", 0.0);
    s.noise.det_center_sigma = n.value("det_center_sigma", 0.0);
    s.noise.det_size_sigma = n.value("det_size_sigma", 0.0);
    s.noise.head_sigma = n.value("head_sigma", 0.0);
    s.noise.head_outlier_prob = n.value("head_outlier_prob", 0.0);
    auto number = [](const json& v) { return v.get<double>(); };
    read_joint_array(n, "joint_sigma", s.noise.joint_sigma, number);
    read_joint_array(n, "joint_dropout", s.noise.joint_dropout, number);
  }
  for (const json& pj : j.value("persons", json::array())) {
    PersonSpec p;
    p.id = pj.at("id").get<PersonId>();
    p.entry = pj.at("entry").get<FrameIndex>();
    p.exit = pj.at("exit").get<FrameIndex>();
    p.start = bbox_from(pj.at("box"));
    for (const json& seg : pj.at("motion")) {
      p.motion.push_back({seg.at("frames").get<std::int64_t>(), seg.value("vx", 0.0), seg.value("vy", 0.0)});
    }
    p.head_initial = pj.value("head_initial", 0.0);
    if (pj.contains("head")) {
      for (const json& seg : pj.at("head")) {
        p.head.push_back({seg.at("frames").get<std::int64_t>(), seg.value("rate", 0.0)});
      }
    } else {
      p.head.push_back({p.lifetime(), 0.0});
    }
    s.persons.push_back(p);
  }
}

ScenarioSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open spec file " + path.string());
  try {
    return json::parse(in).get<ScenarioSpec>();
  } catch (const json::exception& e) {
    throw ConfigError("spec file " + path.string() + ": " + e.what());
  }
}

void save_spec(const ScenarioSpec& spec, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write spec file " + path.string());
  out << json(spec).dump(2) << '\n';
}

}  // namespace detta::simgen
