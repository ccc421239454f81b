#include "detta/pipeline/run_config.hpp"

#include <fstream>
#include <set>
#include <string>

#include "detta/core/errors.hpp"

using nlohmann::json;

namespace detta::pipeline {

bank::CostModel RunConfig::default_cost_model() {
  bank::CostModel c;
  c.fixed_per_frame = 0.001;
  c.per_call = {{bank::AnalysisModule::head, 0.009}, {bank::AnalysisModule::skeleton, 0.009}};
  return c;
}

void RunConfig::validate() const {
  try {
    channel_params.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("channel_params: ") + e.what());
  }
  for (bank::AnalysisModule m : bank::kAllModules) schedule.at(m);
  cost_model.validate();
  tracker.validate();
  if (bank.expire_after < 1) throw ConfigError("bank.expire_after must be >= 1");
  if (!(eval.clear_iou_threshold > 0.0 && eval.clear_iou_threshold <= 1.0)) {
    throw ConfigError("eval.clear_iou_threshold must lie in (0, 1]");
  }
  if (!(eval.attributes.pco_threshold >= 0.0 && eval.attributes.pco_threshold <= 180.0)) {
    throw ConfigError("eval.pco_threshold must lie in [0, 180]");
  }
}

json to_json(const RunConfig& c) {
  json params = json::object();
  for (Channel ch : kAllChannels) {
    params[std::string(to_string(ch))] = {{"g", c.channel_params[ch].g},
                                          {"h", c.channel_params[ch].h}};
  }
  json schedule = json::object();
  for (const auto& [m, s] : c.schedule.modules()) {
    schedule[std::string(bank::to_string(m))] = {{"stride", s.stride}, {"phase", s.phase}};
  }
  json per_call = json::object();
  for (const auto& [m, cost] : c.cost_model.per_call) {
    per_call[std::string(bank::to_string(m))] = cost;
  }
  return {{"seed", c.seed},
          {"channel_params", params},
          {"schedule", schedule},
          {"cost_model", {{"fixed_per_frame", c.cost_model.fixed_per_frame}, {"per_call", per_call}}},
          {"tracker",
           {{"iou_threshold", c.tracker.iou_threshold},
            {"confirm_hits", c.tracker.confirm_hits},
            {"kill_misses", c.tracker.kill_misses}}},
          {"bank", {{"expire_after", c.bank.expire_after}}},
          {"eval",
           {{"clear_iou_threshold", c.eval.clear_iou_threshold},
            {"pco_threshold", c.eval.attributes.pco_threshold},
            {"crop_min_iou", c.eval.attributes.crop_min_iou}}}};
}

RunConfig run_config_from_json(const json& j) {
  RunConfig c;
  if (!j.is_object()) throw ConfigError("run config: expected a JSON object");
  static const std::set<std::string> known = {"seed",    "channel_params", "schedule", "cost_model",
                                              "tracker", "bank",           "eval"};
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) throw ConfigError("run config: unknown key '" + key + "'");
  }
  try {
    c.seed = j.value("seed", c.seed);
    if (j.contains("channel_params")) {
      for (const auto& [name, value] : j.at("channel_params").items()) {
        const auto ch = parse_channel(name);
        if (!ch) throw ConfigError("channel_params: unknown channel '" + name + "'");
        gh::GHParams p = c.channel_params[*ch];
        p.g = value.value("g", p.g);
        p.h = value.value("h", p.h);
        try {
          c.channel_params.set(*ch, p);
        } catch (const InvalidArgument& e) {
          throw ConfigError("channel_params." + name + ": " + e.what());
        }
      }
    }
    if (j.contains("schedule")) {
      for (const auto& [name, value] : j.at("schedule").items()) {
        const auto m = bank::parse_module(name);
        if (!m) throw ConfigError("schedule: unknown analysis module '" + name + "'");
        const std::int64_t stride = value.value("stride", std::int64_t{1});
        if (value.contains("phase")) {
          c.schedule.set(*m, stride, value.at("phase").get<std::int64_t>());
        } else {
          c.schedule.set(*m, stride);
        }
      }
    }
    if (j.contains("cost_model")) {
      const json& cm = j.at("cost_model");
      c.cost_model.fixed_per_frame = cm.value("fixed_per_frame", c.cost_model.fixed_per_frame);
      if (cm.contains("per_call")) {
        c.cost_model.per_call.clear();
        for (const auto& [name, value] : cm.at("per_call").items()) {
          const auto m = bank::parse_module(name);
          if (!m) throw ConfigError("cost_model: unknown analysis module '" + name + "'");
          c.cost_model.per_call[*m] = value.get<double>();
        }
      }
    }
    if (j.contains("tracker")) {
      const json& t = j.at("tracker");
      c.tracker.iou_threshold = t.value("iou_threshold", c.tracker.iou_threshold);
      c.tracker.confirm_hits = t.value("confirm_hits", c.tracker.confirm_hits);
      c.tracker.kill_misses = t.value("kill_misses", c.tracker.kill_misses);
    }
    if (j.contains("bank")) c.bank.expire_after = j.at("bank").value("expire_after", c.bank.expire_after);
    if (j.contains("eval")) {
      const json& e = j.at("eval");
      c.eval.clear_iou_threshold = e.value("clear_iou_threshold", c.eval.clear_iou_threshold);
      c.eval.attributes.pco_threshold = e.value("pco_threshold", c.eval.attributes.pco_threshold);
      c.eval.attributes.crop_min_iou = e.value("crop_min_iou", c.eval.attributes.crop_min_iou);
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("run config: ") + e.what());
  }
  c.validate();
  return c;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("config file " + path.string() + ": " + e.what());
  }
  return run_config_from_json(j);
}

}  // namespace detta::pipeline
