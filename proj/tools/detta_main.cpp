// detta: simulate, run, sweep, freeflight and eval subcommands.
//
// Exit codes: 0 success, 1 validation/config error, 2 data error,
// 3 undefined metric.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "detta/core/errors.hpp"
#include "detta/core/scenario.hpp"
#include "detta/pipeline/experiments.hpp"
#include "detta/pipeline/pipeline.hpp"
#include "detta/pipeline/reports.hpp"
#include "detta/pipeline/run_config.hpp"
#include "detta/simgen/generator.hpp"
#include "detta/simgen/spec_json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace detta;

namespace {

enum ExitCode : int { kOk = 0, kConfig = 1, kData = 2, kUndefined = 3 };

struct CommonOptions {
  std::optional<std::uint64_t> seed;
  std::string config;
  std::string out;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--seed", o.seed, "Random seed (recorded in the provenance file)");
  cmd->add_option("--config", o.config, "JSON configuration file");
  cmd->add_option("--out", o.out, "Output directory")->required();
}

fs::path prepare_out(const std::string& dir) {
  fs::path out(dir);
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec) throw ConfigError("cannot create output directory " + dir + ": " + ec.message());
  return out;
}

pipeline::RunConfig load_config(const CommonOptions& o) {
  pipeline::RunConfig config =
      o.config.empty() ? pipeline::RunConfig{} : pipeline::load_run_config(o.config);
  if (o.seed) config.seed = *o.seed;
  config.validate();
  return config;
}

void write_provenance(const fs::path& out, const std::string& command, const json& inputs,
                      const json& config) {
  json j = {{"command", command}, {"inputs", inputs}, {"config", config}};
  pipeline::write_text(j.dump(2) + "\n", out / "config.json");
}

std::string path_arg(const std::string& p) { return fs::path(p).generic_string(); }

int cmd_simulate(const CommonOptions& common, const std::string& preset_name,
                 const std::string& spec_path, bool zero_noise) {
  const std::string spec_file = !spec_path.empty() ? spec_path : common.config;
  if (preset_name.empty() == spec_file.empty()) {
    throw ConfigError("simulate needs exactly one of --preset or --spec");
  }
  simgen::ScenarioSpec spec =
      preset_name.empty() ? simgen::load_spec(spec_file) : simgen::preset(preset_name);
  if (zero_noise) spec = simgen::without_noise(std::move(spec));
  const std::uint64_t seed = common.seed.value_or(1);

  const Scenario scenario = simgen::generate(spec, seed);
  const fs::path out = prepare_out(common.out);
  write_scenario(scenario, out / "scenario.txt");
  simgen::save_spec(spec, out / "spec.json");
  write_provenance(out, "simulate",
                   {{"preset", preset_name}, {"spec", path_arg(spec_file)}, {"zero_noise", zero_noise}},
                   {{"seed", seed}, {"spec", spec}});

  std::cout << "simulated '" << spec.name << "' seed " << seed << ": " << scenario.frame_count
            << " frames, " << spec.persons.size() << " persons, " << scenario.detections.size()
            << " detections -> " << (out / "scenario.txt").generic_string() << '\n';
  return kOk;
}

int cmd_run(const CommonOptions& common, const std::string& scenario_path,
            std::optional<std::int64_t> stride, bool wall_clock) {
  pipeline::RunConfig config = load_config(common);
  if (stride) config.schedule = bank::FreeFlightConfig::uniform(*stride);
  const Scenario input = read_scenario(fs::path(scenario_path));

  const pipeline::RunResult run = pipeline::run_pipeline(input, config, wall_clock);
  const fs::path out = prepare_out(common.out);
  write_scenario(run.scenario, out / "scenario.txt");
  pipeline::write_cost_csv(run, out / "cost.csv");
  write_provenance(out, "run", {{"scenario", path_arg(scenario_path)}}, pipeline::to_json(config));

  std::cout << "ran " << input.frame_count << " frames: " << run.scenario.tracks.size()
            << " track records, " << run.scenario.attribute_outputs.size()
            << " attribute records, model " << pipeline::csv_number(run.cost.effective_hz) << " Hz";
  if (run.wall_clock_hz) std::cout << ", wall clock " << pipeline::csv_number(*run.wall_clock_hz) << " Hz";
  std::cout << '\n';
  return kOk;
}

int cmd_eval(const CommonOptions& common, const std::string& scenario_path) {
  const pipeline::RunConfig config = load_config(common);
  const Scenario scenario = read_scenario(fs::path(scenario_path));
  const pipeline::Evaluation eval = pipeline::evaluate(scenario, config.eval);

  const fs::path out = prepare_out(common.out);
  pipeline::write_clear_csv(eval.clear.report, out / "clear.csv");
  pipeline::write_attributes_csv(eval.attributes, out / "attributes.csv");
  const std::string summary = pipeline::summary_table(eval);
  pipeline::write_text(summary, out / "summary.txt");
  write_provenance(out, "eval", {{"scenario", path_arg(scenario_path)}}, pipeline::to_json(config));
  std::cout << summary;
  return kOk;
}

int cmd_sweep(const CommonOptions& common, const std::string& scenario_path,
              const std::string& channel, const std::vector<double>& g_grid,
              const std::vector<double>& h_grid) {
  const pipeline::RunConfig config = load_config(common);
  const Scenario input = read_scenario(fs::path(scenario_path));
  const pipeline::SweepResult result = pipeline::sweep(input, channel, g_grid, h_grid, config);

  const fs::path out = prepare_out(common.out);
  pipeline::write_sweep_csv(result, out / "sweep.csv");
  write_provenance(out, "sweep",
                   {{"scenario", path_arg(scenario_path)}, {"channel", channel},
                    {"g_grid", g_grid}, {"h_grid", h_grid}},
                   pipeline::to_json(config));

  const auto& best = result.cells[result.best_index];
  std::cout << "sweep " << result.channel << ": raw score " << pipeline::csv_number(result.raw.score)
            << ", best g=" << pipeline::csv_number(best.g) << " h=" << pipeline::csv_number(best.h)
            << " score " << pipeline::csv_number(best.filtered.score) << '\n';
  return kOk;
}

int cmd_freeflight(const CommonOptions& common, const std::string& scenario_path,
                   const std::string& channel, const std::vector<std::int64_t>& strides,
                   double fixed_cost, double call_cost) {
  const pipeline::RunConfig config = load_config(common);
  const Scenario input = read_scenario(fs::path(scenario_path));
  bank::CostModel cost;
  cost.fixed_per_frame = fixed_cost;
  cost.per_call = {{bank::AnalysisModule::head, call_cost}, {bank::AnalysisModule::skeleton, call_cost}};
  const pipeline::FreeflightTable table = pipeline::freeflight(input, channel, strides, cost, config);

  const fs::path out = prepare_out(common.out);
  pipeline::write_freeflight_csv(table, out / "freeflight.csv");
  write_provenance(out, "freeflight",
                   {{"scenario", path_arg(scenario_path)}, {"channel", channel}, {"strides", strides},
                    {"fixed_cost", fixed_cost}, {"call_cost", call_cost}},
                   pipeline::to_json(config));

  std::cout << "stride  keep     predict  model Hz\n";
  for (const auto& r : table.rows) {
    std::cout << r.stride << "       " << pipeline::csv_number(r.keep.score) << " "
              << pipeline::csv_number(r.predict.score) << " " << pipeline::csv_number(r.model_hz)
              << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Track-keyed temporal filtering and free-flight scheduling experiments"};
  app.require_subcommand(1);

  CommonOptions common;

  auto* simulate = app.add_subcommand("simulate", "Generate a synthetic scenario");
  add_common(simulate, common);
  std::string preset_name, spec_path;
  bool zero_noise = false;
  simulate->add_option("--preset", preset_name, "Built-in scenario preset");
  simulate->add_option("--spec", spec_path, "Scenario spec file (JSON)");
  simulate->add_flag("--zero-noise", zero_noise, "Switch off every noise source");

  auto* run = app.add_subcommand("run", "Track and filter a scenario");
  add_common(run, common);
  std::string scenario_path;
  std::optional<std::int64_t> stride;
  bool wall_clock = false;
  run->add_option("--scenario", scenario_path, "Input scenario file")->required();
  run->add_option("--stride", stride, "Run every analysis module at this stride");
  run->add_flag("--wall-clock", wall_clock, "Also report measured wall-clock throughput");

  std::string channel = "head";
  auto* sweep = app.add_subcommand("sweep", "Grid search over filter gains");
  add_common(sweep, common);
  std::vector<double> g_grid = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  std::vector<double> h_grid = {0.0, 0.02, 0.1, 0.2};
  sweep->add_option("--scenario", scenario_path, "Input scenario file")->required();
  sweep->add_option("--channel", channel, "head, skeleton or skel.<joint>");
  sweep->add_option("--g-grid", g_grid, "Comma-separated g values")->delimiter(',');
  sweep->add_option("--h-grid", h_grid, "Comma-separated h values")->delimiter(',');

  auto* ff = app.add_subcommand("freeflight", "Keep vs predict across analysis strides");
  add_common(ff, common);
  std::vector<std::int64_t> strides(std::begin(pipeline::kDefaultStrides),
                                    std::end(pipeline::kDefaultStrides));
  double fixed_cost = 0.001, call_cost = 0.009;
  ff->add_option("--scenario", scenario_path, "Input scenario file")->required();
  ff->add_option("--channel", channel, "head, skeleton or skel.<joint>");
  ff->add_option("--strides", strides, "Comma-separated strides")->delimiter(',');
  ff->add_option("--fixed-cost", fixed_cost, "Per-frame pipeline overhead in seconds");
  ff->add_option("--call-cost", call_cost, "Per-call analysis cost in seconds");

  auto* eval = app.add_subcommand("eval", "Score a run's tracks and attributes");
  add_common(eval, common);
  eval->add_option("--scenario", scenario_path, "Scenario with trk and trk-attr records")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }

  try {
    if (*simulate) return cmd_simulate(common, preset_name, spec_path, zero_noise);
    if (*run) return cmd_run(common, scenario_path, stride, wall_clock);
    if (*sweep) return cmd_sweep(common, scenario_path, channel, g_grid, h_grid);
    if (*ff) return cmd_freeflight(common, scenario_path, channel, strides, fixed_cost, call_cost);
    if (*eval) return cmd_eval(common, scenario_path);
  } catch (const UndefinedMetric& e) {
    std::cerr << "error: undefined metric: " << e.what() << '\n';
    return kUndefined;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfig;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  }
  return kOk;
}
