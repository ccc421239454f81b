#include "detta/pipeline/reports.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "detta/core/errors.hpp"
#include "detta/core/numfmt.hpp"

namespace detta::pipeline {

std::string csv_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return format_fixed6(value);
}

void write_text(const std::string& text, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw DataError("write to " + path.string() + " failed");
}

void write_cost_csv(const RunResult& run, const std::filesystem::path& path) {
  std::ostringstream os;
  os << "frames,total_seconds,model_hz,analytic_hz,analytic_speedup,dropped_observations";
  if (run.wall_clock_hz) os << ",wall_clock_hz";
  os << '\n';
  os << run.cost.frames << ',' << csv_number(run.cost.total_seconds) << ','
     << csv_number(run.cost.effective_hz) << ','
     << (run.cost.analytic_hz ? csv_number(*run.cost.analytic_hz) : "") << ','
     << (run.cost.analytic_speedup ? csv_number(*run.cost.analytic_speedup) : "") << ','
     << run.dropped;
  if (run.wall_clock_hz) os << ',' << csv_number(*run.wall_clock_hz);
  os << '\n';
  write_text(os.str(), path);
}

void write_clear_csv(const metrics::ClearReport& r, const std::filesystem::path& path) {
  std::ostringstream os;
  os << "mota,motp,fp,fn,ids,ids_rate,matches,total_gt\n";
  os << csv_number(r.mota) << ',' << csv_number(r.motp) << ',' << r.fp << ',' << r.fn << ','
     << r.ids << ',' << csv_number(r.ids_rate) << ',' << r.matches << ',' << r.total_gt << '\n';
  write_text(os.str(), path);
}

void write_attributes_csv(const metrics::AttrEvaluation& eval, const std::filesystem::path& path) {
  std::ostringstream os;
  os << "channel,source,samples,mean_offset,score\n";
  for (const auto& c : eval.channels) {
    for (const auto& [source, s] : {std::pair{"raw", c.raw}, std::pair{"filtered", c.filtered}}) {
      os << c.channel << ',' << source << ',' << s.samples << ',' << csv_number(s.mean_offset)
         << ',' << csv_number(s.score) << '\n';
    }
  }
  write_text(os.str(), path);
}

void write_sweep_csv(const SweepResult& sweep, const std::filesystem::path& path) {
  std::ostringstream os;
  os << "channel,g,h,samples,mean_offset,score,raw_mean_offset,raw_score,best\n";
  for (const SweepCell& c : sweep.cells) {
    os << sweep.channel << ',' << csv_number(c.g) << ',' << csv_number(c.h) << ','
       << c.filtered.samples << ',' << csv_number(c.filtered.mean_offset) << ','
       << csv_number(c.filtered.score) << ',' << csv_number(sweep.raw.mean_offset) << ','
       << csv_number(sweep.raw.score) << ',' << (c.best ? 1 : 0) << '\n';
  }
  write_text(os.str(), path);
}

void write_freeflight_csv(const FreeflightTable& table, const std::filesystem::path& path) {
  std::ostringstream os;
  os << "stride,keep_score,predict_score,model_hz,measured_hz\n";
  for (const FreeflightRow& r : table.rows) {
    os << r.stride << ',' << csv_number(r.keep.score) << ',' << csv_number(r.predict.score) << ','
       << csv_number(r.model_hz) << ',' << csv_number(r.measured_hz) << '\n';
  }
  write_text(os.str(), path);
}

std::string summary_table(const Evaluation& eval) {
  const auto& c = eval.clear.report;
  std::ostringstream os;
  char line[256];
  os << "Tracking (CLEAR)\n";
  std::snprintf(line, sizeof line, "  %-8s %-8s %6s %6s %6s %-8s %8s\n", "MOTA", "MOTP", "FP",
                "FN", "IDS", "IDS rate", "GT boxes");
  os << line;
  std::snprintf(line, sizeof line, "  %6.1f%%  %6.1f%%  %6zu %6zu %6zu %6.2f%%  %8zu\n",
                100.0 * c.mota, 100.0 * c.motp, c.fp, c.fn, c.ids, 100.0 * c.ids_rate, c.total_gt);
  os << line << "\nAttributes (offset in deg for head, px for joints; score is PCO / PCKh)\n";
  std::snprintf(line, sizeof line, "  %-16s %8s %10s %8s %10s %8s\n", "channel", "samples",
                "raw off", "raw", "filt off", "filt");
  os << line;
  for (const auto& r : eval.attributes.channels) {
    std::snprintf(line, sizeof line, "  %-16s %8zu %10.2f %7.1f%% %10.2f %7.1f%%\n",
                  r.channel.c_str(), r.raw.samples, r.raw.mean_offset, 100.0 * r.raw.score,
                  r.filtered.mean_offset, 100.0 * r.filtered.score);
    os << line;
  }
  return os.str();
}

}  // namespace detta::pipeline
