#pragma once

#include <filesystem>
#include <string>

#include "detta/pipeline/experiments.hpp"
#include "detta/pipeline/pipeline.hpp"

namespace detta::pipeline {

/// Six-decimal fixed form; "inf" for infinities.
std::string csv_number(double value);

void write_cost_csv(const RunResult& run, const std::filesystem::path& path);
void write_clear_csv(const metrics::ClearReport& report, const std::filesystem::path& path);
void write_attributes_csv(const metrics::AttrEvaluation& eval, const std::filesystem::path& path);
void write_sweep_csv(const SweepResult& sweep, const std::filesystem::path& path);
void write_freeflight_csv(const FreeflightTable& table, const std::filesystem::path& path);

/// Human-readable tables of an evaluation.
std::string summary_table(const Evaluation& eval);

void write_text(const std::string& text, const std::filesystem::path& path);

}  // namespace detta::pipeline
