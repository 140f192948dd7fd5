#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "vfc/config_io.hpp"
#include "vfc/game.hpp"
#include "vfc/stats.hpp"

namespace vfc {

inline constexpr const char* kVersion = "0.3.0";

// Runs fn(0) ... fn(count - 1) on up to `workers` threads. Exceptions are
// rethrown on the calling thread (the one from the lowest index wins).
void parallel_for(std::size_t count, std::size_t workers, const std::function<void(std::size_t)>& fn);

// Per-run series for the requested metric names, each of length horizon.
std::map<std::string, std::vector<double>> compute_run_metrics(const GameTrace& trace,
                                                               const std::vector<std::string>& metrics);

struct RunOptions {
  std::size_t workers = 1;
  std::filesystem::path out_dir;  // empty: default_output_dir(spec)
  std::ostream* log = nullptr;
};

struct VariantSummary {
  std::string name;
  std::map<std::string, std::vector<Summary>> series;
  std::vector<std::string> trace_files;
};

struct ExperimentResult {
  std::filesystem::path out_dir;
  std::vector<VariantSummary> variants;
};

// $VFC_OUT_ROOT (or "out") / spec.name, unless the config names a directory.
std::filesystem::path default_output_dir(const ExperimentSpec& spec);

ExperimentResult run_experiment(const ExperimentSpec& spec, const RunOptions& options);

enum class Verdict { kPass, kFail, kNotCertified, kSkipped };
const char* verdict_name(Verdict v);

struct CheckResult {
  std::string name;
  Verdict verdict = Verdict::kSkipped;
  std::string detail;
};

// Every applicable check against the outputs in `out_dir`. Throws
// std::runtime_error when the outputs are missing.
std::vector<CheckResult> verify_experiment(const ExperimentSpec& spec, const std::filesystem::path& out_dir);

// Pure Nash equilibria, social optimum and smoothness constants of every
// stage game under the first seed.
std::string oracle_report(const ExperimentSpec& spec);

}  // namespace vfc
