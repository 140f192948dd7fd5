#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "vfc/config_io.hpp"
#include "vfc/experiment.hpp"
#include "vfc/types.hpp"

namespace {

enum ExitCode { kOk = 0, kConfigError = 1, kRuntimeError = 2, kVerifyFailed = 3 };

struct Options {
  std::string config;
  std::size_t seeds = 0;
  std::size_t workers = 0;
  std::string out;
  bool strict = false;
  bool quiet = false;
};

vfc::ExperimentSpec load(const Options& o) {
  vfc::ExperimentSpec spec = vfc::load_config(o.config, o.strict);
  for (const auto& w : spec.warnings) std::cerr << "warning: " << w << "\n";
  if (o.seeds > 0) spec.set_replications(o.seeds);
  return spec;
}

std::filesystem::path out_dir(const Options& o, const vfc::ExperimentSpec& spec) {
  return o.out.empty() ? vfc::default_output_dir(spec) : std::filesystem::path(o.out) / spec.name;
}

int cmd_run(const Options& o) {
  const auto spec = load(o);
  vfc::RunOptions ro;
  ro.workers = o.workers ? o.workers : std::max(1u, std::thread::hardware_concurrency());
  ro.out_dir = out_dir(o, spec);
  if (!o.quiet) ro.log = &std::cerr;
  const auto result = vfc::run_experiment(spec, ro);
  std::cout << "wrote " << result.out_dir.string() << " (" << spec.variants.size() << " variants x "
            << spec.seeds.size() << " seeds)\n";
  for (const auto& v : result.variants)
    for (const auto& [metric, rows] : v.series)
      if (!rows.empty() && metric.rfind("regret_agent", 0) != 0)
        std::cout << "  " << v.name << " " << metric << " final mean " << rows.back().mean << " +/- "
                  << rows.back().se << "\n";
  return kOk;
}

int cmd_verify(const Options& o) {
  const auto spec = load(o);
  const auto checks = vfc::verify_experiment(spec, out_dir(o, spec));
  bool failed = false;
  for (const auto& c : checks) {
    std::cout << vfc::verdict_name(c.verdict) << " " << c.name << ": " << c.detail << "\n";
    failed = failed || c.verdict == vfc::Verdict::kFail;
  }
  return failed ? kVerifyFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vfcsim: repeated task-offloading game simulator"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("config", o.config, "experiment config (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--seeds", o.seeds, "override the number of replications");
    sub->add_flag("--strict", o.strict, "reject unknown config keys");
  };

  auto* run = app.add_subcommand("run", "run every replication and write traces, metrics and a manifest");
  add_common(run);
  run->add_option("--workers", o.workers, "worker threads (default: hardware concurrency)");
  run->add_option("--out", o.out, "output root (default: $VFC_OUT_ROOT or ./out)");
  run->add_flag("-q,--quiet", o.quiet, "no per-seed progress");

  auto* verify = app.add_subcommand("verify", "check the outputs of a previous run");
  add_common(verify);
  verify->add_option("--out", o.out, "output root used for the run");

  auto* oracle = app.add_subcommand("oracle", "print equilibria, optimum and smoothness constants per stage game");
  add_common(oracle);

  auto* schema = app.add_subcommand("schema", "print the config key reference");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kConfigError;
  }

  try {
    if (*run) return cmd_run(o);
    if (*verify) return cmd_verify(o);
    if (*oracle) {
      std::cout << vfc::oracle_report(load(o));
      return kOk;
    }
    if (*schema) {
      std::cout << vfc::config_schema();
      return kOk;
    }
  } catch (const vfc::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
  return kOk;
}
