#include "vfc/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "vfc/dynamics.hpp"
#include "vfc/metrics.hpp"
#include "vfc/oracle.hpp"
#include "vfc/trace_io.hpp"

namespace vfc {
namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

std::string hex64(std::uint64_t x) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << x;
  return os.str();
}

GameConfig seeded(const GameConfig& game, std::uint64_t seed) {
  GameConfig g = game;
  g.seed = seed;
  return g;
}

std::size_t traces_kept(const ExperimentSpec& spec) {
  return std::min(spec.seeds.size(), spec.trace_limit.value_or(spec.seeds.size()));
}

std::string trace_name(std::size_t i) { return "run_" + std::to_string(i) + ".trace"; }

void write_series_csv(const fs::path& path, const std::vector<Summary>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  out << "round,mean,std,ci_lo,ci_hi\n";
  for (std::size_t t = 0; t < rows.size(); ++t)
    out << t + 1 << ',' << format_double(rows[t].mean) << ',' << format_double(rows[t].std) << ','
        << format_double(rows[t].ci_lo) << ',' << format_double(rows[t].ci_hi) << '\n';
}

double zeta_max_of(const GameConfig& g) {
  for (const auto& a : g.agents)
    if (a.learner.demand_weighting) return 2.0;
  return 1.0;
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

std::string profile_string(const JointAction& k) {
  std::string s = "(";
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s + ")";
}

// Record-level invariants of one trace; empty when everything holds.
std::string check_records(const GameTrace& trace) {
  const auto& cfg = trace.config;
  const Environment& env = *trace.env;
  const int n_agents = cfg.num_agents;
  std::vector<std::int64_t> clocks(static_cast<std::size_t>(n_agents), 0);
  auto where = [](const RoundRecord& r) {
    return "round " + std::to_string(r.round) + " agent " + std::to_string(r.agent) + ": ";
  };

  for (Round t = 1; t <= cfg.horizon; ++t) {
    const JointAction joint = trace.joint_action(t);
    const auto counts = congestion_counts(joint, env.num_arms());
    int active = 0;
    for (AgentId n = 0; n < n_agents; ++n) {
      const RoundRecord& r = trace.at(t, n);
      auto& clock = clocks[static_cast<std::size_t>(n)];
      if (r.active) ++clock;
      if (r.activation_clock != clock) return where(r) + "activation clock out of step";
      if (!r.active) {
        if (r.chosen != kInactive || !r.probs.empty()) return where(r) + "inactive agent has an action";
        continue;
      }
      ++active;
      if (!cfg.schedule.contains(n, t, r.chosen)) return where(r) + "arm outside the candidate set";
      if (r.candidates != cfg.schedule.candidates(n, t)) return where(r) + "candidate list mismatch";
      if (r.probs.size() != r.candidates.size()) return where(r) + "probability vector length mismatch";
      const double psum = std::accumulate(r.probs.begin(), r.probs.end(), 0.0);
      if (std::abs(psum - 1.0) > 1e-9) return where(r) + "probabilities sum to " + fmt(psum);
      for (double p : r.probs)
        if (!(p > 0.0) && r.probs.size() > 1) return where(r) + "non-positive probability";
      if (r.congestion != counts[static_cast<std::size_t>(r.chosen)]) return where(r) + "congestion mismatch";
      const CostTriple& c = r.cost;
      const double blend = c.adversary_cost + (c.collision_cost - c.adversary_cost) * c.outlier_weight;
      if (std::abs(blend - c.realized_cost) > 1e-12 * std::max(1.0, std::abs(c.realized_cost)))
        return where(r) + "realized cost is not the outlier blend";
      if (!(c.outlier_weight >= 0.0 && c.outlier_weight <= 1.0)) return where(r) + "outlier weight outside [0, 1]";
      if (!(c.normalized_cost >= 0.0 && c.normalized_cost <= 1.0)) return where(r) + "normalized cost outside [0, 1]";
      if (counterfactual_cost(trace, t, n, r.chosen) != c.normalized_cost)
        return where(r) + "counterfactual on the played arm differs from the realized cost";
    }
    const int total = std::accumulate(counts.begin(), counts.end(), 0);
    if (total != active) return "round " + std::to_string(t) + ": congestion counts do not add up";
  }
  return {};
}

}  // namespace

void parallel_for(std::size_t count, std::size_t workers, const std::function<void(std::size_t)>& fn) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::map<std::string, std::vector<double>> compute_run_metrics(const GameTrace& trace,
                                                               const std::vector<std::string>& metrics) {
  std::map<std::string, std::vector<double>> out;
  const int n_agents = trace.config.num_agents;
  std::vector<RegretSeries> regret_norm, regret_raw;
  auto agent_mean = [&](const std::vector<RegretSeries>& rs, bool rate) {
    std::vector<double> m(static_cast<std::size_t>(trace.config.horizon), 0.0);
    for (const auto& r : rs) {
      const auto& s = rate ? r.per_round : r.cumulative;
      for (std::size_t t = 0; t < m.size(); ++t) m[t] += s[t] / n_agents;
    }
    return m;
  };
  auto regrets = [&](std::vector<RegretSeries>& cache, CostUnit unit) -> const std::vector<RegretSeries>& {
    if (cache.empty())
      for (AgentId n = 0; n < n_agents; ++n) cache.push_back(regret_series(trace, n, unit));
    return cache;
  };

  for (const auto& m : metrics) {
    if (m == "cumulative_cost") {
      out[m] = cumulative(social_cost_series(trace));
    } else if (m == "cumulative_cost_raw") {
      out[m] = cumulative(social_cost_series(trace, CostUnit::kRaw));
    } else if (m == "social_cost") {
      out[m] = social_cost_series(trace);
    } else if (m == "pota") {
      out[m] = pota_series(trace, segment_oracles(*trace.env, false));
    } else if (m == "regret") {
      const auto& rs = regrets(regret_norm, CostUnit::kNormalized);
      out[m] = agent_mean(rs, false);
      for (AgentId n = 0; n < n_agents; ++n) out["regret_agent" + std::to_string(n)] = rs[static_cast<std::size_t>(n)].cumulative;
    } else if (m == "regret_rate") {
      out[m] = agent_mean(regrets(regret_norm, CostUnit::kNormalized), true);
    } else if (m == "regret_raw") {
      out[m] = agent_mean(regrets(regret_raw, CostUnit::kRaw), false);
    } else {
      throw ConfigError("unknown metric '" + m + "'");
    }
  }
  return out;
}

fs::path default_output_dir(const ExperimentSpec& spec) {
  if (!spec.output_dir.empty()) return spec.output_dir;
  const char* root = std::getenv("VFC_OUT_ROOT");
  return fs::path(root && *root ? root : "out") / spec.name;
}

ExperimentResult run_experiment(const ExperimentSpec& spec, const RunOptions& options) {
  ExperimentResult result;
  result.out_dir = options.out_dir.empty() ? default_output_dir(spec) : options.out_dir;
  fs::create_directories(result.out_dir);
  const std::size_t n_seeds = spec.seeds.size();
  const std::size_t keep = traces_kept(spec);
  std::mutex log_mu;

  json manifest;
  manifest["name"] = spec.name;
  manifest["version"] = kVersion;
  manifest["config_hash"] = hex64(fnv1a64(spec.canonical_json));
  manifest["seeds"] = spec.seeds;
  manifest["metrics"] = spec.metrics;
  manifest["variants"] = json::array();

  for (const auto& variant : spec.variants) {
    const fs::path vdir = result.out_dir / variant.name;
    fs::create_directories(vdir / "traces");
    fs::create_directories(vdir / "metrics");

    // Each run writes only its own slot and trace file; the aggregation below
    // runs on this thread in seed order, so outputs do not depend on scheduling.
    std::vector<std::map<std::string, std::vector<double>>> per_run(n_seeds);
    parallel_for(n_seeds, options.workers, [&](std::size_t i) {
      const GameTrace trace = run_game(seeded(variant.game, spec.seeds[i]));
      per_run[i] = compute_run_metrics(trace, spec.metrics);
      if (i < keep) write_trace_file(vdir / "traces" / trace_name(i), trace);
      if (options.log) {
        std::lock_guard lock(log_mu);
        *options.log << variant.name << ": seed " << spec.seeds[i] << " done\n";
      }
    });

    VariantSummary vs;
    vs.name = variant.name;
    std::map<std::string, SeriesStats> acc;
    for (const auto& run : per_run)
      for (const auto& [metric, series] : run) acc[metric].add(series);
    for (const auto& [metric, stats] : acc) {
      vs.series[metric] = stats.summaries();
      write_series_csv(vdir / "metrics" / (metric + ".csv"), vs.series[metric]);
    }
    for (std::size_t i = 0; i < keep; ++i) vs.trace_files.push_back("traces/" + trace_name(i));

    json v;
    v["name"] = variant.name;
    v["traces"] = vs.trace_files;
    json files = json::array();
    for (const auto& [metric, rows] : vs.series) files.push_back("metrics/" + metric + ".csv");
    v["metric_files"] = files;
    manifest["variants"].push_back(v);
    result.variants.push_back(std::move(vs));
  }

  {
    std::ofstream out(result.out_dir / "summary.csv", std::ios::binary);
    out << "variant,metric,final_mean,final_std,final_ci_lo,final_ci_hi,runs\n";
    for (const auto& v : result.variants)
      for (const auto& [metric, rows] : v.series) {
        if (rows.empty()) continue;
        const Summary& s = rows.back();
        out << v.name << ',' << metric << ',' << format_double(s.mean) << ',' << format_double(s.std) << ','
            << format_double(s.ci_lo) << ',' << format_double(s.ci_hi) << ',' << s.count << '\n';
      }
  }
  std::ofstream(result.out_dir / "manifest.json", std::ios::binary) << manifest.dump(2) << '\n';
  return result;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "PASS";
    case Verdict::kFail: return "FAIL";
    case Verdict::kNotCertified: return "NOT-CERTIFIED";
    case Verdict::kSkipped: return "SKIPPED";
  }
  return "SKIPPED";
}

std::vector<CheckResult> verify_experiment(const ExperimentSpec& spec, const fs::path& out_dir) {
  const fs::path manifest_path = out_dir / "manifest.json";
  if (!fs::exists(manifest_path))
    throw std::runtime_error(out_dir.string() + ": missing outputs (no manifest.json); run the experiment first");
  json manifest;
  try {
    std::ifstream in(manifest_path);
    manifest = json::parse(in);
  } catch (const json::exception& e) {
    throw std::runtime_error(manifest_path.string() + ": unreadable manifest: " + e.what());
  }

  std::vector<CheckResult> out;
  auto add = [&](std::string name, Verdict v, std::string detail) {
    out.push_back({std::move(name), v, std::move(detail)});
  };

  const std::string want = hex64(fnv1a64(spec.canonical_json));
  const std::string have = manifest.value("config_hash", std::string());
  if (have == want)
    add("manifest", Verdict::kPass, "config hash " + want);
  else
    add("manifest", Verdict::kFail, "config hash " + have + " does not match " + want + "; outputs are stale");
  if (manifest.value("seeds", std::vector<std::uint64_t>{}) != spec.seeds)
    add("manifest-seeds", Verdict::kFail, "seed list differs from the run; pass the same --seeds");

  for (const auto& variant : spec.variants) {
    const std::string pre = variant.name + "/";
    const fs::path vdir = out_dir / variant.name;

    // Metric files.
    {
      std::string problem;
      for (const auto& m : spec.metrics) {
        const fs::path p = vdir / "metrics" / (m + ".csv");
        std::ifstream in(p);
        if (!in) {
          problem = p.string() + " missing";
          break;
        }
        std::string line;
        std::getline(in, line);
        Round rows = 0;
        while (std::getline(in, line))
          if (!line.empty()) ++rows;
        if (rows != variant.game.horizon) {
          problem = p.string() + " has " + std::to_string(rows) + " rows, expected " +
                    std::to_string(variant.game.horizon);
          break;
        }
      }
      add(pre + "metrics", problem.empty() ? Verdict::kPass : Verdict::kFail,
          problem.empty() ? std::to_string(spec.metrics.size()) + " metric files" : problem);
    }

    // Traces: parse, replay, invariants.
    std::vector<GameTrace> traces;
    {
      std::string parse_error;
      const std::size_t keep = traces_kept(spec);
      for (std::size_t i = 0; i < keep; ++i) {
        const fs::path p = vdir / "traces" / trace_name(i);
        try {
          traces.push_back(read_trace_file(p));
        } catch (const std::exception& e) {
          parse_error = e.what();
          break;
        }
      }
      if (!parse_error.empty()) {
        add(pre + "traces", Verdict::kFail, parse_error);
        continue;
      }
      add(pre + "traces", traces.empty() ? Verdict::kSkipped : Verdict::kPass,
          std::to_string(traces.size()) + " traces parsed");
    }
    if (traces.empty()) continue;

    {
      std::string problem;
      for (std::size_t i = 0; i < traces.size() && problem.empty(); ++i) {
        if (traces[i].config.seed != spec.seeds[i]) {
          problem = trace_name(i) + ": seed does not match the manifest";
          break;
        }
        const GameTrace replay = run_game(traces[i].config);
        if (replay.records != traces[i].records) problem = trace_name(i) + ": replay differs from the stored trace";
      }
      add(pre + "determinism", problem.empty() ? Verdict::kPass : Verdict::kFail,
          problem.empty() ? "replays are bit-identical" : problem);
    }
    {
      std::string problem;
      for (std::size_t i = 0; i < traces.size() && problem.empty(); ++i) {
        const std::string e = check_records(traces[i]);
        if (!e.empty()) problem = trace_name(i) + ": " + e;
      }
      add(pre + "record-invariants", problem.empty() ? Verdict::kPass : Verdict::kFail,
          problem.empty() ? "cost blend, probabilities, clocks, congestion and counterfactual identity hold"
                          : problem);
    }

    const GameTrace& first = traces.front();
    const Environment& env = *first.env;
    const auto oracles = segment_oracles(env, true);

    // Rest points of the mean dynamics and contraction.
    {
      std::string detail;
      Verdict v = Verdict::kPass;
      constexpr double kDt = 1e-2, kTol = 1e-10, kSupport = 1e-3;
      for (const auto& so : oracles) {
        const std::vector<double> w(static_cast<std::size_t>(so.game.num_agents()), 1.0);
        const RestResult rest = integrate_to_rest(so.game, uniform_profile(so.game), w, kDt, kTol);
        if (!rest.converged) {
          if (v == Verdict::kPass) v = Verdict::kNotCertified;
          detail += " segment@" + std::to_string(so.segment.start) + " did not settle;";
          continue;
        }
        // The stopping rule bounds dt * w * p * gap by tol, so arms holding at
        // least kSupport of the mass must share the mean cost within 10x that.
        const double allowed = 10.0 * kTol / (kDt * kSupport);
        const double spread = support_cost_spread(so.game, rest.profile, kSupport);
        if (spread > allowed) {
          v = Verdict::kFail;
          detail += " segment@" + std::to_string(so.segment.start) + " support costs differ by " + fmt(spread) + ";";
        }
      }
      add(pre + "rest-point", v, detail.empty() ? "support arms share the mean cost at every rest point" : detail);
    }
    {
      std::string detail;
      Verdict v = Verdict::kSkipped;
      for (const auto& so : oracles) {
        const double theta = estimate_theta(so.game);
        const auto rep = check_contraction(so.game, zeta_max_of(variant.game), theta, env.seed());
        detail += " segment@" + std::to_string(so.segment.start) + " bound=" + fmt(rep.analytic_value) +
                  " empirical=" + fmt(rep.empirical_factor) + ";";
        if (!rep.condition_holds) continue;
        if (rep.empirical_factor < 1.0)
          v = v == Verdict::kFail ? v : Verdict::kPass;
        else
          v = Verdict::kFail;
      }
      if (v == Verdict::kSkipped) detail = " condition does not hold in any segment;" + detail;
      add(pre + "contraction", v, detail);
    }

    // Tracking of the first segment by the seed-averaged play.
    {
      std::vector<const GameTrace*> ptrs;
      for (const auto& t : traces) ptrs.push_back(&t);
      const Segment seg = oracles.front().segment;
      bool all_active = true;
      for (const auto& a : variant.game.agents) all_active = all_active && a.activation_prob >= 1.0;
      if (!all_active) {
        add(pre + "tracking", Verdict::kSkipped, "requires every agent active every round");
      } else if (!shares_stage_game(ptrs, seg.start)) {
        add(pre + "tracking", Verdict::kSkipped, "mean costs differ across seeds");
      } else {
        const AveragedPlay play = average_play(ptrs, seg.start, seg.end);
        const auto err = tracking_error(oracles.front().game, play.profiles, play.weights);
        const double sup = err.empty() ? 0.0 : *std::max_element(err.begin(), err.end());
        add(pre + "tracking", Verdict::kPass,
            "sup deviation " + fmt(sup) + " over " + std::to_string(ptrs.size()) + " seeds, rounds " +
                std::to_string(seg.start) + "-" + std::to_string(seg.end));
      }

      // Convergence rate under a dominant arm.
      Verdict v = Verdict::kSkipped;
      std::string detail;
      for (AgentId n = 0; n < variant.game.num_agents; ++n) {
        const RateBoundReport rep = convergence_rate_check(ptrs, n);
        if (rep.skipped) {
          detail += " agent " + std::to_string(n) + ": " + rep.notice + ";";
          continue;
        }
        detail += " agent " + std::to_string(n) + ": " + std::to_string(rep.violations) + " violations";
        if (rep.violations) detail += " from round " + std::to_string(rep.first_violation);
        detail += ";";
        if (rep.violations)
          v = Verdict::kFail;
        else if (v != Verdict::kFail)
          v = Verdict::kPass;
      }
      add(pre + "convergence-rate", v, detail);
    }

    // Equilibrium certificate from the tail window.
    {
      Verdict v = Verdict::kPass;
      std::string detail;
      for (std::size_t i = 0; i < traces.size(); ++i) {
        try {
          const StageGame game = stage_game_at(*traces[i].env, traces[i].config.horizon);
          const XiCertificate c = xi_certificate(traces[i], spec.xi_window, game);
          if (!c.certified) {
            v = std::max(v, Verdict::kNotCertified);
            detail += " " + trace_name(i) + ": max gap " + fmt(c.max_gap) + " > " + fmt(c.xi_bound) + ";";
          }
        } catch (const ValidationError& e) {
          v = Verdict::kSkipped;
          detail = e.what();
          break;
        }
      }
      if (v == Verdict::kPass) detail = "all tail windows within the bound";
      add(pre + "equilibrium-certificate", v, detail);
    }

    // Step-size conditions under asynchronous activation.
    {
      std::vector<AgentRateSpec> specs;
      for (AgentId n = 0; n < variant.game.num_agents; ++n) {
        const auto& a = variant.game.agents[static_cast<std::size_t>(n)];
        const int k = static_cast<int>(variant.game.schedule.candidates(n, variant.game.horizon).size());
        specs.push_back({a.learner.schedule_a, k, a.activation_prob});
      }
      const Round horizon = std::max<Round>(variant.game.horizon, 1'000'000);
      const AsyncReport rep = async_condition_check(specs, horizon, spec.seeds.front());
      const bool ok = rep.divergence_ok && rep.square_ok;
      add(pre + "step-size-conditions", ok ? Verdict::kPass : Verdict::kFail,
          "sum kappa* = " + fmt(rep.sum_kappa_star) + " crosses " + fmt(rep.divergence_threshold) + " at round " +
              std::to_string(rep.threshold_round) + " (predicted " + std::to_string(rep.predicted_round) +
              "); sum kappa*^2 = " + fmt(rep.sum_kappa_star_sq) + " <= " + fmt(rep.square_bound));
    }

    // Efficiency bound per segment.
    {
      Verdict v = Verdict::kSkipped;
      std::string detail;
      for (std::size_t i = 0; i < traces.size(); ++i) {
        for (const auto& b : pota_bound_check(traces[i], oracles)) {
          if (b.skipped) continue;
          if (!b.holds) {
            v = Verdict::kFail;
            detail += " " + trace_name(i) + " segment@" + std::to_string(b.segment.start) + ": " + fmt(b.pota) +
                      " > " + fmt(b.bound) + ";";
          } else if (v == Verdict::kSkipped) {
            v = Verdict::kPass;
          }
        }
      }
      if (v == Verdict::kPass) detail = "every segment within rho + regret term";
      if (v == Verdict::kSkipped) detail = "no segment has smoothness constants";
      add(pre + "efficiency-bound", v, detail);
    }
  }
  return out;
}

std::string oracle_report(const ExperimentSpec& spec) {
  std::ostringstream os;
  const GameConfig game = seeded(spec.base, spec.seeds.empty() ? spec.master_seed : spec.seeds.front());
  game.validate();
  const auto env = make_environment(game);
  const double zeta = zeta_max_of(game);
  os << "experiment " << spec.name << " seed " << game.seed << "\n";
  for (const auto& so : segment_oracles(*env, true)) {
    const auto& g = so.game;
    os << "segment rounds " << so.segment.start << "-" << so.segment.end << " epoch " << so.segment.epoch
       << " phase " << so.segment.phase << " profiles " << g.num_profiles() << "\n";
    os << "  social optimum " << profile_string(so.optimum.profile) << " C* = " << fmt(so.optimum.cost) << "\n";
    const auto ne = find_pure_nash(g);
    os << "  pure Nash equilibria: " << ne.size() << "\n";
    double worst = 0.0;
    for (std::size_t i = 0; i < ne.size(); ++i) {
      const double c = g.social_cost(ne[i]);
      worst = std::max(worst, c);
      if (i < 10) os << "    " << profile_string(ne[i]) << " cost " << fmt(c) << "\n";
    }
    if (ne.size() > 10) os << "    ...\n";
    if (!ne.empty()) os << "  price of anarchy (pure) " << fmt(worst / so.optimum.cost) << "\n";
    if (so.smoothness.feasible)
      os << "  smoothness lambda " << fmt(so.smoothness.lambda) << " mu " << fmt(so.smoothness.mu) << " rho "
         << fmt(so.smoothness.rho) << "\n";
    else
      os << "  smoothness infeasible on the grid; worst profile " << profile_string(so.smoothness.worst_profile)
         << " excess " << fmt(so.smoothness.worst_excess) << "\n";
    const double theta = estimate_theta(g);
    const auto rep = check_contraction(g, zeta, theta, game.seed);
    os << "  theta " << fmt(theta) << (rep.linear ? " (linear congestion)" : "") << " contraction value "
       << fmt(rep.analytic_value) << (rep.condition_holds ? " < 1" : " >= 1") << " empirical "
       << fmt(rep.empirical_factor) << "\n";
  }
  return os.str();
}

}  // namespace vfc
