#include "vfc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "vfc/stats.hpp"

namespace vfc {

double cost_in(const CostTriple& c, CostUnit unit) {
  return unit == CostUnit::kNormalized ? c.normalized_cost : c.realized_cost;
}

RegretSeries regret_series(const GameTrace& trace, AgentId agent, CostUnit unit) {
  const auto& sched = trace.env->schedule();
  const Round horizon = trace.config.horizon;
  RegretSeries out;
  out.cumulative.reserve(static_cast<std::size_t>(horizon));
  out.per_round.reserve(static_cast<std::size_t>(horizon));

  int epoch = -1;
  std::vector<ArmId> arms;
  std::vector<double> arm_sums;
  bool any_active = false;
  double completed_best = 0.0;
  double realized = 0.0;

  for (Round t = 1; t <= horizon; ++t) {
    const int e = sched.epoch_of(t);
    if (e != epoch) {
      if (any_active) completed_best += *std::min_element(arm_sums.begin(), arm_sums.end());
      epoch = e;
      arms = sched.candidates(agent, t);
      arm_sums.assign(arms.size(), 0.0);
      any_active = false;
    }
    const auto& rec = trace.at(t, agent);
    if (rec.active) {
      any_active = true;
      realized += cost_in(rec.cost, unit);
      const JointAction joint = trace.joint_action(t);
      for (std::size_t i = 0; i < arms.size(); ++i)
        arm_sums[i] += arms[i] == rec.chosen
                           ? cost_in(rec.cost, unit)
                           : cost_in(counterfactual_triple(*trace.env, joint, t, agent, arms[i]), unit);
    }
    const double best_now = any_active ? *std::min_element(arm_sums.begin(), arm_sums.end()) : 0.0;
    const double r = realized - (completed_best + best_now);
    out.cumulative.push_back(r);
    out.per_round.push_back(r / static_cast<double>(t));
  }
  return out;
}

std::vector<double> social_cost_series(const GameTrace& trace, CostUnit unit) {
  const Round horizon = trace.config.horizon;
  std::vector<double> out(static_cast<std::size_t>(horizon), 0.0);
  for (const auto& rec : trace.records)
    if (rec.active) out[static_cast<std::size_t>(rec.round - 1)] += cost_in(rec.cost, unit);
  return out;
}

std::vector<double> cumulative(std::span<const double> xs) {
  std::vector<double> out(xs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = acc += xs[i];
  return out;
}

std::vector<SegmentOracle> segment_oracles(const Environment& env, bool with_smoothness) {
  std::vector<SegmentOracle> out;
  for (const auto& seg : segments(env)) {
    StageGame g = stage_game_at(env, seg.start);
    SocialOptimum opt = social_optimum(g);
    SmoothnessResult sm;
    if (with_smoothness) sm = smoothness_constants(g);
    out.push_back({seg, std::move(g), std::move(opt), std::move(sm)});
  }
  return out;
}

const SegmentOracle& oracle_for(const std::vector<SegmentOracle>& oracles, Round round) {
  for (const auto& o : oracles)
    if (round >= o.segment.start && round <= o.segment.end) return o;
  throw std::out_of_range("oracle_for: round outside every segment");
}

std::vector<double> pota_series(const GameTrace& trace, const std::vector<SegmentOracle>& oracles) {
  const auto social = social_cost_series(trace);
  std::vector<double> out(social.size());
  double acc = 0.0;
  std::size_t seg = 0;
  for (std::size_t i = 0; i < social.size(); ++i) {
    const Round t = static_cast<Round>(i) + 1;
    while (t > oracles[seg].segment.end) ++seg;
    const double c_star = oracles[seg].optimum.cost;
    if (!(c_star > 0.0)) throw ValidationError("pota: C* = 0, PoTA undefined");
    acc += social[i] / c_star;
    out[i] = acc / static_cast<double>(t);
  }
  return out;
}

double xi_bound(int num_arms, double zeta) { return std::log(static_cast<double>(num_arms)) / zeta; }

double rate_bound(int num_arms, double zeta, double delta_beta, double delta_l, double eta_sum) {
  return 1.0 - (num_arms - 1.0) * std::exp(-zeta * (delta_beta + delta_l * eta_sum));
}

XiCertificate xi_certificate(const GameTrace& trace, double window_fraction, const StageGame& game) {
  if (!(window_fraction > 0.0 && window_fraction <= 1.0))
    throw std::invalid_argument("xi_certificate: window fraction must lie in (0, 1]");
  const Round horizon = trace.config.horizon;
  const auto len = static_cast<Round>(std::ceil(window_fraction * static_cast<double>(horizon)));
  return xi_certificate_window(trace, horizon - len + 1, horizon, game);
}

XiCertificate xi_certificate_window(const GameTrace& trace, Round start, Round end, const StageGame& game) {
  const auto& sched = trace.env->schedule();
  const int last_epoch = static_cast<int>(sched.epochs.size()) - 1;
  if (start < 1 || end > trace.config.horizon || start > end)
    throw std::invalid_argument("xi_certificate: window outside the horizon");
  if (sched.epoch_of(start) != last_epoch)
    throw ValidationError("xi_certificate: window must lie inside the final candidate epoch");

  XiCertificate cert;
  cert.window_start = start;
  cert.window_end = end;
  const int n_agents = trace.config.num_agents;
  for (AgentId n = 0; n < n_agents; ++n) {
    const auto& cands = game.candidates(n);
    if (cands != sched.candidates(n, start))
      throw ValidationError("xi_certificate: stage game candidates differ from the trace");
    std::vector<double> freq(cands.size(), 0.0);
    double zeta_sum = 0.0;
    std::int64_t active = 0;
    for (Round t = start; t <= end; ++t) {
      const auto& rec = trace.at(t, n);
      if (!rec.active) continue;
      ++active;
      zeta_sum += rec.zeta;
      const auto it = std::lower_bound(cands.begin(), cands.end(), rec.chosen);
      freq[static_cast<std::size_t>(it - cands.begin())] += 1.0;
    }
    if (active < 100) {
      std::ostringstream os;
      os << "xi_certificate: agent " << n << " has " << active
         << " active rounds in the window; at least 100 are required";
      throw ValidationError(os.str());
    }
    for (double& f : freq) f /= static_cast<double>(active);
    cert.empirical.push_back(std::move(freq));
    cert.mean_zeta.push_back(zeta_sum / static_cast<double>(active));
  }

  const MixedProfile lbar = mean_costs(game, cert.empirical);
  for (AgentId n = 0; n < n_agents; ++n) {
    const auto un = static_cast<std::size_t>(n);
    double avg = 0.0;
    for (std::size_t i = 0; i < lbar[un].size(); ++i) avg += cert.empirical[un][i] * lbar[un][i];
    const double best = *std::min_element(lbar[un].begin(), lbar[un].end());
    cert.gaps.push_back(avg - best);
    cert.max_gap = std::max(cert.max_gap, avg - best);
    cert.xi_bound = std::max(cert.xi_bound,
                             xi_bound(static_cast<int>(game.candidates(n).size()), cert.mean_zeta[un]));
  }
  cert.certified = cert.max_gap <= cert.xi_bound;
  return cert;
}

double dominance_gap(const StageGame& game, AgentId agent, ArmId* dominant) {
  const auto& cands = game.candidates(agent);
  if (cands.size() < 2) return 0.0;
  const int n = game.num_agents();
  double best_gap = -std::numeric_limits<double>::infinity();
  for (ArmId k : cands) {
    double worst_k = -std::numeric_limits<double>::infinity();
    for (int c = 1; c <= n; ++c) worst_k = std::max(worst_k, game.cost(agent, k, c));
    double best_other = std::numeric_limits<double>::infinity();
    for (ArmId j : cands) {
      if (j == k) continue;
      for (int c = 1; c <= n; ++c) best_other = std::min(best_other, game.cost(agent, j, c));
    }
    const double gap = best_other - worst_k;
    if (gap > best_gap) {
      best_gap = gap;
      if (dominant) *dominant = k;
    }
  }
  return best_gap;
}

bool shares_stage_game(std::span<const GameTrace* const> traces, Round round, double tol) {
  if (traces.size() < 2) return true;
  const StageGame first = stage_game_at(*traces.front()->env, round);
  for (std::size_t i = 1; i < traces.size(); ++i) {
    const StageGame other = stage_game_at(*traces[i]->env, round);
    for (AgentId n = 0; n < first.num_agents(); ++n) {
      if (other.candidates(n) != first.candidates(n)) return false;
      for (ArmId k : first.candidates(n))
        for (int c = 1; c <= first.num_agents(); ++c)
          if (std::abs(other.cost(n, k, c) - first.cost(n, k, c)) > tol) return false;
    }
  }
  return true;
}

RateBoundReport convergence_rate_check(std::span<const GameTrace* const> traces, AgentId agent,
                                       double delta_beta) {
  RateBoundReport rep;
  rep.delta_beta = delta_beta;
  if (traces.empty()) throw std::invalid_argument("convergence_rate_check: no traces");
  const Environment& env = *traces.front()->env;
  const Segment seg = segments(env).front();
  if (!shares_stage_game(traces, seg.start)) {
    rep.skipped = true;
    rep.notice = "mean costs differ across seeds; convergence-rate check skipped";
    return rep;
  }
  const StageGame game = stage_game_at(env, seg.start);
  rep.delta_l = dominance_gap(game, agent, &rep.dominant);
  if (!(rep.delta_l > 0.0)) {
    rep.skipped = true;
    rep.notice = "no strictly dominant arm; convergence-rate check skipped";
    return rep;
  }
  const auto& cands = game.candidates(agent);
  const auto dom_idx =
      static_cast<std::size_t>(std::lower_bound(cands.begin(), cands.end(), rep.dominant) - cands.begin());

  std::vector<double> eta_sum(traces.size(), 0.0);
  for (Round t = seg.start; t <= seg.end; ++t) {
    RunningStats p;
    RunningStats bound;
    for (std::size_t i = 0; i < traces.size(); ++i) {
      const auto& rec = traces[i]->at(t, agent);
      if (!rec.active) continue;
      p.add(rec.probs[dom_idx]);
      // Each run's bound uses its own zeta and step-size sum; averaging those
      // gives the expected bound.
      bound.add(rate_bound(static_cast<int>(cands.size()), rec.zeta, delta_beta, rep.delta_l, eta_sum[i]));
      eta_sum[i] += rec.rates.eta;
    }
    if (p.count() == 0) continue;
    const auto ps = p.summary();
    RateBoundPoint pt;
    pt.round = t;
    pt.realized_mean = ps.mean;
    pt.realized_se = ps.se;
    pt.bound = bound.summary().mean;
    pt.violated = pt.realized_mean + 3.0 * pt.realized_se < pt.bound;
    if (pt.violated) {
      if (rep.violations == 0) rep.first_violation = t;
      ++rep.violations;
    }
    rep.points.push_back(pt);
  }
  return rep;
}

AsyncReport async_condition_check(std::span<const AgentRateSpec> agents, Round horizon, std::uint64_t seed,
                                  double divergence_threshold) {
  AsyncReport rep;
  rep.horizon = horizon;
  rep.divergence_threshold = divergence_threshold;
  const KeyedRng rng(seed);
  const std::size_t n = agents.size();
  rep.agent_sum.assign(n, 0.0);
  rep.agent_sq.assign(n, 0.0);
  rep.clocks.assign(n, 0);
  std::vector<double> eta1(n);
  double c_max = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    eta1[i] = learning_rates(1, agents[i].num_arms, agents[i].schedule_a, 0.5).eta;
    c_max = std::max(c_max, eta1[i]);
  }
  if (c_max > 0.0) {
    const double x = divergence_threshold / (2.0 * c_max) + 1.0;
    rep.predicted_round = static_cast<Round>(std::ceil(x * x - 1.0));
  }

  rep.square_ok = true;
  for (Round t = 1; t <= horizon; ++t) {
    double kappa_star = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& a = agents[i];
      const bool active = a.activation_prob >= 1.0 ||
                          rng.uniform(Stream::kActivation, static_cast<std::int64_t>(i), t) < a.activation_prob;
      if (!active) continue;
      ++rep.clocks[i];
      const double eta = learning_rates(rep.clocks[i], a.num_arms, a.schedule_a, 0.5).eta;
      rep.agent_sum[i] += eta;
      rep.agent_sq[i] += eta * eta;
      kappa_star = std::max(kappa_star, eta);
    }
    rep.sum_kappa_star += kappa_star;
    rep.sum_kappa_star_sq += kappa_star * kappa_star;
    if (rep.threshold_round == 0 && rep.sum_kappa_star >= divergence_threshold) rep.threshold_round = t;

    double bound = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      if (rep.clocks[i] > 0)
        bound += eta1[i] * eta1[i] * (1.0 + std::log(static_cast<double>(rep.clocks[i])));
    rep.square_bound = bound;
    if (rep.sum_kappa_star_sq > bound * (1.0 + 1e-12)) rep.square_ok = false;
  }
  rep.divergence_ok = rep.threshold_round > 0 && rep.sum_kappa_star >= divergence_threshold;
  return rep;
}

std::vector<PotaBound> pota_bound_check(const GameTrace& trace, const std::vector<SegmentOracle>& oracles) {
  const auto social = social_cost_series(trace);
  std::vector<PotaBound> out;
  for (const auto& o : oracles) {
    PotaBound b;
    b.segment = o.segment;
    b.c_star = o.optimum.cost;
    if (!o.smoothness.feasible) {
      b.skipped = true;
      b.notice = "no feasible (lambda, mu) on the grid; bound vacuous";
      out.push_back(b);
      continue;
    }
    if (!(b.c_star > 0.0)) {
      b.skipped = true;
      b.notice = "C* = 0; PoTA undefined";
      out.push_back(b);
      continue;
    }
    const auto len = static_cast<double>(o.segment.end - o.segment.start + 1);
    double acc = 0.0;
    for (Round t = o.segment.start; t <= o.segment.end; ++t) acc += social[static_cast<std::size_t>(t - 1)];
    b.pota = acc / (len * b.c_star);
    for (AgentId n = 0; n < trace.config.num_agents; ++n) {
      double realized = 0.0;
      bool any = false;
      for (Round t = o.segment.start; t <= o.segment.end; ++t) {
        const auto& rec = trace.at(t, n);
        if (!rec.active) continue;
        any = true;
        realized += rec.cost.normalized_cost;
      }
      if (!any) continue;
      b.regret_sum += realized - best_fixed_arm(trace, n, o.segment.start, o.segment.end).cost;
    }
    b.rho = o.smoothness.rho;
    b.mu = o.smoothness.mu;
    b.regret_term = b.regret_sum / (len * (1.0 - b.mu) * b.c_star);
    b.bound = b.rho + b.regret_term;
    b.holds = b.pota <= b.bound + 1e-12;
    out.push_back(b);
  }
  return out;
}

AveragedPlay average_play(std::span<const GameTrace* const> traces, Round start, Round end) {
  if (traces.empty()) throw std::invalid_argument("average_play: no traces");
  const int n_agents = traces.front()->config.num_agents;
  const auto& sched = traces.front()->env->schedule();
  std::vector<std::vector<std::vector<double>>> last(traces.size());
  for (std::size_t i = 0; i < traces.size(); ++i)
    for (AgentId n = 0; n < n_agents; ++n) {
      const auto k = sched.candidates(n, start).size();
      last[i].emplace_back(k, 1.0 / static_cast<double>(k));
    }

  AveragedPlay out;
  const double m = static_cast<double>(traces.size());
  for (Round t = start; t <= end; ++t) {
    MixedProfile prof;
    std::vector<double> w(static_cast<std::size_t>(n_agents), 0.0);
    for (AgentId n = 0; n < n_agents; ++n) {
      const auto un = static_cast<std::size_t>(n);
      std::vector<double> acc(last.front()[un].size(), 0.0);
      for (std::size_t i = 0; i < traces.size(); ++i) {
        const auto& rec = traces[i]->at(t, n);
        if (rec.active) {
          if (rec.probs.size() != acc.size())
            throw ValidationError("average_play: candidate set changes inside the range");
          last[i][un] = rec.probs;
          w[un] += rec.zeta * rec.rates.eta;
        }
        for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += last[i][un][j];
      }
      for (double& x : acc) x /= m;
      w[un] /= m;
      prof.push_back(std::move(acc));
    }
    out.profiles.push_back(std::move(prof));
    out.weights.push_back(std::move(w));
  }
  return out;
}

}  // namespace vfc
