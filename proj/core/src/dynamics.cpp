#include "vfc/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "vfc/bandit.hpp"
#include "vfc/rng.hpp"

namespace vfc {
namespace {

double max_abs_diff(const MixedProfile& a, const MixedProfile& b) {
  double m = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n)
    for (std::size_t i = 0; i < a[n].size(); ++i) m = std::max(m, std::abs(a[n][i] - b[n][i]));
  return m;
}

double prob_of(const StageGame& game, const MixedProfile& p, AgentId m, ArmId k) {
  const auto& cands = game.candidates(m);
  auto it = std::lower_bound(cands.begin(), cands.end(), k);
  if (it == cands.end() || *it != k) return 0.0;
  return p[static_cast<std::size_t>(m)][static_cast<std::size_t>(it - cands.begin())];
}

}  // namespace

MixedProfile uniform_profile(const StageGame& game) {
  MixedProfile p;
  for (AgentId n = 0; n < game.num_agents(); ++n) {
    const auto k = game.candidates(n).size();
    p.emplace_back(k, 1.0 / static_cast<double>(k));
  }
  return p;
}

bool is_valid_profile(const StageGame& game, const MixedProfile& p, double tol) {
  if (static_cast<int>(p.size()) != game.num_agents()) return false;
  for (AgentId n = 0; n < game.num_agents(); ++n) {
    const auto& v = p[static_cast<std::size_t>(n)];
    if (v.size() != game.candidates(n).size()) return false;
    double s = 0.0;
    for (double x : v) {
      if (!(x >= 0.0)) return false;
      s += x;
    }
    if (std::abs(s - 1.0) > tol) return false;
  }
  return true;
}

std::vector<double> poisson_binomial(std::span<const double> q) {
  std::vector<double> dist(q.size() + 1, 0.0);
  dist[0] = 1.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = i + 1; j > 0; --j) dist[j] = dist[j] * (1.0 - q[i]) + dist[j - 1] * q[i];
    dist[0] *= 1.0 - q[i];
  }
  return dist;
}

MixedProfile mean_costs(const StageGame& game, const MixedProfile& p) {
  MixedProfile out(p.size());
  std::vector<double> q;
  for (AgentId n = 0; n < game.num_agents(); ++n) {
    const auto& cands = game.candidates(n);
    auto& row = out[static_cast<std::size_t>(n)];
    row.resize(cands.size());
    for (std::size_t i = 0; i < cands.size(); ++i) {
      q.clear();
      for (AgentId m = 0; m < game.num_agents(); ++m)
        if (m != n) q.push_back(prob_of(game, p, m, cands[i]));
      const auto dist = poisson_binomial(q);
      double v = 0.0;
      for (std::size_t j = 0; j < dist.size(); ++j)
        v += dist[j] * game.cost(n, cands[i], static_cast<int>(j) + 1);
      row[i] = v;
    }
  }
  return out;
}

MixedProfile replicator_velocity(const StageGame& game, const MixedProfile& p) {
  MixedProfile lbar = mean_costs(game, p);
  for (std::size_t n = 0; n < lbar.size(); ++n) {
    double avg = 0.0;
    for (std::size_t i = 0; i < lbar[n].size(); ++i) avg += p[n][i] * lbar[n][i];
    for (double& v : lbar[n]) v = avg - v;
  }
  return lbar;
}

StepResult replicator_step(const StageGame& game, const MixedProfile& p, std::span<const double> weights,
                           double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("replicator_step: dt must be > 0");
  const MixedProfile vel = replicator_velocity(game, p);
  StepResult r;
  for (int halvings = 0; halvings < 60; ++halvings, dt *= 0.5) {
    r.profile = p;
    bool ok = true;
    for (std::size_t n = 0; n < p.size() && ok; ++n) {
      double s = 0.0;
      for (std::size_t i = 0; i < p[n].size(); ++i) {
        double& x = r.profile[n][i];
        x = p[n][i] + dt * weights[n] * p[n][i] * vel[n][i];
        if (x < 0.0) {
          ok = false;
          break;
        }
        s += x;
      }
      if (ok)
        for (double& x : r.profile[n]) x /= s;
    }
    if (ok) {
      r.dt_used = dt;
      return r;
    }
  }
  r.profile = p;
  r.dt_used = 0.0;
  return r;
}

MixedProfile integrate_for(const StageGame& game, MixedProfile p, std::span<const double> weights,
                           double duration, double max_dt) {
  if (duration <= 0.0) return p;
  double w_max = 0.0;
  for (double w : weights) w_max = std::max(w_max, std::abs(w));
  if (w_max == 0.0) return p;
  const double scaled = duration * w_max;
  const auto steps = static_cast<std::int64_t>(std::max(1.0, std::ceil(scaled / max_dt)));
  const double h = duration / static_cast<double>(steps);
  for (std::int64_t s = 0; s < steps; ++s) {
    double remaining = h;
    while (remaining > 0.0) {
      const auto r = replicator_step(game, p, weights, remaining);
      p = r.profile;
      if (r.dt_used == 0.0) return p;
      remaining -= r.dt_used;
    }
  }
  return p;
}

RestResult integrate_to_rest(const StageGame& game, MixedProfile p0, std::span<const double> weights,
                             double dt, double tol, std::int64_t max_steps) {
  RestResult res;
  res.profile = std::move(p0);
  for (res.steps = 0; res.steps < max_steps; ++res.steps) {
    auto r = replicator_step(game, res.profile, weights, dt);
    const double moved = max_abs_diff(r.profile, res.profile);
    res.profile = std::move(r.profile);
    if (moved < tol) {
      res.converged = true;
      ++res.steps;
      return res;
    }
  }
  return res;
}

double support_cost_spread(const StageGame& game, const MixedProfile& p, double min_mass) {
  const MixedProfile costs = mean_costs(game, p);
  double spread = 0.0;
  for (std::size_t n = 0; n < costs.size(); ++n) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < costs[n].size(); ++i) {
      if (p[n][i] < min_mass) continue;
      lo = std::min(lo, costs[n][i]);
      hi = std::max(hi, costs[n][i]);
    }
    if (hi >= lo) spread = std::max(spread, hi - lo);
  }
  return spread;
}

double estimate_theta(const StageGame& game) {
  double theta = 0.0;
  game.for_each_profile([&](const JointAction& joint) {
    JointAction dev = joint;
    for (AgentId u = 0; u < game.num_agents(); ++u) {
      const auto uu = static_cast<std::size_t>(u);
      for (ArmId k : game.candidates(u)) {
        if (k == joint[uu]) continue;
        dev[uu] = k;
        for (AgentId n = 0; n < game.num_agents(); ++n) {
          if (n == u) continue;
          theta = std::max(theta, std::abs(game.agent_cost(dev, n) - game.agent_cost(joint, n)));
        }
      }
      dev[uu] = joint[uu];
    }
  });
  return theta;
}

bool is_linear_in_congestion(const StageGame& game, double tol) {
  const int n_agents = game.num_agents();
  for (AgentId n = 0; n < n_agents; ++n)
    for (ArmId k : game.candidates(n)) {
      if (n_agents < 3) continue;
      const double slope = game.cost(n, k, 2) - game.cost(n, k, 1);
      for (int c = 2; c < n_agents; ++c) {
        const double d = game.cost(n, k, c + 1) - game.cost(n, k, c);
        if (std::abs(d - slope) > tol * std::max(1.0, std::abs(slope))) return false;
      }
    }
  return true;
}

ContractionReport check_contraction(const StageGame& game, double zeta_max, double theta,
                                    std::uint64_t seed, int samples) {
  ContractionReport rep;
  rep.theta = theta;
  rep.zeta = zeta_max;
  rep.linear = is_linear_in_congestion(game);
  rep.analytic_value = rep.linear ? theta * zeta_max / 2.0 : 2.0 * zeta_max * theta;
  rep.condition_holds = rep.analytic_value < 1.0;

  const KeyedRng rng(seed);
  auto profile_of = [&](const std::vector<std::vector<double>>& scores) {
    MixedProfile p;
    for (const auto& s : scores) p.push_back(softmin(s, zeta_max));
    return p;
  };
  for (int s = 0; s < samples; ++s) {
    std::vector<std::vector<double>> a;
    std::vector<std::vector<double>> b;
    const double scale = std::pow(10.0, rng.uniform(-3.0, 0.0, Stream::kSampling, s, -1));
    double dist = 0.0;
    for (AgentId n = 0; n < game.num_agents(); ++n) {
      const auto k = game.candidates(n).size();
      std::vector<double> ra(k);
      std::vector<double> rb(k);
      for (std::size_t i = 0; i < k; ++i) {
        const auto key = static_cast<std::int64_t>(n) * 1024 + static_cast<std::int64_t>(i);
        ra[i] = rng.uniform(0.0, 5.0, Stream::kSampling, s, key, 0);
        rb[i] = ra[i] + scale * rng.uniform(-1.0, 1.0, Stream::kSampling, s, key, 1);
        dist = std::max(dist, std::abs(ra[i] - rb[i]));
      }
      a.push_back(std::move(ra));
      b.push_back(std::move(rb));
    }
    if (dist == 0.0) continue;
    const double num = max_abs_diff(mean_costs(game, profile_of(a)), mean_costs(game, profile_of(b)));
    rep.empirical_factor = std::max(rep.empirical_factor, num / dist);
  }
  return rep;
}

std::vector<MixedProfile> ode_path(const StageGame& game, const MixedProfile& start,
                                   const std::vector<std::vector<double>>& weights_per_round) {
  std::vector<MixedProfile> path;
  path.reserve(weights_per_round.size() + 1);
  path.push_back(start);
  for (const auto& w : weights_per_round) path.push_back(integrate_for(game, path.back(), w, 1.0));
  return path;
}

std::vector<double> tracking_error(const StageGame& game, const std::vector<MixedProfile>& discrete,
                                   const std::vector<std::vector<double>>& weights_per_round) {
  if (discrete.empty()) return {};
  if (weights_per_round.size() + 1 < discrete.size())
    throw std::invalid_argument("tracking_error: one weight vector per round required");
  const std::vector<std::vector<double>> w(weights_per_round.begin(),
                                           weights_per_round.begin() +
                                               static_cast<std::ptrdiff_t>(discrete.size() - 1));
  const auto path = ode_path(game, discrete.front(), w);
  std::vector<double> err(discrete.size());
  for (std::size_t t = 0; t < discrete.size(); ++t) err[t] = max_abs_diff(discrete[t], path[t]);
  return err;
}

}  // namespace vfc
