#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vfc/stage_game.hpp"

namespace vfc {

// One probability vector per agent, aligned with the agent's candidate list.
using MixedProfile = std::vector<std::vector<double>>;

MixedProfile uniform_profile(const StageGame& game);
bool is_valid_profile(const StageGame& game, const MixedProfile& p, double tol = 1e-9);

// Distribution of the number of successes among independent Bernoulli(q_i).
std::vector<double> poisson_binomial(std::span<const double> q);

// Expected cost of every (agent, candidate) pair when the opponents play the
// mixed profile `p`.
MixedProfile mean_costs(const StageGame& game, const MixedProfile& p);

// sum_k p_nk lbar_nk - lbar_nk for every agent n: the replicator velocity
// per unit weight, divided by p_nk.
MixedProfile replicator_velocity(const StageGame& game, const MixedProfile& p);

struct StepResult {
  MixedProfile profile;
  double dt_used = 0.0;
};

// One explicit Euler step of dp_nk = w_n p_nk (sum_m lbar_nm p_nm - lbar_nk),
// renormalised; dt is halved until every entry stays non-negative.
StepResult replicator_step(const StageGame& game, const MixedProfile& p, std::span<const double> weights,
                           double dt);

// Advances the flow by `duration` with Euler steps no larger than `max_dt`.
MixedProfile integrate_for(const StageGame& game, MixedProfile p, std::span<const double> weights,
                           double duration, double max_dt = 1e-2);

struct RestResult {
  MixedProfile profile;
  bool converged = false;
  std::int64_t steps = 0;
};

RestResult integrate_to_rest(const StageGame& game, MixedProfile p0, std::span<const double> weights,
                             double dt = 1e-2, double tol = 1e-10, std::int64_t max_steps = 2'000'000);

// Largest difference in mean cost between two arms that each hold at least
// `min_mass` of one agent's probability, over all agents.
double support_cost_spread(const StageGame& game, const MixedProfile& p, double min_mass);

// Largest change of one agent's cost caused by a single other agent
// switching arms, over every joint action.
double estimate_theta(const StageGame& game);

// Whether every agent's cost is affine in the congestion degree.
bool is_linear_in_congestion(const StageGame& game, double tol = 1e-9);

struct ContractionReport {
  double theta = 0.0;
  double zeta = 1.0;
  bool linear = false;
  double analytic_value = 0.0;  // 2 zeta theta, or theta zeta / 2 when linear
  bool condition_holds = false;
  double empirical_factor = 0.0;
};

// Analytic contraction condition plus the largest ratio
// |lbar(softmin(zeta L)) - lbar(softmin(zeta L'))|_inf / |L - L'|_inf over
// `samples` random score pairs.
ContractionReport check_contraction(const StageGame& game, double zeta_max, double theta,
                                    std::uint64_t seed, int samples = 50);

// Euler path of the mean ODE driven by per-round weights, started from
// `start`. Entry t is the profile before round t + 1's step.
std::vector<MixedProfile> ode_path(const StageGame& game, const MixedProfile& start,
                                   const std::vector<std::vector<double>>& weights_per_round);

// |discrete(t) - ode(t)|_inf for every round, with the ODE clock advanced by
// weights_per_round[t] (the per-agent zeta * eta of that round).
std::vector<double> tracking_error(const StageGame& game, const std::vector<MixedProfile>& discrete,
                                   const std::vector<std::vector<double>>& weights_per_round);

}  // namespace vfc
