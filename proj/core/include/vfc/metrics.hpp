#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vfc/dynamics.hpp"
#include "vfc/game.hpp"
#include "vfc/oracle.hpp"
#include "vfc/stage_game.hpp"

namespace vfc {

enum class CostUnit { kNormalized, kRaw };

double cost_in(const CostTriple& c, CostUnit unit);

struct RegretSeries {
  std::vector<double> cumulative;  // R_n(t)
  std::vector<double> per_round;   // R_n(t) / t
};

// Realized cumulative cost minus the best fixed arm in hindsight, where the
// comparison restarts at every candidate epoch and completed epochs add up.
RegretSeries regret_series(const GameTrace& trace, AgentId agent, CostUnit unit = CostUnit::kNormalized);

// Sum over active agents of the realized cost at each round.
std::vector<double> social_cost_series(const GameTrace& trace, CostUnit unit = CostUnit::kNormalized);
std::vector<double> cumulative(std::span<const double> xs);

struct SegmentOracle {
  Segment segment;
  StageGame game;
  SocialOptimum optimum;
  SmoothnessResult smoothness;
};

std::vector<SegmentOracle> segment_oracles(const Environment& env, bool with_smoothness = true);
const SegmentOracle& oracle_for(const std::vector<SegmentOracle>& oracles, Round round);

// Running average of C(t) / C*_seg(t).
std::vector<double> pota_series(const GameTrace& trace, const std::vector<SegmentOracle>& oracles);

struct XiCertificate {
  Round window_start = 0;
  Round window_end = 0;
  double xi_bound = 0.0;
  double max_gap = 0.0;
  bool certified = false;
  std::vector<double> gaps;       // per agent
  std::vector<double> mean_zeta;  // per agent, over the window
  MixedProfile empirical;
};

// ln K / zeta for one agent; the certificate takes the max over agents.
double xi_bound(int num_arms, double zeta);

// Best-response gaps of the tail-window action frequencies under the mean
// cost field of `game`. The window is the last ceil(fraction * T) rounds and
// must sit inside the final candidate epoch with at least 100 active rounds
// per agent.
XiCertificate xi_certificate(const GameTrace& trace, double window_fraction, const StageGame& game);
XiCertificate xi_certificate_window(const GameTrace& trace, Round start, Round end, const StageGame& game);

struct RateBoundPoint {
  Round round = 0;
  double realized_mean = 0.0;
  double realized_se = 0.0;
  double bound = 0.0;
  bool violated = false;  // mean + 3 se < bound
};

struct RateBoundReport {
  bool skipped = false;
  std::string notice;
  ArmId dominant = 0;
  double delta_l = 0.0;
  double delta_beta = 0.0;
  std::vector<RateBoundPoint> points;
  int violations = 0;
  Round first_violation = 0;
};

// Whether every trace sees the same mean cost field at `round`. Seed-averaged
// checks compare against one stage game, which is only meaningful when the
// environment draws do not change that field.
bool shares_stage_game(std::span<const GameTrace* const> traces, Round round, double tol = 1e-12);

// Largest margin by which one arm beats every other arm for `agent`
// regardless of congestion; non-positive when no arm dominates.
double dominance_gap(const StageGame& game, AgentId agent, ArmId* dominant = nullptr);

// 1 - (K - 1) exp(-zeta (delta_beta + delta_l eta_sum)).
double rate_bound(int num_arms, double zeta, double delta_beta, double delta_l, double eta_sum);

// Seed-averaged probability of the dominant arm against the seed-averaged
// 1 - (K - 1) exp(-zeta (delta_beta + delta_l sum eta)) over the first segment.
RateBoundReport convergence_rate_check(std::span<const GameTrace* const> traces, AgentId agent,
                                       double delta_beta = 0.0);

struct AgentRateSpec {
  double schedule_a = 1.0;
  int num_arms = 2;
  double activation_prob = 1.0;
};

struct AsyncReport {
  Round horizon = 0;
  double divergence_threshold = 0.0;
  double sum_kappa_star = 0.0;
  Round threshold_round = 0;       // first round the partial sum exceeds the threshold
  Round predicted_round = 0;       // same, from the closed-form synchronous schedule
  double sum_kappa_star_sq = 0.0;
  double square_bound = 0.0;       // sum_n a_n ln K_n / K_n (1 + ln vartheta_n(T))
  bool divergence_ok = false;
  bool square_ok = false;          // partial sums under the bound at every round
  std::vector<double> agent_sum;   // per agent sum of kappa eta
  std::vector<double> agent_sq;    // per agent sum of (kappa eta)^2
  std::vector<std::int64_t> clocks;
};

AsyncReport async_condition_check(std::span<const AgentRateSpec> agents, Round horizon, std::uint64_t seed,
                                  double divergence_threshold = 100.0);

struct PotaBound {
  Segment segment;
  bool skipped = false;
  std::string notice;
  double pota = 0.0;
  double rho = 0.0;
  double mu = 0.0;
  double c_star = 0.0;
  double regret_sum = 0.0;
  double regret_term = 0.0;
  double bound = 0.0;
  bool holds = false;
};

std::vector<PotaBound> pota_bound_check(const GameTrace& trace, const std::vector<SegmentOracle>& oracles);

// Seed-averaged probability profile at each round of [start, end] and the
// matching per-agent mean zeta * eta, for tracking comparisons.
struct AveragedPlay {
  std::vector<MixedProfile> profiles;
  std::vector<std::vector<double>> weights;
};
AveragedPlay average_play(std::span<const GameTrace* const> traces, Round start, Round end);

}  // namespace vfc
