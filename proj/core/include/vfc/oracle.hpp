#pragma once

#include <optional>
#include <vector>

#include "vfc/game.hpp"
#include "vfc/stage_game.hpp"

namespace vfc {

// Joint actions where no unilateral deviation strictly lowers the deviator's cost.
std::vector<JointAction> find_pure_nash(const StageGame& game);
bool is_pure_nash(const StageGame& game, const JointAction& joint);

struct SocialOptimum {
  JointAction profile;
  double cost = 0.0;  // C*
};

// Exhaustive minimum of the social cost; ties go to the lexicographically
// smallest profile in candidate-index order.
SocialOptimum social_optimum(const StageGame& game);

struct FixedArm {
  ArmId arm = 0;
  double cost = 0.0;  // cumulative counterfactual normalized cost
};

// Best single arm in hindsight for `agent` over [start, end], which must lie
// inside one candidate epoch. Only rounds where the agent was active count.
FixedArm best_fixed_arm(const GameTrace& trace, AgentId agent, Round start, Round end);
// Cumulative counterfactual cost of every candidate arm over [start, end].
std::vector<FixedArm> fixed_arm_costs(const GameTrace& trace, AgentId agent, Round start, Round end);

struct SmoothnessResult {
  bool feasible = false;
  double lambda = 0.0;
  double mu = 0.0;
  double rho = 0.0;  // lambda / (1 - mu)
  SocialOptimum optimum;
  // When infeasible: the profile and excess of the tightest violated
  // constraint at (lambda, mu) = (10, 0.99).
  JointAction worst_profile;
  double worst_excess = 0.0;
};

// Grid search over lambda in [1, 10] and mu in [0, 0.99], both in steps of
// 0.01, for the pair minimising lambda / (1 - mu) subject to
// sum_n l_n(k*_n; k_-n) <= lambda C* + mu C(k) for every joint action k.
SmoothnessResult smoothness_constants(const StageGame& game);

// sum_n l_n(k*_n; k_-n) for a joint action k and optimum profile k*.
double deviation_sum(const StageGame& game, const JointAction& optimum, const JointAction& joint);

}  // namespace vfc
