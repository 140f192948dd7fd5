#include "vfc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace vfc {
namespace {

constexpr int kLambdaSteps = 900;  // lambda = 1 + i / 100, i in [0, 900]
constexpr int kMuSteps = 99;       // mu = j / 100, j in [0, 99]

bool satisfies(double lhs, double lambda, double c_star, double mu, double c) {
  const double rhs = lambda * c_star + mu * c;
  return lhs <= rhs + 1e-12 * std::max(1.0, std::abs(rhs));
}

}  // namespace

bool is_pure_nash(const StageGame& game, const JointAction& joint) {
  for (AgentId n = 0; n < game.num_agents(); ++n) {
    const double current = game.agent_cost(joint, n);
    JointAction dev = joint;
    for (ArmId k : game.candidates(n)) {
      if (k == joint[static_cast<std::size_t>(n)]) continue;
      dev[static_cast<std::size_t>(n)] = k;
      if (game.agent_cost(dev, n) < current) return false;
    }
  }
  return true;
}

std::vector<JointAction> find_pure_nash(const StageGame& game) {
  std::vector<JointAction> out;
  game.for_each_profile([&](const JointAction& joint) {
    if (is_pure_nash(game, joint)) out.push_back(joint);
  });
  return out;
}

SocialOptimum social_optimum(const StageGame& game) {
  SocialOptimum best;
  best.cost = std::numeric_limits<double>::infinity();
  game.for_each_profile([&](const JointAction& joint) {
    const double c = game.social_cost(joint);
    if (c < best.cost) {
      best.cost = c;
      best.profile = joint;
    }
  });
  return best;
}

std::vector<FixedArm> fixed_arm_costs(const GameTrace& trace, AgentId agent, Round start, Round end) {
  const auto& sched = trace.env->schedule();
  if (start < 1 || end > trace.config.horizon || start > end)
    throw std::out_of_range("best_fixed_arm: segment outside the horizon");
  const int epoch = sched.epoch_of(start);
  if (sched.epoch_of(end) != epoch) {
    std::ostringstream os;
    os << "best_fixed_arm: segment [" << start << ", " << end << "] spans a candidate epoch boundary";
    throw ValidationError(os.str());
  }
  const auto& arms = sched.candidates(agent, start);
  std::vector<FixedArm> out;
  for (ArmId k : arms) out.push_back({k, 0.0});
  for (Round t = start; t <= end; ++t) {
    if (!trace.at(t, agent).active) continue;
    const JointAction joint = trace.joint_action(t);
    for (auto& fa : out)
      fa.cost += counterfactual_triple(*trace.env, joint, t, agent, fa.arm).normalized_cost;
  }
  return out;
}

FixedArm best_fixed_arm(const GameTrace& trace, AgentId agent, Round start, Round end) {
  const auto all = fixed_arm_costs(trace, agent, start, end);
  FixedArm best = all.front();
  for (const auto& fa : all)
    if (fa.cost < best.cost) best = fa;
  return best;
}

double deviation_sum(const StageGame& game, const JointAction& optimum, const JointAction& joint) {
  double total = 0.0;
  JointAction dev = joint;
  for (AgentId n = 0; n < game.num_agents(); ++n) {
    const auto un = static_cast<std::size_t>(n);
    dev[un] = optimum[un];
    total += game.agent_cost(dev, n);
    dev[un] = joint[un];
  }
  return total;
}

SmoothnessResult smoothness_constants(const StageGame& game) {
  SmoothnessResult res;
  res.optimum = social_optimum(game);
  const double c_star = res.optimum.cost;

  std::vector<JointAction> profiles;
  std::vector<double> lhs;
  std::vector<double> social;
  profiles.reserve(game.num_profiles());
  game.for_each_profile([&](const JointAction& joint) {
    profiles.push_back(joint);
    lhs.push_back(deviation_sum(game, res.optimum.profile, joint));
    social.push_back(game.social_cost(joint));
  });

  auto feasible_at = [&](double lambda, double mu) {
    for (std::size_t i = 0; i < lhs.size(); ++i)
      if (!satisfies(lhs[i], lambda, c_star, mu, social[i])) return false;
    return true;
  };

  double best_rho = std::numeric_limits<double>::infinity();
  for (int j = 0; j <= kMuSteps; ++j) {
    const double mu = j / 100.0;
    double need = 1.0;
    if (c_star > 0.0) {
      for (std::size_t i = 0; i < lhs.size(); ++i)
        need = std::max(need, (lhs[i] - mu * social[i]) / c_star);
    } else {
      bool ok = true;
      for (std::size_t i = 0; i < lhs.size(); ++i) ok = ok && lhs[i] <= mu * social[i];
      if (!ok) continue;
    }
    int step = static_cast<int>(std::ceil((need - 1.0) * 100.0 - 1e-9));
    step = std::max(step, 0);
    while (step <= kLambdaSteps && !feasible_at(1.0 + step / 100.0, mu)) ++step;
    if (step > kLambdaSteps) continue;
    const double lambda = 1.0 + step / 100.0;
    const double rho = lambda / (1.0 - mu);
    if (rho < best_rho) {
      best_rho = rho;
      res.feasible = true;
      res.lambda = lambda;
      res.mu = mu;
      res.rho = rho;
    }
  }

  if (!res.feasible) {
    res.worst_excess = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      const double excess = lhs[i] - (10.0 * c_star + 0.99 * social[i]);
      if (excess > res.worst_excess) {
        res.worst_excess = excess;
        res.worst_profile = profiles[i];
      }
    }
  }
  return res;
}

}  // namespace vfc
