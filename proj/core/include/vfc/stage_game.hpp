#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "vfc/env.hpp"
#include "vfc/types.hpp"

namespace vfc {

// An interval of rounds over which both the candidate sets and the adversary
// phase are constant.
struct Segment {
  Round start = 1;
  Round end = 1;
  int epoch = 0;
  int phase = 0;
};

std::vector<Segment> segments(const Environment& env);

// Enumerable stage game with congestion-dependent expected costs: agent n on
// arm k shared by c agents pays cost(n, k, c).
class StageGame {
 public:
  StageGame(std::vector<std::vector<ArmId>> candidates, int num_arms,
            std::function<double(AgentId, ArmId, int)> cost_fn);

  int num_agents() const { return static_cast<int>(candidates_.size()); }
  int num_arms() const { return num_arms_; }
  const std::vector<ArmId>& candidates(AgentId n) const {
    return candidates_.at(static_cast<std::size_t>(n));
  }
  const std::vector<std::vector<ArmId>>& candidate_sets() const { return candidates_; }

  // Cost of arm k for agent n when c agents (including n) use it.
  double cost(AgentId n, ArmId k, int congestion) const;
  double agent_cost(const JointAction& joint, AgentId n) const;
  double social_cost(const JointAction& joint) const;

  std::uint64_t num_profiles() const;
  // Visits every joint action in lexicographic order of candidate indices.
  void for_each_profile(const std::function<void(const JointAction&)>& fn) const;

  StageGame scaled(double factor) const;

 private:
  std::vector<std::vector<ArmId>> candidates_;
  int num_arms_;
  std::vector<double> table_;  // [agent][arm][congestion - 1]
};

// Mean-field stage game of `env` at `round`, outlier weight at its mean.
StageGame stage_game_at(const Environment& env, Round round);

}  // namespace vfc
