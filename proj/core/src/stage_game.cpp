#include "vfc/stage_game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vfc {

std::vector<Segment> segments(const Environment& env) {
  std::vector<Segment> out;
  Round t = 1;
  while (t <= env.horizon()) {
    Segment s;
    s.start = t;
    s.epoch = env.schedule().epoch_of(t);
    s.phase = env.adversary().phase_of(t);
    const Round epoch_end = env.schedule().epoch_end(s.epoch, env.horizon());
    const Round phase_end = env.adversary().phases[static_cast<std::size_t>(s.phase)].end;
    s.end = std::min(epoch_end, phase_end);
    out.push_back(s);
    t = s.end + 1;
  }
  return out;
}

StageGame::StageGame(std::vector<std::vector<ArmId>> candidates, int num_arms,
                     std::function<double(AgentId, ArmId, int)> cost_fn)
    : candidates_(std::move(candidates)), num_arms_(num_arms) {
  const int n_agents = num_agents();
  if (n_agents < 1) throw ValidationError("stage game: at least one agent required");
  table_.assign(static_cast<std::size_t>(n_agents) * static_cast<std::size_t>(num_arms_) *
                    static_cast<std::size_t>(n_agents),
                std::numeric_limits<double>::quiet_NaN());
  for (AgentId n = 0; n < n_agents; ++n) {
    if (candidates_[static_cast<std::size_t>(n)].empty())
      throw ValidationError("stage game: empty candidate set");
    for (ArmId k : candidates_[static_cast<std::size_t>(n)]) {
      if (k < 0 || k >= num_arms_) throw ValidationError("stage game: arm id out of range");
      for (int c = 1; c <= n_agents; ++c) {
        const double v = cost_fn(n, k, c);
        if (!std::isfinite(v)) throw ValidationError("stage game: non-finite cost");
        table_[(static_cast<std::size_t>(n) * static_cast<std::size_t>(num_arms_) +
                static_cast<std::size_t>(k)) * static_cast<std::size_t>(n_agents) +
               static_cast<std::size_t>(c - 1)] = v;
      }
    }
  }
}

double StageGame::cost(AgentId n, ArmId k, int congestion) const {
  const auto na = static_cast<std::size_t>(num_agents());
  if (congestion < 1 || congestion > num_agents())
    throw std::out_of_range("stage game: congestion out of range");
  return table_.at((static_cast<std::size_t>(n) * static_cast<std::size_t>(num_arms_) +
                    static_cast<std::size_t>(k)) * na +
                   static_cast<std::size_t>(congestion - 1));
}

double StageGame::agent_cost(const JointAction& joint, AgentId n) const {
  const ArmId k = joint[static_cast<std::size_t>(n)];
  int c = 0;
  for (ArmId a : joint) c += a == k ? 1 : 0;
  return cost(n, k, c);
}

double StageGame::social_cost(const JointAction& joint) const {
  std::vector<int> counts(static_cast<std::size_t>(num_arms_), 0);
  for (ArmId a : joint) ++counts[static_cast<std::size_t>(a)];
  double total = 0.0;
  for (AgentId n = 0; n < num_agents(); ++n) {
    const ArmId k = joint[static_cast<std::size_t>(n)];
    total += cost(n, k, counts[static_cast<std::size_t>(k)]);
  }
  return total;
}

std::uint64_t StageGame::num_profiles() const {
  std::uint64_t total = 1;
  for (const auto& c : candidates_) total *= c.size();
  return total;
}

void StageGame::for_each_profile(const std::function<void(const JointAction&)>& fn) const {
  const std::size_t n = candidates_.size();
  std::vector<std::size_t> idx(n, 0);
  JointAction joint(n);
  for (std::size_t i = 0; i < n; ++i) joint[i] = candidates_[i][0];
  while (true) {
    fn(joint);
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < candidates_[pos].size()) {
        joint[pos] = candidates_[pos][idx[pos]];
        break;
      }
      idx[pos] = 0;
      joint[pos] = candidates_[pos][0];
      if (pos == 0) return;
    }
    if (n == 0) return;
  }
}

StageGame StageGame::scaled(double factor) const {
  const StageGame& self = *this;
  return StageGame(candidates_, num_arms_,
                   [&](AgentId n, ArmId k, int c) { return factor * self.cost(n, k, c); });
}

StageGame stage_game_at(const Environment& env, Round round) {
  std::vector<std::vector<ArmId>> cands;
  for (AgentId n = 0; n < env.num_agents(); ++n) cands.push_back(env.schedule().candidates(n, round));
  return StageGame(std::move(cands), env.num_arms(), [&](AgentId n, ArmId k, int c) {
    return env.expected_normalized_cost(n, k, c, round);
  });
}

}  // namespace vfc
