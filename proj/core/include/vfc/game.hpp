#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vfc/bandit.hpp"
#include "vfc/env.hpp"
#include "vfc/rng.hpp"
#include "vfc/types.hpp"

namespace vfc {

struct TaskSizeLaw {
  enum class Kind { kFixed, kUniform, kTruncatedNormal };
  Kind kind = Kind::kUniform;
  double lo = 0.2;  // Mbit
  double hi = 1.0;
  double value = 0.6;   // kFixed
  double mean = 0.6;    // kTruncatedNormal
  double stddev = 0.2;  // kTruncatedNormal

  double sample(const KeyedRng& rng, AgentId agent, Round round) const;
  void validate(const std::string& where) const;
};

struct AgentConfig {
  TaskSizeLaw task_size;
  double activation_prob = 1.0;
  LearnerParams learner;
};

struct GameConfig {
  int num_agents = 1;
  Round horizon = 1;
  EnvConfig env;
  CandidateSchedule schedule;
  std::vector<AgentConfig> agents;
  std::uint64_t seed = 0;

  void validate() const;
};

struct RoundRecord {
  Round round = 0;
  AgentId agent = 0;
  bool active = false;
  std::vector<ArmId> candidates;
  std::vector<double> probs;
  ArmId chosen = kInactive;
  int congestion = 0;
  CostTriple cost;
  std::vector<double> estimates;
  LearningRates rates;
  std::int64_t activation_clock = 0;
  double task_size = 0.0;
  double zeta = 1.0;

  bool operator==(const RoundRecord&) const = default;
};

// Complete history of one replication. Records are round-major: the record
// of agent n at round t sits at (t - 1) * num_agents + n.
struct GameTrace {
  GameConfig config;
  std::vector<RoundRecord> records;
  std::shared_ptr<const Environment> env;

  const RoundRecord& at(Round round, AgentId agent) const;
  JointAction joint_action(Round round) const;
};

std::shared_ptr<const Environment> make_environment(const GameConfig& config);

GameTrace run_game(const GameConfig& config);

// Cost the agent would have paid at `round` on `alt_arm`, all other realized
// arms fixed and the same random draws reused.
double counterfactual_cost(const GameTrace& trace, Round round, AgentId agent, ArmId alt_arm);
CostTriple counterfactual_triple(const Environment& env, const JointAction& joint, Round round,
                                 AgentId agent, ArmId alt_arm);

}  // namespace vfc
