#include "vfc/game.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace vfc {
namespace {

std::string context(Round round, AgentId agent) {
  std::ostringstream os;
  os << "round " << round << ", agent " << agent << ": ";
  return os.str();
}

}  // namespace

double TaskSizeLaw::sample(const KeyedRng& rng, AgentId agent, Round round) const {
  switch (kind) {
    case Kind::kFixed:
      return value;
    case Kind::kUniform:
      return rng.uniform(lo, hi, Stream::kTaskSize, agent, round);
    case Kind::kTruncatedNormal:
      for (std::int64_t attempt = 0; attempt < 1000; ++attempt) {
        const double q = mean + stddev * rng.normal(Stream::kTaskSize, agent, round, attempt);
        if (q >= lo && q <= hi) return q;
      }
      return std::clamp(mean, lo, hi);
  }
  return value;
}

void TaskSizeLaw::validate(const std::string& where) const {
  if (!(lo > 0.0 && lo < hi))
    throw ConfigError(where + ".task_size: bounds need 0 < lo < hi");
  if (kind == Kind::kFixed && !(value >= lo && value <= hi))
    throw ConfigError(where + ".task_size.value: must lie within [lo, hi]");
  if (kind == Kind::kTruncatedNormal && !(stddev > 0.0))
    throw ConfigError(where + ".task_size.stddev: must be > 0");
}

void GameConfig::validate() const {
  if (num_agents < 1) throw ConfigError("game.num_agents: must be >= 1");
  if (horizon < 1) throw ConfigError("game.horizon: must be >= 1");
  if (static_cast<int>(agents.size()) != num_agents)
    throw ConfigError("game.agents: one entry per agent required");
  for (std::size_t n = 0; n < agents.size(); ++n) {
    const std::string where = "agents[" + std::to_string(n) + "]";
    agents[n].task_size.validate(where);
    const double rho = agents[n].activation_prob;
    if (!(rho > 0.0 && rho <= 1.0))
      throw ConfigError(where + ".activation.rho: must lie in (0, 1]");
    try {
      agents[n].learner.validate();
    } catch (const ConfigError& e) {
      throw ConfigError(where + "." + e.what());
    }
  }
  env.validate(num_agents);
  schedule.validate(num_agents, env.num_arms(), horizon);
}

const RoundRecord& GameTrace::at(Round round, AgentId agent) const {
  const auto idx = static_cast<std::size_t>(round - 1) * static_cast<std::size_t>(config.num_agents) +
                   static_cast<std::size_t>(agent);
  return records.at(idx);
}

JointAction GameTrace::joint_action(Round round) const {
  JointAction joint(static_cast<std::size_t>(config.num_agents));
  for (AgentId n = 0; n < config.num_agents; ++n) joint[static_cast<std::size_t>(n)] = at(round, n).chosen;
  return joint;
}

std::shared_ptr<const Environment> make_environment(const GameConfig& config) {
  return std::make_shared<const Environment>(config.env, config.schedule, config.num_agents,
                                             config.horizon, config.seed);
}

CostTriple counterfactual_triple(const Environment& env, const JointAction& joint, Round round,
                                 AgentId agent, ArmId alt_arm) {
  if (!env.schedule().contains(agent, round, alt_arm)) {
    std::ostringstream os;
    os << context(round, agent) << "counterfactual arm " << alt_arm << " is not a candidate";
    throw ProtocolError(os.str());
  }
  int c = 1;
  for (std::size_t m = 0; m < joint.size(); ++m)
    if (static_cast<AgentId>(m) != agent && joint[m] == alt_arm) ++c;
  return env.cost(agent, alt_arm, c, round);
}

double counterfactual_cost(const GameTrace& trace, Round round, AgentId agent, ArmId alt_arm) {
  const auto& rec = trace.at(round, agent);
  if (!rec.active) throw ValidationError(context(round, agent) + "agent inactive");
  return counterfactual_triple(*trace.env, trace.joint_action(round), round, agent, alt_arm)
      .normalized_cost;
}

GameTrace run_game(const GameConfig& config) {
  config.validate();
  GameTrace trace;
  trace.config = config;
  trace.env = make_environment(config);
  const Environment& env = *trace.env;
  const KeyedRng rng(config.seed);
  const int n_agents = config.num_agents;

  std::vector<Agent> agents;
  agents.reserve(static_cast<std::size_t>(n_agents));
  for (const auto& a : config.agents)
    agents.emplace_back(env.num_arms(), a.learner, a.task_size.lo, a.task_size.hi);

  trace.records.reserve(static_cast<std::size_t>(config.horizon) * static_cast<std::size_t>(n_agents));
  std::vector<Decision> decisions(static_cast<std::size_t>(n_agents));
  JointAction joint(static_cast<std::size_t>(n_agents));

  for (Round t = 1; t <= config.horizon; ++t) {
    const std::size_t base = trace.records.size();
    for (AgentId n = 0; n < n_agents; ++n) {
      const auto un = static_cast<std::size_t>(n);
      const auto& ac = config.agents[un];
      RoundRecord rec;
      rec.round = t;
      rec.agent = n;
      rec.active = ac.activation_prob >= 1.0 ||
                   rng.uniform(Stream::kActivation, n, t) < ac.activation_prob;
      joint[un] = kInactive;
      if (rec.active) {
        try {
          Agent& agent = agents[un];
          agent.set_candidates(config.schedule.candidates(n, t));
          rec.task_size = ac.task_size.sample(rng, n, t);
          decisions[un] = agent.decide(rec.task_size, rng.uniform(Stream::kSelection, n, t));
          const Decision& d = decisions[un];
          rec.candidates = agent.candidates();
          rec.probs = d.probs;
          rec.chosen = d.chosen;
          rec.rates = d.rates;
          rec.zeta = d.zeta;
          joint[un] = d.chosen;
        } catch (const ValidationError& e) {
          throw ValidationError(context(t, n) + e.what());
        }
      }
      rec.activation_clock = agents[un].activation_clock();
      trace.records.push_back(std::move(rec));
    }

    std::vector<std::optional<CostTriple>> costs;
    try {
      costs = env.realize_costs(t, joint);
    } catch (const ProtocolError& e) {
      throw ProtocolError(std::string("round ") + std::to_string(t) + ": " + e.what());
    }
    const auto counts = congestion_counts(joint, env.num_arms());

    for (AgentId n = 0; n < n_agents; ++n) {
      const auto un = static_cast<std::size_t>(n);
      RoundRecord& rec = trace.records[base + un];
      if (!rec.active) continue;
      rec.cost = *costs[un];
      rec.congestion = counts[static_cast<std::size_t>(rec.chosen)];
      Agent& agent = agents[un];
      try {
        if (agent.params().feedback == FeedbackMode::kFull) {
          std::vector<double> full(rec.candidates.size());
          for (std::size_t i = 0; i < full.size(); ++i)
            full[i] = rec.candidates[i] == rec.chosen
                          ? rec.cost.normalized_cost
                          : counterfactual_triple(env, joint, t, n, rec.candidates[i]).normalized_cost;
          rec.estimates = agent.update_full(decisions[un], full);
        } else {
          rec.estimates = agent.update(decisions[un], rec.cost.normalized_cost);
        }
      } catch (const ValidationError& e) {
        throw ValidationError(context(t, n) + e.what());
      }
    }
  }
  return trace;
}

}  // namespace vfc
