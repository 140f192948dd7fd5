#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "vfc/rng.hpp"
#include "vfc/types.hpp"

namespace vfc {

// A vehicular fog node; one bandit arm.
struct VfnSpec {
  ArmId id = 0;
  double max_cpu_freq = 0.0;  // cycles/second
  std::pair<double, double> alloc_fraction_range{0.2, 0.5};
};

struct ChannelParams {
  double bandwidth_hz = 10e6;
  double tx_power_dbm = 24.0;
  double noise_psd_dbm_hz = -174.0;
  double comm_range_m = 400.0;
  double pathloss_a = 128.1;  // dB
  double pathloss_b = 37.6;   // dB/decade, distance in km
  int num_subchannels = 10;
  double interference_w = 0.0;
  // Rayleigh power gain is clamped below at this fraction of its (unit) mean.
  double fading_floor = 1e-9;
};

struct AdversaryPhase {
  Round start = 1;
  Round end = 1;
  std::vector<double> means;  // per-arm scaling of the compute term
};

// Oblivious adversary: fixed before the run, never reads agent actions.
struct AdversaryPhaseSchedule {
  std::vector<AdversaryPhase> phases;
  double noise_halfwidth = 0.0;

  int phase_of(Round round) const;
  void validate(Round horizon, int num_arms, double mean_lo, double mean_hi) const;
};

// How the adversary schedule is produced: either given verbatim or drawn
// from the seed (phase lengths and per-arm means).
struct AdversaryLaw {
  std::vector<AdversaryPhase> explicit_phases;  // used when non-empty
  int num_phases = 1;
  bool align_to_epochs = true;  // generated cut points coincide with candidate epochs
  double mean_lo = 1.0;
  double mean_hi = 2.0;
  double noise_halfwidth = 0.1;
};

struct CandidateEpoch {
  Round start = 1;
  std::vector<std::vector<ArmId>> arms;  // per agent, sorted ascending
};

struct CandidateSchedule {
  std::vector<CandidateEpoch> epochs;

  int epoch_of(Round round) const;
  Round epoch_start(int epoch) const { return epochs.at(static_cast<std::size_t>(epoch)).start; }
  Round epoch_end(int epoch, Round horizon) const;
  const std::vector<ArmId>& candidates(AgentId agent, Round round) const;
  bool contains(AgentId agent, Round round, ArmId arm) const;
  void validate(int num_agents, int num_arms, Round horizon) const;
};

struct CostTriple {
  double adversary_cost = 0.0;  // l^a, seconds/bit
  double collision_cost = 0.0;  // l^c, seconds/bit
  double outlier_weight = 0.0;  // o in [0, 1]
  double realized_cost = 0.0;   // l = l^a + (l^c - l^a) o
  double normalized_cost = 0.0; // min(l / cap, 1)

  bool operator==(const CostTriple&) const = default;
};

enum class CostModel { kPhysical, kTabular };

// Direct per-(agent, arm) cost terms in normalized units; the congestion and
// adversary structure is the same as the physical model, with no fading.
struct TabularCosts {
  std::vector<std::vector<double>> comm;
  std::vector<std::vector<double>> comp;
};

struct EnvConfig {
  CostModel model = CostModel::kPhysical;
  std::vector<VfnSpec> vfns;
  ChannelParams channel;
  TabularCosts tabular;
  AdversaryLaw adversary;
  std::vector<double> computation_intensity;  // w_n, cycles/bit, per agent
  std::optional<double> cost_cap;
  // Fading level used for the default physical cost cap.
  double cap_fading_level = 0.01;

  int num_arms() const;
  void validate(int num_agents) const;
};

// Per-sample random draws entering one cost evaluation.
struct CostDraws {
  double fading = 1.0;  // Rayleigh power gain, already floored
  double noise = 0.0;   // adversary noise u in [-h, h]
  double outlier = 0.0; // o in [0, 1]
};

double dbm_to_watts(double dbm);
double pathloss_db(double a, double b, double distance_m);
// Shannon rate B log2(1 + P g / (N + I)) in bits/second.
double link_rate(double bandwidth_hz, double tx_power_w, double gain, double noise_w,
                 double interference_w = 0.0);
// f_nk = F_k * fraction / sqrt(c_k). Throws std::logic_error for congestion < 1.
double allocate_cpu(double max_cpu_freq, double base_fraction, int congestion);
// c_k per arm for the active agents of a joint action.
std::vector<int> congestion_counts(std::span<const ArmId> joint, int num_arms);

// Ground truth for one replication. Immutable after construction; every
// query is a pure function of (config, seed, round, joint action).
class Environment {
 public:
  Environment(EnvConfig config, CandidateSchedule schedule, int num_agents, Round horizon,
              std::uint64_t seed);

  const EnvConfig& config() const { return config_; }
  const CandidateSchedule& schedule() const { return schedule_; }
  const AdversaryPhaseSchedule& adversary() const { return adversary_; }
  int num_agents() const { return num_agents_; }
  int num_arms() const { return num_arms_; }
  Round horizon() const { return horizon_; }
  std::uint64_t seed() const { return rng_.seed(); }
  double cost_cap() const { return cost_cap_; }

  double distance_m(AgentId agent, ArmId arm, int epoch) const;
  double base_fraction(ArmId arm, int phase) const;

  double sample_link_rate(AgentId agent, ArmId arm, Round round) const;
  double allocate_cpu(ArmId arm, int congestion, Round round) const;

  CostDraws draws(AgentId agent, ArmId arm, Round key_round) const;
  // Cost at `round`'s epoch/phase with explicit draws.
  CostTriple cost_from_draws(AgentId agent, ArmId arm, int congestion, Round round,
                             const CostDraws& d) const;
  CostTriple cost(AgentId agent, ArmId arm, int congestion, Round round) const;

  // Costs for every active agent of `joint`; inactive agents get nullopt.
  std::vector<std::optional<CostTriple>> realize_costs(Round round,
                                                       std::span<const ArmId> joint) const;

  // Mean normalized cost with o fixed at 1/2, integrating fading and adversary noise.
  double expected_normalized_cost(AgentId agent, ArmId arm, int congestion, Round round) const;

 private:
  double comm_term(AgentId agent, ArmId arm, int epoch, double fading) const;
  double default_cost_cap() const;

  EnvConfig config_;
  CandidateSchedule schedule_;
  AdversaryPhaseSchedule adversary_;
  int num_agents_;
  int num_arms_;
  Round horizon_;
  KeyedRng rng_;
  double cost_cap_ = 1.0;
  std::vector<double> distances_;  // [epoch][agent][arm]
  std::vector<double> fractions_;  // [phase][arm]
};

AdversaryPhaseSchedule build_adversary_schedule(const AdversaryLaw& law,
                                                const CandidateSchedule& schedule, int num_arms,
                                                Round horizon, const KeyedRng& rng);

}  // namespace vfc
