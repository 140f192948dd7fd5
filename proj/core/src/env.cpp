#include "vfc/env.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

namespace vfc {
namespace {

// 8-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 8> kGlNodes = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
    0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975363};
constexpr std::array<double, 8> kGlWeights = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
    0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};

// E[min(a + b*m, 1)] for m ~ U[lo, hi], b >= 0.
double expected_clamped_linear(double a, double b, double lo, double hi) {
  if (hi <= lo || b <= 0.0) return std::min(a + b * lo, 1.0);
  const double m_star = (1.0 - a) / b;
  if (m_star >= hi) return a + b * 0.5 * (lo + hi);
  if (m_star <= lo) return 1.0;
  const double below = a * (m_star - lo) + 0.5 * b * (m_star * m_star - lo * lo);
  return (below + (hi - m_star)) / (hi - lo);
}

bool is_sorted_unique(const std::vector<ArmId>& v) {
  return std::adjacent_find(v.begin(), v.end(), [](ArmId x, ArmId y) { return x >= y; }) ==
         v.end();
}

}  // namespace

// ---------------------------------------------------------------------------
// Schedules

int AdversaryPhaseSchedule::phase_of(Round round) const {
  auto it = std::upper_bound(phases.begin(), phases.end(), round,
                             [](Round r, const AdversaryPhase& p) { return r < p.start; });
  if (it == phases.begin()) throw std::out_of_range("round precedes first adversary phase");
  return static_cast<int>(std::distance(phases.begin(), it)) - 1;
}

void AdversaryPhaseSchedule::validate(Round horizon, int num_arms, double mean_lo,
                                      double mean_hi) const {
  if (phases.empty()) throw ConfigError("adversary: at least one phase required");
  Round expected = 1;
  for (std::size_t i = 0; i < phases.size(); ++i) {
    const auto& p = phases[i];
    if (p.start != expected || p.end < p.start) {
      std::ostringstream os;
      os << "adversary.phases[" << i << "]: phases must partition [1, horizon] without gaps";
      throw ConfigError(os.str());
    }
    if (static_cast<int>(p.means.size()) != num_arms) {
      std::ostringstream os;
      os << "adversary.phases[" << i << "].means: expected " << num_arms << " entries";
      throw ConfigError(os.str());
    }
    for (double m : p.means) {
      if (!(m > 0.0) || m < mean_lo || m > mean_hi) {
        std::ostringstream os;
        os << "adversary.phases[" << i << "].means: value " << m << " outside [" << mean_lo
           << ", " << mean_hi << "] or not positive";
        throw ConfigError(os.str());
      }
    }
    expected = p.end + 1;
  }
  if (expected != horizon + 1) throw ConfigError("adversary: phases must end at the horizon");
  if (!(noise_halfwidth >= 0.0 && noise_halfwidth < 1.0))
    throw ConfigError("adversary.noise_halfwidth: must lie in [0, 1)");
}

int CandidateSchedule::epoch_of(Round round) const {
  auto it = std::upper_bound(epochs.begin(), epochs.end(), round,
                             [](Round r, const CandidateEpoch& e) { return r < e.start; });
  if (it == epochs.begin()) throw std::out_of_range("round precedes first candidate epoch");
  return static_cast<int>(std::distance(epochs.begin(), it)) - 1;
}

Round CandidateSchedule::epoch_end(int epoch, Round horizon) const {
  const auto next = static_cast<std::size_t>(epoch) + 1;
  return next < epochs.size() ? epochs[next].start - 1 : horizon;
}

const std::vector<ArmId>& CandidateSchedule::candidates(AgentId agent, Round round) const {
  return epochs[static_cast<std::size_t>(epoch_of(round))].arms.at(static_cast<std::size_t>(agent));
}

bool CandidateSchedule::contains(AgentId agent, Round round, ArmId arm) const {
  const auto& c = candidates(agent, round);
  return std::binary_search(c.begin(), c.end(), arm);
}

void CandidateSchedule::validate(int num_agents, int num_arms, Round horizon) const {
  if (epochs.empty()) throw ConfigError("epochs: at least one candidate epoch required");
  if (epochs.front().start != 1) throw ConfigError("epochs[0].start: must be 1");
  for (std::size_t e = 0; e < epochs.size(); ++e) {
    const auto& ep = epochs[e];
    std::ostringstream where;
    where << "epochs[" << e << "]";
    if (e > 0 && ep.start <= epochs[e - 1].start)
      throw ConfigError(where.str() + ".start: epoch starts must be strictly increasing");
    if (ep.start > horizon) throw ConfigError(where.str() + ".start: beyond horizon");
    if (static_cast<int>(ep.arms.size()) != num_agents)
      throw ConfigError(where.str() + ".arms: one candidate list per agent required");
    for (std::size_t n = 0; n < ep.arms.size(); ++n) {
      const auto& set = ep.arms[n];
      if (set.empty())
        throw ConfigError(where.str() + ".arms[" + std::to_string(n) +
                          "]: candidate set must be non-empty");
      if (!is_sorted_unique(set))
        throw ConfigError(where.str() + ".arms[" + std::to_string(n) +
                          "]: arm ids must be unique");
      for (ArmId k : set)
        if (k < 0 || k >= num_arms)
          throw ConfigError(where.str() + ".arms[" + std::to_string(n) + "]: arm id " +
                            std::to_string(k) + " out of range");
    }
  }
}

// ---------------------------------------------------------------------------
// Config

int EnvConfig::num_arms() const {
  if (model == CostModel::kPhysical) return static_cast<int>(vfns.size());
  return tabular.comm.empty() ? 0 : static_cast<int>(tabular.comm.front().size());
}

void EnvConfig::validate(int num_agents) const {
  if (num_arms() < 1) throw ConfigError("env: at least one arm required");
  if (model == CostModel::kPhysical) {
    for (std::size_t k = 0; k < vfns.size(); ++k) {
      const auto& v = vfns[k];
      const std::string where = "env.vfns[" + std::to_string(k) + "]";
      if (v.id != static_cast<ArmId>(k)) throw ConfigError(where + ".id: ids must be 0..K-1");
      if (!(v.max_cpu_freq > 0.0)) throw ConfigError(where + ".max_cpu_freq: must be > 0");
      const auto [lo, hi] = v.alloc_fraction_range;
      if (!(lo > 0.0 && lo <= hi && hi <= 1.0))
        throw ConfigError(where + ".alloc_fraction: need 0 < lo <= hi <= 1");
    }
    const auto& c = channel;
    for (double x : {c.bandwidth_hz, c.tx_power_dbm, c.noise_psd_dbm_hz, c.comm_range_m,
                     c.pathloss_a, c.pathloss_b, c.fading_floor})
      if (!std::isfinite(x)) throw ConfigError("env.channel: all quantities must be finite");
    if (!(c.bandwidth_hz > 0.0)) throw ConfigError("env.channel.bandwidth_hz: must be > 0");
    if (!(c.comm_range_m > 0.0)) throw ConfigError("env.channel.comm_range_m: must be > 0");
    if (c.num_subchannels < 1) throw ConfigError("env.channel.num_subchannels: must be >= 1");
    if (c.interference_w != 0.0)
      throw ConfigError("env.channel.interference_w: orthogonal allocation requires 0");
    if (!(c.fading_floor > 0.0 && c.fading_floor < 1.0))
      throw ConfigError("env.channel.fading_floor: must lie in (0, 1)");
    if (static_cast<int>(computation_intensity.size()) != num_agents)
      throw ConfigError("env.computation_intensity: one value per agent required");
    for (double w : computation_intensity)
      if (!(w > 0.0)) throw ConfigError("env.computation_intensity: must be > 0");
  } else {
    if (static_cast<int>(tabular.comm.size()) != num_agents ||
        static_cast<int>(tabular.comp.size()) != num_agents)
      throw ConfigError("env.tabular: comm and comp need one row per agent");
    const auto k = tabular.comm.front().size();
    for (int n = 0; n < num_agents; ++n) {
      const auto& cm = tabular.comm[static_cast<std::size_t>(n)];
      const auto& cp = tabular.comp[static_cast<std::size_t>(n)];
      if (cm.size() != k || cp.size() != k)
        throw ConfigError("env.tabular: rows must all have the same arm count");
      for (std::size_t j = 0; j < k; ++j)
        if (!(cm[j] >= 0.0 && cp[j] >= 0.0 && std::isfinite(cm[j]) && std::isfinite(cp[j])))
          throw ConfigError("env.tabular: costs must be finite and non-negative");
    }
  }
  if (cost_cap && !(*cost_cap > 0.0)) throw ConfigError("env.cost_cap: must be > 0");
  if (!(adversary.mean_lo > 0.0 && adversary.mean_lo <= adversary.mean_hi))
    throw ConfigError("env.adversary.mean_range: need 0 < lo <= hi");
  if (adversary.num_phases < 1) throw ConfigError("env.adversary.num_phases: must be >= 1");
}

// ---------------------------------------------------------------------------
// Free functions

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double pathloss_db(double a, double b, double distance_m) {
  return a + b * std::log10(std::max(distance_m, 1.0) / 1000.0);
}

double link_rate(double bandwidth_hz, double tx_power_w, double gain, double noise_w,
                 double interference_w) {
  return bandwidth_hz * std::log2(1.0 + tx_power_w * gain / (noise_w + interference_w));
}

double allocate_cpu(double max_cpu_freq, double base_fraction, int congestion) {
  if (congestion < 1) throw std::logic_error("allocate_cpu: congestion must be >= 1");
  return max_cpu_freq * base_fraction / std::sqrt(static_cast<double>(congestion));
}

std::vector<int> congestion_counts(std::span<const ArmId> joint, int num_arms) {
  std::vector<int> counts(static_cast<std::size_t>(num_arms), 0);
  for (ArmId k : joint)
    if (k != kInactive) ++counts.at(static_cast<std::size_t>(k));
  return counts;
}

AdversaryPhaseSchedule build_adversary_schedule(const AdversaryLaw& law,
                                                const CandidateSchedule& schedule, int num_arms,
                                                Round horizon, const KeyedRng& rng) {
  AdversaryPhaseSchedule out;
  out.noise_halfwidth = law.noise_halfwidth;
  if (!law.explicit_phases.empty()) {
    out.phases = law.explicit_phases;
    return out;
  }

  std::vector<Round> starts;
  if (law.align_to_epochs) {
    for (const auto& e : schedule.epochs) starts.push_back(e.start);
  } else {
    if (law.num_phases > horizon)
      throw ConfigError("env.adversary.num_phases: more phases than rounds");
    starts.push_back(1);
    // Distinct cut points drawn in [2, horizon]; resample on collision.
    std::int64_t attempt = 0;
    while (static_cast<int>(starts.size()) < law.num_phases) {
      const auto span = static_cast<double>(horizon - 1);
      const Round cut = 2 + static_cast<Round>(rng.uniform(Stream::kAdversaryPhase, attempt++) * span);
      if (std::find(starts.begin(), starts.end(), cut) == starts.end()) starts.push_back(cut);
    }
    std::sort(starts.begin(), starts.end());
  }

  for (std::size_t i = 0; i < starts.size(); ++i) {
    AdversaryPhase p;
    p.start = starts[i];
    p.end = i + 1 < starts.size() ? starts[i + 1] - 1 : horizon;
    p.means.resize(static_cast<std::size_t>(num_arms));
    for (int k = 0; k < num_arms; ++k)
      p.means[static_cast<std::size_t>(k)] =
          rng.uniform(law.mean_lo, law.mean_hi, Stream::kAdversaryMean, static_cast<std::int64_t>(i), k);
    out.phases.push_back(std::move(p));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Environment

Environment::Environment(EnvConfig config, CandidateSchedule schedule, int num_agents,
                         Round horizon, std::uint64_t seed)
    : config_(std::move(config)),
      schedule_(std::move(schedule)),
      num_agents_(num_agents),
      num_arms_(config_.num_arms()),
      horizon_(horizon),
      rng_(seed) {
  if (num_agents_ < 1) throw ConfigError("num_agents: must be >= 1");
  if (horizon_ < 1) throw ConfigError("horizon: must be >= 1");
  config_.validate(num_agents_);
  schedule_.validate(num_agents_, num_arms_, horizon_);

  adversary_ = build_adversary_schedule(config_.adversary, schedule_, num_arms_, horizon_, rng_);
  double lo = config_.adversary.mean_lo;
  double hi = config_.adversary.mean_hi;
  if (!config_.adversary.explicit_phases.empty()) {
    lo = 0.0;
    hi = std::numeric_limits<double>::infinity();
  }
  adversary_.validate(horizon_, num_arms_, lo, hi);

  const auto n_epochs = schedule_.epochs.size();
  const auto n_agents = static_cast<std::size_t>(num_agents_);
  const auto n_arms = static_cast<std::size_t>(num_arms_);
  distances_.resize(n_epochs * n_agents * n_arms);
  for (std::size_t e = 0; e < n_epochs; ++e)
    for (std::size_t n = 0; n < n_agents; ++n)
      for (std::size_t k = 0; k < n_arms; ++k)
        distances_[(e * n_agents + n) * n_arms + k] =
            config_.channel.comm_range_m *
            rng_.uniform_pos(Stream::kChannelDistance, static_cast<std::int64_t>(e),
                             static_cast<std::int64_t>(n), static_cast<std::int64_t>(k));

  const auto n_phases = adversary_.phases.size();
  fractions_.assign(n_phases * n_arms, 1.0);
  if (config_.model == CostModel::kPhysical) {
    for (std::size_t p = 0; p < n_phases; ++p)
      for (std::size_t k = 0; k < n_arms; ++k) {
        const auto [flo, fhi] = config_.vfns[k].alloc_fraction_range;
        fractions_[p * n_arms + k] =
            rng_.uniform(flo, fhi, Stream::kAllocation, static_cast<std::int64_t>(p),
                         static_cast<std::int64_t>(k));
      }
  }

  cost_cap_ = config_.cost_cap ? *config_.cost_cap : default_cost_cap();
}

double Environment::distance_m(AgentId agent, ArmId arm, int epoch) const {
  const auto n_agents = static_cast<std::size_t>(num_agents_);
  const auto n_arms = static_cast<std::size_t>(num_arms_);
  return distances_.at((static_cast<std::size_t>(epoch) * n_agents +
                        static_cast<std::size_t>(agent)) * n_arms +
                       static_cast<std::size_t>(arm));
}

double Environment::base_fraction(ArmId arm, int phase) const {
  return fractions_.at(static_cast<std::size_t>(phase) * static_cast<std::size_t>(num_arms_) +
                       static_cast<std::size_t>(arm));
}

double Environment::comm_term(AgentId agent, ArmId arm, int epoch, double fading) const {
  if (config_.model == CostModel::kTabular)
    return config_.tabular.comm[static_cast<std::size_t>(agent)][static_cast<std::size_t>(arm)];
  const auto& ch = config_.channel;
  // A subchannel is shared equally among the agents; noise scales with the share.
  const double b = ch.bandwidth_hz / ch.num_subchannels / num_agents_;
  const double noise_w = dbm_to_watts(ch.noise_psd_dbm_hz) * b;
  const double gain =
      std::pow(10.0, -pathloss_db(ch.pathloss_a, ch.pathloss_b, distance_m(agent, arm, epoch)) / 10.0) *
      fading;
  return 1.0 / link_rate(b, dbm_to_watts(ch.tx_power_dbm), gain, noise_w, ch.interference_w);
}

double Environment::sample_link_rate(AgentId agent, ArmId arm, Round round) const {
  return 1.0 / comm_term(agent, arm, schedule_.epoch_of(round), draws(agent, arm, round).fading);
}

double Environment::allocate_cpu(ArmId arm, int congestion, Round round) const {
  const int phase = adversary_.phase_of(round);
  if (config_.model == CostModel::kTabular)
    return vfc::allocate_cpu(1.0, 1.0, congestion);
  return vfc::allocate_cpu(config_.vfns[static_cast<std::size_t>(arm)].max_cpu_freq,
                           base_fraction(arm, phase), congestion);
}

CostDraws Environment::draws(AgentId agent, ArmId arm, Round key_round) const {
  CostDraws d;
  if (config_.model == CostModel::kPhysical)
    d.fading = std::max(rng_.exponential(Stream::kChannelFading, agent, arm, key_round),
                        config_.channel.fading_floor);
  const double h = adversary_.noise_halfwidth;
  d.noise = h > 0.0 ? rng_.uniform(-h, h, Stream::kAdversaryNoise, agent, arm, key_round) : 0.0;
  d.outlier = rng_.uniform(Stream::kOutlier, agent, arm, key_round);
  return d;
}

CostTriple Environment::cost_from_draws(AgentId agent, ArmId arm, int congestion, Round round,
                                        const CostDraws& d) const {
  if (congestion < 1) throw std::logic_error("cost: congestion must be >= 1");
  const int epoch = schedule_.epoch_of(round);
  const int phase = adversary_.phase_of(round);
  const double scale = adversary_.phases[static_cast<std::size_t>(phase)]
                           .means[static_cast<std::size_t>(arm)] * (1.0 + d.noise);
  const double comm = comm_term(agent, arm, epoch, d.fading);

  double comp_free = 0.0;
  double comp_congested = 0.0;
  if (config_.model == CostModel::kPhysical) {
    const double w = config_.computation_intensity[static_cast<std::size_t>(agent)];
    const double fk = config_.vfns[static_cast<std::size_t>(arm)].max_cpu_freq;
    const double frac = base_fraction(arm, phase);
    comp_free = w / vfc::allocate_cpu(fk, frac, 1);
    comp_congested = w / vfc::allocate_cpu(fk, frac, congestion);
  } else {
    const double c = config_.tabular.comp[static_cast<std::size_t>(agent)][static_cast<std::size_t>(arm)];
    comp_free = c;
    comp_congested = c * std::sqrt(static_cast<double>(congestion));
  }

  CostTriple t;
  t.adversary_cost = comm + scale * comp_free;
  t.collision_cost = comm + scale * comp_congested;
  t.outlier_weight = d.outlier;
  t.realized_cost = t.adversary_cost + (t.collision_cost - t.adversary_cost) * t.outlier_weight;
  t.normalized_cost = std::clamp(t.realized_cost / cost_cap_, 0.0, 1.0);
  return t;
}

CostTriple Environment::cost(AgentId agent, ArmId arm, int congestion, Round round) const {
  return cost_from_draws(agent, arm, congestion, round, draws(agent, arm, round));
}

std::vector<std::optional<CostTriple>> Environment::realize_costs(
    Round round, std::span<const ArmId> joint) const {
  if (static_cast<int>(joint.size()) != num_agents_)
    throw std::invalid_argument("realize_costs: joint action size != num_agents");
  for (std::size_t n = 0; n < joint.size(); ++n) {
    const ArmId k = joint[n];
    if (k == kInactive) continue;
    if (k < 0 || k >= num_arms_ || !schedule_.contains(static_cast<AgentId>(n), round, k)) {
      std::ostringstream os;
      os << "agent " << n << " played arm " << k << " outside its candidate set at round "
         << round;
      throw ProtocolError(os.str());
    }
  }
  const auto counts = congestion_counts(joint, num_arms_);
  std::vector<std::optional<CostTriple>> out(joint.size());
  for (std::size_t n = 0; n < joint.size(); ++n) {
    const ArmId k = joint[n];
    if (k == kInactive) continue;
    out[n] = cost(static_cast<AgentId>(n), k, counts[static_cast<std::size_t>(k)], round);
  }
  return out;
}

double Environment::expected_normalized_cost(AgentId agent, ArmId arm, int congestion,
                                             Round round) const {
  const CostDraws zero{1.0, 0.0, 0.5};
  const CostTriple base = cost_from_draws(agent, arm, congestion, round, zero);
  const int epoch = schedule_.epoch_of(round);
  const int phase = adversary_.phase_of(round);
  const double mean = adversary_.phases[static_cast<std::size_t>(phase)]
                          .means[static_cast<std::size_t>(arm)];
  const double h = adversary_.noise_halfwidth;

  // With o = 1/2 the realized cost is comm + m * comp_mid, linear in the
  // adversary scaling m ~ U[mean(1-h), mean(1+h)].
  const double comm_unit = comm_term(agent, arm, epoch, 1.0);
  const double comp_mid = (0.5 * (base.adversary_cost + base.collision_cost) - comm_unit) / mean;
  const double b = comp_mid / cost_cap_;
  const double lo = mean * (1.0 - h);
  const double hi = mean * (1.0 + h);

  if (config_.model == CostModel::kTabular)
    return expected_clamped_linear(comm_unit / cost_cap_, b, lo, hi);

  auto g = [&](double fading) {
    return expected_clamped_linear(comm_term(agent, arm, epoch, fading) / cost_cap_, b, lo, hi);
  };
  // Fading ~ Exp(1) floored at `floor`: point mass below the floor plus a
  // graded Gauss-Legendre sweep of the density above it.
  const double floor = config_.channel.fading_floor;
  double total = g(floor) * -std::expm1(-floor);
  constexpr double kUpper = 60.0;
  constexpr double kRatio = 1.2;
  double x0 = floor;
  while (x0 < kUpper) {
    const double x1 = std::min(x0 * kRatio, kUpper);
    const double half = 0.5 * (x1 - x0);
    const double mid = 0.5 * (x1 + x0);
    double acc = 0.0;
    for (std::size_t i = 0; i < kGlNodes.size(); ++i) {
      const double x = mid + half * kGlNodes[i];
      acc += kGlWeights[i] * g(x) * std::exp(-x);
    }
    total += half * acc;
    x0 = x1;
  }
  return total;
}

double Environment::default_cost_cap() const {
  if (config_.model == CostModel::kTabular) return 1.0;
  double worst_mean = config_.adversary.mean_hi;
  for (const auto& p : adversary_.phases)
    for (double m : p.means) worst_mean = std::max(worst_mean, m);
  const double scale = worst_mean * (1.0 + adversary_.noise_halfwidth);

  double comp_worst = 0.0;
  for (int n = 0; n < num_agents_; ++n)
    for (const auto& v : config_.vfns)
      comp_worst = std::max(comp_worst,
                            scale * config_.computation_intensity[static_cast<std::size_t>(n)] /
                                vfc::allocate_cpu(v.max_cpu_freq, v.alloc_fraction_range.first,
                                                  num_agents_));

  const auto& ch = config_.channel;
  const double b = ch.bandwidth_hz / ch.num_subchannels / num_agents_;
  const double gain =
      std::pow(10.0, -pathloss_db(ch.pathloss_a, ch.pathloss_b, ch.comm_range_m) / 10.0) *
      config_.cap_fading_level;
  const double comm_worst =
      1.0 / link_rate(b, dbm_to_watts(ch.tx_power_dbm), gain,
                      dbm_to_watts(ch.noise_psd_dbm_hz) * b, ch.interference_w);
  return comm_worst + comp_worst;
}

}  // namespace vfc
