#include "vfc/bandit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace vfc {
namespace {

// exp(-700) is still a normal double, so no probability collapses to zero.
constexpr double kMaxExponent = 700.0;

}  // namespace

void LearnerParams::validate() const {
  if (!(schedule_a > 0.0) || !std::isfinite(schedule_a))
    throw ConfigError("learner.a: must be a finite value > 0");
  if (!(gamma_ratio > 0.0))
    throw ConfigError("learner.gamma_ratio: must be > 0");
  if (gamma_ratio > 0.5)
    throw ConfigError("learner.gamma_ratio: " + std::to_string(gamma_ratio) +
                      " violates gamma/eta <= 0.5");
}

LearningRates learning_rates(std::int64_t activation_clock, int num_arms, double schedule_a,
                             double gamma_ratio) {
  if (activation_clock < 1) throw std::invalid_argument("learning_rates: clock must be >= 1");
  if (num_arms < 1) throw std::invalid_argument("learning_rates: need at least one arm");
  const double k = static_cast<double>(num_arms);
  const double log_k = num_arms >= 2 ? std::log(k) : std::log(2.0);
  LearningRates r;
  r.eta = std::sqrt(schedule_a * log_k / (k * static_cast<double>(activation_clock)));
  r.gamma = gamma_ratio * r.eta;
  return r;
}

double demand_weight(double task_size, double q_lo, double q_hi) {
  if (!(q_hi > q_lo)) return 1.0;
  const double delta = (task_size - q_lo) / (q_hi - q_lo);
  return 1.0 + std::clamp(delta, 0.0, 1.0);
}

std::vector<double> softmin(std::span<const double> scores, double zeta) {
  if (scores.empty()) throw ValidationError("softmin: empty candidate set");
  const double lo = *std::min_element(scores.begin(), scores.end());
  std::vector<double> p(scores.size());
  double total = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const double x = std::min(zeta * (scores[i] - lo), kMaxExponent);
    p[i] = std::exp(-x);
    total += p[i];
  }
  for (double& v : p) v /= total;
  return p;
}

int sample_index(std::span<const double> probs, double u) {
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    if (u < acc) return static_cast<int>(i);
  }
  // Rounding can leave the cumulative sum a hair below 1.
  for (std::size_t i = probs.size(); i-- > 0;)
    if (probs[i] > 0.0) return static_cast<int>(i);
  return 0;
}

std::vector<double> estimate_cost(double normalized_cost, int chosen, std::span<const double> probs,
                                  double gamma) {
  if (!(normalized_cost >= 0.0 && normalized_cost <= 1.0)) {
    std::ostringstream os;
    os << "estimate_cost: normalized cost " << normalized_cost << " outside [0, 1]";
    throw ValidationError(os.str());
  }
  if (chosen < 0 || static_cast<std::size_t>(chosen) >= probs.size())
    throw std::out_of_range("estimate_cost: chosen index out of range");
  std::vector<double> est(probs.size(), 0.0);
  const auto c = static_cast<std::size_t>(chosen);
  est[c] = normalized_cost / (probs[c] + gamma);
  return est;
}

void patch_scores(std::vector<double>& scores, std::span<const ArmId> previous,
                  std::span<const ArmId> current, PatchMode mode) {
  std::vector<ArmId> appearing;
  std::vector<ArmId> persisting;
  for (ArmId k : current) {
    if (std::binary_search(previous.begin(), previous.end(), k))
      persisting.push_back(k);
    else
      appearing.push_back(k);
  }
  const bool changed = !appearing.empty() || persisting.size() != previous.size();

  switch (mode) {
    case PatchMode::kFullReset:
      if (changed) std::fill(scores.begin(), scores.end(), 0.0);
      return;
    case PatchMode::kPartialReset:
      for (ArmId k : appearing) scores[static_cast<std::size_t>(k)] = 0.0;
      return;
    case PatchMode::kBeta:
      break;
  }
  if (appearing.empty()) return;
  if (persisting.empty()) {
    std::fill(scores.begin(), scores.end(), 0.0);
    return;
  }
  double min_persisting = scores[static_cast<std::size_t>(persisting.front())];
  for (ArmId k : persisting) min_persisting = std::min(min_persisting, scores[static_cast<std::size_t>(k)]);
  for (ArmId k : appearing) {
    double& s = scores[static_cast<std::size_t>(k)];
    s = std::max(s, min_persisting);
  }
}

Agent::Agent(int num_arms, LearnerParams params, double q_lo, double q_hi)
    : params_(params), q_lo_(q_lo), q_hi_(q_hi), scores_(static_cast<std::size_t>(num_arms), 0.0) {
  if (num_arms < 1) throw ConfigError("agent: at least one arm required");
  params_.validate();
}

void Agent::set_candidates(std::span<const ArmId> candidates) {
  if (candidates.empty()) throw ValidationError("agent: empty candidate set");
  for (ArmId k : candidates)
    if (k < 0 || static_cast<std::size_t>(k) >= scores_.size())
      throw ValidationError("agent: candidate arm id out of range");
  if (has_candidates_ && std::equal(candidates.begin(), candidates.end(), candidates_.begin(),
                                    candidates_.end()))
    return;
  patch_scores(scores_, candidates_, candidates, params_.patch_mode);
  candidates_.assign(candidates.begin(), candidates.end());
  has_candidates_ = true;
}

Decision Agent::decide(double task_size, double u) {
  if (!has_candidates_) throw ValidationError("agent: decide() before set_candidates()");
  ++clock_;
  Decision d;
  const int k = static_cast<int>(candidates_.size());
  d.rates = learning_rates(clock_, k, params_.schedule_a, params_.gamma_ratio);
  d.zeta = params_.demand_weighting ? vfc::demand_weight(task_size, q_lo_, q_hi_) : 1.0;
  zeta_ = d.zeta;

  if (k == 1) {
    d.probs = {1.0};
  } else {
    std::vector<double> s(candidates_.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = scores_[static_cast<std::size_t>(candidates_[i])];
    d.probs = softmin(s, d.zeta);
    if (params_.explicit_mixing) {
      const double g = std::min(d.rates.gamma, 1.0);
      for (double& p : d.probs) p = (1.0 - g) * p + g / k;
    }
  }
  d.chosen_index = sample_index(d.probs, u);
  d.chosen = candidates_[static_cast<std::size_t>(d.chosen_index)];
  last_probs_ = d.probs;
  return d;
}

std::vector<double> Agent::update(const Decision& d, double normalized_cost) {
  const double gamma = params_.explicit_mixing ? 0.0 : d.rates.gamma;
  auto est = estimate_cost(normalized_cost, d.chosen_index, d.probs, gamma);
  if (candidates_.size() == 1) return est;
  for (std::size_t i = 0; i < est.size(); ++i)
    scores_[static_cast<std::size_t>(candidates_[i])] += d.rates.eta * est[i];
  return est;
}

std::vector<double> Agent::update_full(const Decision& d, std::span<const double> costs) {
  if (costs.size() != candidates_.size())
    throw std::invalid_argument("update_full: one cost per candidate required");
  std::vector<double> est(costs.begin(), costs.end());
  for (double l : est)
    if (!(l >= 0.0 && l <= 1.0)) throw ValidationError("update_full: normalized cost outside [0, 1]");
  if (candidates_.size() == 1) return est;
  for (std::size_t i = 0; i < est.size(); ++i)
    scores_[static_cast<std::size_t>(candidates_[i])] += d.rates.eta * est[i];
  return est;
}

}  // namespace vfc
