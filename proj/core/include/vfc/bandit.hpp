#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vfc/types.hpp"

namespace vfc {

enum class PatchMode { kBeta, kFullReset, kPartialReset };
enum class FeedbackMode { kBandit, kFull };

struct LearnerParams {
  double schedule_a = 1.0;
  double gamma_ratio = 0.5;
  bool demand_weighting = true;
  PatchMode patch_mode = PatchMode::kBeta;
  FeedbackMode feedback = FeedbackMode::kBandit;
  // Exp3 baseline: mix gamma/K uniform mass into the softmin and use the
  // plain importance-weighted estimator.
  bool explicit_mixing = false;

  void validate() const;
};

struct LearningRates {
  double eta = 0.0;
  double gamma = 0.0;

  bool operator==(const LearningRates&) const = default;
};

// eta = sqrt(a ln K / (K clock)), gamma = ratio * eta. K = 1 uses ln 2.
LearningRates learning_rates(std::int64_t activation_clock, int num_arms, double schedule_a,
                             double gamma_ratio);

// zeta = 1 + (q - q_lo) / (q_hi - q_lo), clamped to [1, 2].
double demand_weight(double task_size, double q_lo, double q_hi);

// p_k proportional to exp(-zeta * scores_k), computed relative to the minimum
// score. Every entry stays strictly positive.
std::vector<double> softmin(std::span<const double> scores, double zeta);

// Inverse-CDF draw of an index from `probs` using u in [0, 1).
int sample_index(std::span<const double> probs, double u);

// IX estimate: l / (p_chosen + gamma) at `chosen`, zero elsewhere.
std::vector<double> estimate_cost(double normalized_cost, int chosen, std::span<const double> probs,
                                  double gamma);

// Rewrites `scores` (indexed by global arm id) when the candidate set moves
// from `previous` to `current`. Both lists are sorted arm ids.
void patch_scores(std::vector<double>& scores, std::span<const ArmId> previous,
                  std::span<const ArmId> current, PatchMode mode);

struct Decision {
  std::vector<double> probs;  // aligned with candidates()
  int chosen_index = 0;
  ArmId chosen = 0;
  double zeta = 1.0;
  LearningRates rates;
};

// One agent's entire memory and decision rule.
class Agent {
 public:
  Agent(int num_arms, LearnerParams params, double q_lo, double q_hi);

  // Installs this round's candidate set, patching scores if it changed.
  void set_candidates(std::span<const ArmId> candidates);

  // Advances the activation clock and picks an arm; `u` drives the draw.
  Decision decide(double task_size, double u);

  // Bandit update for the arm just played. Returns the estimate vector
  // aligned with candidates().
  std::vector<double> update(const Decision& d, double normalized_cost);

  // Full-information update: `costs` aligned with candidates().
  std::vector<double> update_full(const Decision& d, std::span<const double> costs);

  const LearnerParams& params() const { return params_; }
  const std::vector<double>& scores() const { return scores_; }
  const std::vector<ArmId>& candidates() const { return candidates_; }
  std::int64_t activation_clock() const { return clock_; }
  double demand_weight() const { return zeta_; }
  const std::vector<double>& last_probs() const { return last_probs_; }

 private:
  LearnerParams params_;
  double q_lo_;
  double q_hi_;
  std::vector<double> scores_;
  std::vector<ArmId> candidates_;
  bool has_candidates_ = false;
  std::int64_t clock_ = 0;
  double zeta_ = 1.0;
  std::vector<double> last_probs_;
};

}  // namespace vfc
