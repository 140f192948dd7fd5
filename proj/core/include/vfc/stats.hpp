#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace vfc {

struct Summary {
  std::size_t count = 0;
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation
  double se = 0.0;
  double ci_lo = 0.0;  // mean - 1.96 se
  double ci_hi = 0.0;
};

Summary summarize(std::span<const double> xs);

// Welford accumulator.
class RunningStats {
 public:
  void add(double x);
  Summary summary() const;
  std::size_t count() const { return n_; }

 private:
  std::size_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

// Per-index accumulator for equal-length series from many replications.
class SeriesStats {
 public:
  void add(std::span<const double> series);
  std::vector<Summary> summaries() const;
  std::size_t length() const { return cells_.size(); }
  std::size_t count() const { return runs_; }

 private:
  std::vector<RunningStats> cells_;
  std::size_t runs_ = 0;
};

}  // namespace vfc
