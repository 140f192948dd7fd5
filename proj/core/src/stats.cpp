#include "vfc/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace vfc {

void RunningStats::add(double x) {
  ++n_;
  const double d = x - mean_;
  mean_ += d / static_cast<double>(n_);
  m2_ += d * (x - mean_);
}

Summary RunningStats::summary() const {
  Summary s;
  s.count = n_;
  s.mean = mean_;
  s.std = n_ > 1 ? std::sqrt(m2_ / static_cast<double>(n_ - 1)) : 0.0;
  s.se = n_ > 0 ? s.std / std::sqrt(static_cast<double>(n_)) : 0.0;
  s.ci_lo = s.mean - 1.96 * s.se;
  s.ci_hi = s.mean + 1.96 * s.se;
  return s;
}

Summary summarize(std::span<const double> xs) {
  RunningStats rs;
  for (double x : xs) rs.add(x);
  return rs.summary();
}

void SeriesStats::add(std::span<const double> series) {
  if (runs_ == 0) cells_.resize(series.size());
  if (series.size() != cells_.size()) throw std::invalid_argument("SeriesStats: length mismatch");
  for (std::size_t i = 0; i < series.size(); ++i) cells_[i].add(series[i]);
  ++runs_;
}

std::vector<Summary> SeriesStats::summaries() const {
  std::vector<Summary> out;
  out.reserve(cells_.size());
  for (const auto& c : cells_) out.push_back(c.summary());
  return out;
}

}  // namespace vfc
