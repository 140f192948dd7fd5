#pragma once

#include <cstdint>
#include <string_view>

namespace vfc {

// Named random streams. Every random quantity in a run is addressed by
// (stream, key...) so that any draw can be regenerated without replaying
// the ones before it.
enum class Stream : std::uint64_t {
  kChannelDistance = 1,
  kChannelFading = 2,
  kAdversaryMean = 3,
  kAdversaryNoise = 4,
  kAdversaryPhase = 5,
  kOutlier = 6,
  kAllocation = 7,
  kSelection = 8,
  kActivation = 9,
  kTaskSize = 10,
  kSampling = 11,
};

std::string_view stream_name(Stream s);

// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

// Seed of replication `run_id` under `master_seed`.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t run_id);

// Stateless counter-based generator: draws are pure functions of
// (seed, stream, a, b, c).
class KeyedRng {
 public:
  explicit KeyedRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t bits(Stream s, std::int64_t a, std::int64_t b = 0, std::int64_t c = 0) const;

  // Uniform on [0, 1).
  double uniform(Stream s, std::int64_t a, std::int64_t b = 0, std::int64_t c = 0) const;
  // Uniform on (0, 1].
  double uniform_pos(Stream s, std::int64_t a, std::int64_t b = 0, std::int64_t c = 0) const;
  double uniform(double lo, double hi, Stream s, std::int64_t a, std::int64_t b = 0,
                 std::int64_t c = 0) const;
  // Unit-mean exponential; the power of a unit-variance Rayleigh amplitude.
  double exponential(Stream s, std::int64_t a, std::int64_t b = 0, std::int64_t c = 0) const;
  // Standard normal via Box-Muller on two derived uniforms.
  double normal(Stream s, std::int64_t a, std::int64_t b = 0, std::int64_t c = 0) const;

 private:
  std::uint64_t seed_;
};

}  // namespace vfc
