#include "vfc/rng.hpp"

#include <cmath>
#include <numbers>

namespace vfc {

std::string_view stream_name(Stream s) {
  switch (s) {
    case Stream::kChannelDistance: return "channel.distance";
    case Stream::kChannelFading: return "channel.fading";
    case Stream::kAdversaryMean: return "adversary.mean";
    case Stream::kAdversaryNoise: return "adversary.noise";
    case Stream::kAdversaryPhase: return "adversary.phase";
    case Stream::kOutlier: return "outlier";
    case Stream::kAllocation: return "allocation";
    case Stream::kSelection: return "selection";
    case Stream::kActivation: return "activation";
    case Stream::kTaskSize: return "task_size";
    case Stream::kSampling: return "sampling";
  }
  return "unknown";
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t run_id) {
  return mix64(mix64(master_seed) ^ (run_id * 0xd1b54a32d192ed03ULL + 0x5851f42d4c957f2dULL));
}

std::uint64_t KeyedRng::bits(Stream s, std::int64_t a, std::int64_t b, std::int64_t c) const {
  std::uint64_t h = mix64(seed_ ^ (static_cast<std::uint64_t>(s) * 0xa0761d6478bd642fULL));
  h = mix64(h ^ static_cast<std::uint64_t>(a));
  h = mix64(h ^ (static_cast<std::uint64_t>(b) * 0xe7037ed1a0b428dbULL));
  h = mix64(h ^ (static_cast<std::uint64_t>(c) * 0x8ebc6af09c88c6e3ULL));
  return h;
}

double KeyedRng::uniform(Stream s, std::int64_t a, std::int64_t b, std::int64_t c) const {
  return static_cast<double>(bits(s, a, b, c) >> 11) * 0x1.0p-53;
}

double KeyedRng::uniform_pos(Stream s, std::int64_t a, std::int64_t b, std::int64_t c) const {
  return static_cast<double>((bits(s, a, b, c) >> 11) + 1) * 0x1.0p-53;
}

double KeyedRng::uniform(double lo, double hi, Stream s, std::int64_t a, std::int64_t b,
                         std::int64_t c) const {
  return lo + (hi - lo) * uniform(s, a, b, c);
}

double KeyedRng::exponential(Stream s, std::int64_t a, std::int64_t b, std::int64_t c) const {
  return -std::log(uniform_pos(s, a, b, c));
}

double KeyedRng::normal(Stream s, std::int64_t a, std::int64_t b, std::int64_t c) const {
  // Second uniform comes from a tweaked key so the pair is independent.
  const double u1 = uniform_pos(s, a, b, c);
  const double u2 = static_cast<double>(mix64(bits(s, a, b, c)) >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace vfc
