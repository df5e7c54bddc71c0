#include "toda/rng.hpp"

#include "toda/special.hpp"

namespace toda {

std::uint64_t SplitMix64::mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_u64() {
  state_ += 0x9E3779B97F4A7C15ULL;
  return mix64(state_);
}

SplitMix64 SplitMix64::for_stream(std::uint64_t seed, std::uint64_t stream) {
  // Decorrelate streams by finalizing the (seed, stream) pair twice.
  std::uint64_t s = mix64(seed ^ mix64(stream + 0x9E3779B97F4A7C15ULL));
  return SplitMix64(s);
}

double SplitMix64::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SplitMix64::next_open_double() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double SplitMix64::next_normal() {
  return normal_inv_cdf(next_open_double());
}

}  // namespace toda
