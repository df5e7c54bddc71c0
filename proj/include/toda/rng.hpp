#ifndef TODA_RNG_HPP
#define TODA_RNG_HPP

#include <cstdint>

namespace toda {

// SplitMix64: 64-bit seeded generator with a one-word state. All stochastic
// output in this library is produced by it so that run metadata (generator
// name, seed, stream index) pins results bit-exactly across platforms.
class SplitMix64 {
 public:
  static constexpr const char* kName = "splitmix64";

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  // Finalizer of the generator, also used to derive independent stream seeds.
  static std::uint64_t mix64(std::uint64_t z);

  // Disjoint stream for worker `stream` under a common master seed.
  static SplitMix64 for_stream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();

  // Uniform on [0, 1), 53 random bits.
  double next_double();

  // Uniform on (0, 1); never returns 0 so it is safe inside log/inverse-CDF.
  double next_open_double();

  // Standard normal via inverse-CDF (deterministic, no libm dependence on
  // transcendentals beyond what special.cpp provides).
  double next_normal();

 private:
  std::uint64_t state_;
};

}  // namespace toda

#endif
