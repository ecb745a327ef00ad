#pragma once

#include <cstdint>
#include <random>

namespace noisebound {

// Deterministic generator used everywhere a seed is accepted.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. The standard distributions are *not* (their algorithms are
// implementation-defined), so the transforms below are written out here to
// keep every seeded run bit-identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  // Standard normal via the Box-Muller transform (one draw per call).
  double normal();

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer; derives independent stream seeds from (seed, stream).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace noisebound
