#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "noisebound/instances.hpp"

namespace noisebound::detail {

inline constexpr int kBlockLog2 = 20;

inline std::uint64_t gray(std::uint64_t i) { return i ^ (i >> 1); }

inline std::uint64_t block_count(int n) {
  return n <= kBlockLog2 ? 1 : (std::uint64_t{1} << (n - kBlockLog2));
}

inline std::uint64_t block_length(int n) {
  return n <= kBlockLog2 ? (std::uint64_t{1} << n) : (std::uint64_t{1} << kBlockLog2);
}

// Visits every configuration of one block in Gray-code order, calling
// visit(bits, energy, magnetization). The block's first energy is computed
// from scratch; the rest are single-flip updates.
template <class Visit>
void walk_block(const IsingInstance& instance, std::uint64_t block, Visit&& visit) {
  const int n = instance.size();
  const std::uint64_t length = block_length(n);
  const std::uint64_t first = block * length;
  std::uint64_t bits = gray(first);
  SpinConfig spins = config_from_bits(bits, n);
  double energy = instance.energy(spins);
  int magnetization = 0;
  for (auto s : spins) magnetization += s;
  visit(bits, energy, magnetization);
  for (std::uint64_t t = 1; t < length; ++t) {
    const int k = std::countr_zero(first + t);
    energy += instance.flip_delta(spins, k);
    magnetization -= 2 * spins[k];
    spins[k] = static_cast<std::int8_t>(-spins[k]);
    bits ^= std::uint64_t{1} << k;
    visit(bits, energy, magnetization);
  }
}

}  // namespace noisebound::detail
