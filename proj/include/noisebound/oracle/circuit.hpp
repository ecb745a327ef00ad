#pragma once

#include <cstdint>
#include <vector>

#include "noisebound/oracle/density.hpp"
#include "noisebound/rng.hpp"

namespace noisebound::oracle {

struct Gate {
  std::vector<int> wires;  // one or two wires
  Matrix unitary;          // 2x2 or 4x4; 4x4 index = b(wires[0]) + 2 b(wires[1])
};

struct Layer {
  std::vector<Gate> gates;
  bool two_qubit = false;  // counts toward f2 when set, f1 otherwise
};

struct CircuitSpec {
  int n = 0;
  std::vector<Layer> layers;

  void validate() const;
  int depth() const { return static_cast<int>(layers.size()); }
};

// Haar-random unitary by QR of a complex Ginibre matrix with phase correction.
Matrix haar_unitary(int dim, Rng& rng);

// Layers alternate, starting with a two-qubit layer: Haar-random 4x4 gates on
// adjacent pairs (i, i+1) from a random offset, then Haar-random 2x2 gates on
// every qubit.
CircuitSpec random_circuit(int n, int depth, std::uint64_t seed);

void apply_layer(Matrix& rho, const Layer& layer);

// After every layer, depolarizes every qubit with the layer's probability.
// `p` holds one probability per layer, or a single value for all layers.
DensityMatrix run_noisy_circuit(const CircuitSpec& circuit, const std::vector<double>& p,
                                const DensityMatrix& initial);
DensityMatrix run_noisy_circuit(const CircuitSpec& circuit, double p, const DensityMatrix& initial);

}  // namespace noisebound::oracle
