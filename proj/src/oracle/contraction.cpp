#include "noisebound/oracle/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "noisebound/errors.hpp"

namespace noisebound::oracle {

ContractionReport verify_contraction(const DensityMatrix& initial, const CircuitSpec& circuit, double p,
                                     const DensityMatrix& sigma) {
  circuit.validate();
  require(initial.qubits() == circuit.n && sigma.qubits() == circuit.n, "state sizes do not match the circuit");
  require(circuit.n <= 8, "contraction check is limited to 8 qubits");
  require(p >= 0.0 && p <= 1.0, "p must lie in [0, 1]");

  const Eigen::Index dim = sigma.matrix().rows();
  const Matrix identity = Matrix::Identity(dim, dim) / static_cast<double>(dim);
  const bool maximally_mixed = (sigma.matrix() - identity).cwiseAbs().maxCoeff() <= 1e-14;

  ContractionReport out;
  out.alpha = maximally_mixed ? 1.0 - (1.0 - p) * (1.0 - p) : p;
  out.min_margin = std::numeric_limits<double>::infinity();
  Matrix rho = initial.matrix();
  double bound = relative_entropy_bits(rho, sigma.matrix());
  for (const auto& layer : circuit.layers) {
    ContractionLayer row;
    if (!maximally_mixed) {
      Matrix rotated = sigma.matrix();
      apply_layer(rotated, layer);
      row.correction = std::max(0.0, max_relative_entropy_bits(rotated, sigma.matrix()));
    }
    apply_layer(rho, layer);
    if (maximally_mixed) {
      for (int k = 0; k < circuit.n; ++k) depolarize(rho, k, p);
    } else {
      rho = (1.0 - p) * rho + p * sigma.matrix();
    }
    bound = (1.0 - out.alpha) * (bound + row.correction);
    row.bound = bound;
    row.measured = relative_entropy_bits(rho, sigma.matrix());
    out.min_margin = std::min(out.min_margin, row.bound - row.measured);
    out.layers.push_back(row);
  }
  if (out.layers.empty()) out.min_margin = 0.0;
  return out;
}

}  // namespace noisebound::oracle
