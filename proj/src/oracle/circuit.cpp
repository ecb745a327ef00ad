#include "noisebound/oracle/circuit.hpp"

#include <complex>

#include "noisebound/errors.hpp"

namespace noisebound::oracle {

void CircuitSpec::validate() const {
  require(n >= 1 && n <= kCircuitQubitCap, "circuit size must lie in [1, 10] qubits");
  for (const auto& layer : layers) {
    for (const auto& gate : layer.gates) {
      require(gate.wires.size() == 1 || gate.wires.size() == 2, "gates act on one or two wires");
      for (int w : gate.wires) require(w >= 0 && w < n, "gate wire out of range");
      const Eigen::Index dim = Eigen::Index{1} << gate.wires.size();
      require(gate.unitary.rows() == dim && gate.unitary.cols() == dim, "gate matrix has the wrong size");
      if (gate.wires.size() == 2) require(gate.wires[0] != gate.wires[1], "two-qubit gate needs distinct wires");
    }
  }
}

Matrix haar_unitary(int dim, Rng& rng) {
  Matrix z(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) {
      const double re = rng.normal();
      const double im = rng.normal();
      z(r, c) = std::complex<double>(re, im) / std::sqrt(2.0);
    }
  }
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < dim; ++k) {
    const auto d = r(k, k);
    const double mag = std::abs(d);
    q.col(k) *= mag > 0.0 ? d / mag : std::complex<double>(1.0);
  }
  return q;
}

CircuitSpec random_circuit(int n, int depth, std::uint64_t seed) {
  require(n >= 1 && n <= kCircuitQubitCap, "circuit size must lie in [1, 10] qubits");
  require(depth >= 0, "depth must be non-negative");
  Rng rng(seed);
  CircuitSpec c;
  c.n = n;
  for (int t = 0; t < depth; ++t) {
    Layer layer;
    if (t % 2 == 0 && n >= 2) {
      layer.two_qubit = true;
      const int offset = static_cast<int>(rng.below(2));
      for (int i = offset; i + 1 < n; i += 2) layer.gates.push_back({{i, i + 1}, haar_unitary(4, rng)});
    } else {
      for (int i = 0; i < n; ++i) layer.gates.push_back({{i}, haar_unitary(2, rng)});
    }
    c.layers.push_back(std::move(layer));
  }
  return c;
}

void apply_layer(Matrix& rho, const Layer& layer) {
  for (const auto& gate : layer.gates) {
    if (gate.wires.size() == 1) {
      const Matrix2 u = gate.unitary;
      apply_left(rho, gate.wires[0], u);
      apply_right(rho, gate.wires[0], u.adjoint());
    } else {
      const Matrix4 u = gate.unitary;
      apply_left(rho, gate.wires[0], gate.wires[1], u);
      apply_right(rho, gate.wires[0], gate.wires[1], u.adjoint());
    }
  }
}

DensityMatrix run_noisy_circuit(const CircuitSpec& circuit, const std::vector<double>& p,
                                const DensityMatrix& initial) {
  circuit.validate();
  require(initial.qubits() == circuit.n, "initial state size does not match the circuit");
  require(p.size() == 1 || p.size() == circuit.layers.size(),
          "give one depolarizing probability or one per layer");
  Matrix rho = initial.matrix();
  for (std::size_t t = 0; t < circuit.layers.size(); ++t) {
    apply_layer(rho, circuit.layers[t]);
    const double prob = p.size() == 1 ? p[0] : p[t];
    for (int k = 0; k < circuit.n; ++k) depolarize(rho, k, prob);
  }
  rho = 0.5 * (rho + rho.adjoint());
  rho /= rho.trace();
  return DensityMatrix(circuit.n, std::move(rho));
}

DensityMatrix run_noisy_circuit(const CircuitSpec& circuit, double p, const DensityMatrix& initial) {
  return run_noisy_circuit(circuit, std::vector<double>{p}, initial);
}

}  // namespace noisebound::oracle
