#include "noisebound/oracle/mirror_descent.hpp"

#include <cmath>
#include <limits>

#include "noisebound/bounds.hpp"
#include "noisebound/errors.hpp"

namespace noisebound::oracle {

MirrorTrace mirror_descent_trace(const Matrix& rho, const Matrix& hamiltonian, double eps, const Matrix& sigma) {
  const int n = qubits_of(rho);
  require(n <= 8, "mirror descent trace is limited to 8 qubits");
  require(hamiltonian.rows() == rho.rows() && sigma.rows() == rho.rows(), "matrix dimensions differ");
  require(eps > 0.0, "eps must be positive");

  MirrorTrace out;
  out.hamiltonian_norm = operator_norm(hamiltonian);
  require(out.hamiltonian_norm > 0.0, "Hamiltonian must be non-zero");
  out.step_size = eps / (2.0 * out.hamiltonian_norm);
  const double initial = relative_entropy_bits(rho, sigma) * kLn2;
  out.step_limit = static_cast<int>(std::ceil(4.0 * initial / (eps * eps) - 1e-12));
  out.min_decrease = std::numeric_limits<double>::infinity();

  const Matrix log_sigma = hermitian_log(sigma);
  const double target = (rho * hamiltonian).trace().real();
  double neg_entropy = 0.0;
  for (double v : hermitian_eigen(rho).values) {
    if (v > 0.0) neg_entropy += v * std::log(v);
  }
  for (int t = 0;; ++t) {
    const Matrix exponent = log_sigma - (t * out.step_size) * hamiltonian;
    // Shift by the top eigenvalue before exponentiating.
    const auto spec = hermitian_eigen(0.5 * (exponent + exponent.adjoint()));
    const double top = spec.values.maxCoeff();
    Eigen::VectorXd w = (spec.values.array() - top).exp();
    const double log_z = top + std::log(w.sum());
    w /= w.sum();
    const Matrix state = spec.vectors * w.cast<std::complex<double>>().asDiagonal() * spec.vectors.adjoint();

    MirrorStep step;
    step.t = t;
    step.state_energy = (state * hamiltonian).trace().real();
    step.energy_gap = step.state_energy - target;
    // log sigma_t = exponent - log Z exactly, so no eigenvalue clamp is involved.
    step.relative_entropy = neg_entropy - (rho * exponent).trace().real() + log_z;
    if (!out.steps.empty()) {
      out.min_decrease = std::min(out.min_decrease, out.steps.back().relative_entropy - step.relative_entropy);
    }
    out.steps.push_back(step);
    if (step.energy_gap <= eps * out.hamiltonian_norm) {
      out.converged = t <= out.step_limit;
      break;
    }
    if (t >= out.step_limit) break;
  }
  if (out.steps.size() == 1) out.min_decrease = 0.0;
  return out;
}

}  // namespace noisebound::oracle
