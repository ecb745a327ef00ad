#pragma once

#include <vector>

#include "noisebound/oracle/density.hpp"

namespace noisebound::oracle {

struct MirrorStep {
  int t = 0;
  double energy_gap = 0.0;         // tr(H (sigma_t - rho))
  double relative_entropy = 0.0;   // D(rho || sigma_t), nats
  double state_energy = 0.0;       // tr(H sigma_t)
};

struct MirrorTrace {
  std::vector<MirrorStep> steps;
  double step_size = 0.0;      // eps / (2 ||H||)
  double hamiltonian_norm = 0.0;
  int step_limit = 0;          // ceil(4 eps^-2 D(rho || sigma)), D in nats
  bool converged = false;      // stop condition met within step_limit steps
  double min_decrease = 0.0;   // smallest per-step drop of D(rho || sigma_t), nats
};

// sigma_t ~ exp(log sigma - t eps / (2 ||H||) H); stops at the first t with
// tr(H (sigma_t - rho)) <= eps ||H||.
MirrorTrace mirror_descent_trace(const Matrix& rho, const Matrix& hamiltonian, double eps, const Matrix& sigma);

}  // namespace noisebound::oracle
