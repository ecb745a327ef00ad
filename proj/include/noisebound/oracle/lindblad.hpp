#pragma once

#include <vector>

#include "noisebound/annealer.hpp"
#include "noisebound/instances.hpp"
#include "noisebound/oracle/density.hpp"

namespace noisebound::oracle {

inline constexpr int kLindbladQubitCap = 6;

struct LindbladOptions {
  double dt = 1e-2;
  int record_every = 0;          // 0 records only the initial and final states
  bool estimate_error = false;   // rerun at dt/2 and compare final states
};

struct LindbladTrajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
  double max_trace_drift = 0.0;
  double step_halving_error = 0.0;  // max |rho_dt - rho_{dt/2}| entry at T, when requested
};

// Fourth-order Runge-Kutta for
//   drho/dt = -i [H(t), rho] + sum_k D_k(rho),
//   H(t) = g_I(t/T) H_I + g_0(t/T) H_0,  H_0 = -sum_k Gamma_k X_k,
// with jump operators sqrt(r1) |0><1|, sqrt(r2/2) Z, sqrt(r3) X and sqrt(r3) Z
// on every qubit. A per-step trace drift above 1e-6 is rejected.
LindbladTrajectory lindblad_evolve(const Schedule& schedule, const IsingInstance& instance,
                                   const ContinuousNoise& noise, const DensityMatrix& initial,
                                   const LindbladOptions& options = {});

// sigma_gamma on every qubit.
DensityMatrix fixed_point_state(const ContinuousNoise& noise, int n);

}  // namespace noisebound::oracle
