#pragma once

// Classical competitors: simulated annealing with heat-bath sweeps, and a
// low-rank (Burer-Monteiro) MAXCUT relaxation with random-hyperplane rounding.
//
// MAXCUT form of an instance without fields: cut weights w_ij = -a_ij and
//   cut(s) = sum_{edges} w_ij (1 - s_i s_j) / 2,   E(s) = sum w_ij - 2 cut(s).

#include <cstdint>
#include <vector>

#include "noisebound/instances.hpp"

namespace noisebound {

struct OptimizationResult {
  SpinConfig best_config;
  double best_energy = 0.0;
  std::int64_t iterations = 0;
  double wall_time = 0.0;  // seconds
};

struct AnnealingSchedule {
  double beta_start = 0.1;
  double beta_end = 3.0;
  int sweeps = 1000;
};

struct AnnealingResult {
  OptimizationResult result;          // best energy ever visited, over all restarts
  std::vector<double> final_energies; // energy at the end of each restart
  double mean_final_energy = 0.0;
  bool certified = false;             // beta_end passes the rapid-mixing check
};

// Geometric beta ladder over `sweeps` sweeps; restart r uses derive_seed(seed, r).
// With require_certified, a beta_end outside the rapid-mixing range is rejected.
AnnealingResult simulated_annealing(const IsingInstance& instance, const AnnealingSchedule& schedule,
                                    int restarts, std::uint64_t seed, bool require_certified = false,
                                    int threads = 1);

double cut_weight_total(const IsingInstance& instance);
double cut_value(const IsingInstance& instance, const SpinConfig& spins);

struct RelaxationOptions {
  int rank = 0;  // 0 selects ceil(sqrt(2 n))
  int iterations = 200000;
  int rounding_draws = 100;
};

struct RelaxationResult {
  double relaxation_value = 0.0;  // sum w (1 - v_i.v_j) / 2 at the final vectors
  double best_cut = 0.0;
  double mean_cut = 0.0;          // average over rounding draws
  double mean_energy = 0.0;       // Ising energy of the average rounded cut
  int iterations = 0;
  OptimizationResult rounded;     // best rounded configuration
};

// Projected gradient ascent on unit rows with step 1 / (2 max degree max |w|),
// stopped when every row's tangential gradient is below 1e-10 max degree max |w|
// or at the iteration cap, then random-hyperplane rounding.
RelaxationResult burer_monteiro_round(const IsingInstance& instance, const RelaxationOptions& options,
                                      std::uint64_t seed);

}  // namespace noisebound
