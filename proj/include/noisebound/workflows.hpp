#pragma once

// End-to-end recipes combining enumeration, sampling, baselines and bounds.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "noisebound/annealer.hpp"
#include "noisebound/baselines.hpp"
#include "noisebound/bounds.hpp"
#include "noisebound/partition.hpp"
#include "noisebound/sampler.hpp"

namespace noisebound {

// Depolarizing rates of a superconducting device with half one-qubit and
// half two-qubit layers.
DiscreteNoise superconducting_noise(bool include_measurement_rate = true);

struct SkCrossingOptions {
  double sample_beta = 0.25;
  SamplingSchedule sampling{.sweeps = 2000, .burn_in = std::nullopt, .thin = 1, .chains = 4, .threads = 1};
  DiscreteNoise noise = superconducting_noise();
  bool include_measurement = false;
  int threads = 1;
};

struct SkCrossingResult {
  double ground_energy = 0.0;
  double fixed_point_energy = 0.0;
  double sampled_mean = 0.0;      // Gibbs-sample mean energy
  double sampled_stderr = 0.0;
  double sampled_best = 0.0;      // lowest sampled energy
  bool certified = false;
  CrossingDepth mean_crossing;    // classical energy = sampled mean
  CrossingDepth best_crossing;    // classical energy = lowest sampled energy
};

SkCrossingResult sk_crossing(const IsingInstance& instance, const SkCrossingOptions& options, std::uint64_t seed);

struct MaxcutFigureOptions {
  int points = 51;                 // entropy densities 0, 1/(points-1), ..., 1
  AnnealingSchedule annealing{.beta_start = 0.01, .beta_end = 0.0, .sweeps = 1000};  // beta_end 0 selects 0.99 / ||A||
  int restarts = 100;
  RelaxationOptions relaxation{};
  double heuristic_ratio = 0.95;
  double beta_min = 1e-4;
  int threads = 1;
};

struct MaxcutFigure {
  std::vector<double> densities;       // budget / n, bits per qubit
  std::vector<double> bound_density;   // bound / n
  double beta_max = 0.0;               // 1 / ||A||
  double ground_energy = 0.0;
  double max_cut = 0.0;
  double sa_energy = 0.0;              // mean final energy of certified annealing runs
  double sdp_energy = 0.0;             // energy of the mean rounded cut
  double heuristic_energy = 0.0;       // energy of heuristic_ratio * max cut
  double sa_crossing = 0.0;            // largest density at which the bound is still >= the method
  double sdp_crossing = 0.0;
  double heuristic_crossing = 0.0;
  double relaxation_value = 0.0;
  bool monotone = false;               // bound_density non-increasing in density
};

MaxcutFigure maxcut_figure(const IsingInstance& instance, const MaxcutFigureOptions& options, std::uint64_t seed);

// Columns: density, bound_energy_density, sa_energy_density, sdp_energy_density, heuristic_energy_density.
void write_maxcut_csv(std::ostream& out, const MaxcutFigure& figure, int n);

// Largest density in [0, 1] with bound(density * n bits) >= energy, by bisection.
double crossing_density(const FreeEnergyBound& bound, double energy);

// Per-qubit inputs for a degree-regular unit-coupling device:
// ||A|| = degree, ||H_I|| / n = degree / 2, mean transverse field 1.
RealmInputs annealer_figure_inputs(int degree, double eps);

// Control-error rate and amplitude-damping ratios used for the annealer figure.
ContinuousNoise annealer_figure_noise(double damping_ratio, double control_rate = 2e-2);

}  // namespace noisebound
