#include "noisebound/workflows.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "noisebound/csv.hpp"
#include "noisebound/errors.hpp"

namespace noisebound {

DiscreteNoise superconducting_noise(bool include_measurement_rate) {
  return {.p1 = 1.6e-3, .p2 = 6.2e-3, .pm = include_measurement_rate ? 3.8e-2 : 0.0, .f1 = 0.5, .f2 = 0.5};
}

SkCrossingResult sk_crossing(const IsingInstance& instance, const SkCrossingOptions& options, std::uint64_t seed) {
  const EnergySpectrum spectrum(instance, {.max_qubits = EnergySpectrum::kMaxQubits, .threads = options.threads});
  const FreeEnergyBound bound(spectrum, 0.0);

  SkCrossingResult out;
  out.ground_energy = spectrum.ground_energy();
  out.fixed_point_energy = bound.fixed_point_energy();

  const SampleSet samples = glauber_run({instance, options.sample_beta, 0.0}, options.sampling, seed);
  out.certified = samples.certified;
  const EnergyEstimate estimate = estimate_energy(samples.energies);
  out.sampled_mean = estimate.mean;
  out.sampled_stderr = estimate.standard_error;
  out.sampled_best = *std::min_element(samples.energies.begin(), samples.energies.end());

  out.mean_crossing = crossing_depth(bound, options.noise, out.sampled_mean, options.include_measurement);
  out.best_crossing = crossing_depth(bound, options.noise, out.sampled_best, options.include_measurement);
  return out;
}

double crossing_density(const FreeEnergyBound& bound, double energy) {
  const int n = bound.spectrum().size();
  auto at = [&](double density) { return bound.evaluate(density * n).bound; };
  if (at(0.0) < energy) return 0.0;
  if (at(1.0) >= energy) return 1.0;
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 50 && hi - lo > 1e-9; ++it) {
    const double mid = 0.5 * (lo + hi);
    (at(mid) >= energy ? lo : hi) = mid;
  }
  return lo;
}

MaxcutFigure maxcut_figure(const IsingInstance& instance, const MaxcutFigureOptions& options, std::uint64_t seed) {
  require(options.points >= 2, "figure needs at least two densities");
  require(!instance.has_fields(), "MAXCUT figure needs an instance without fields");
  const int n = instance.size();
  const double coupling_norm = spectral_norm(instance);
  require(coupling_norm > 0.0, "MAXCUT figure needs at least one edge");

  MaxcutFigure fig;
  fig.beta_max = 1.0 / coupling_norm;
  const EnergySpectrum spectrum(instance, {.max_qubits = EnergySpectrum::kMaxQubits, .threads = options.threads});
  const FreeEnergyBound bound(spectrum, 0.0,
                              {.beta_min = std::min(options.beta_min, fig.beta_max / 2), .beta_max = fig.beta_max});
  fig.ground_energy = spectrum.ground_energy();
  const double total_weight = cut_weight_total(instance);
  fig.max_cut = (total_weight - fig.ground_energy) / 2.0;

  for (int k = 0; k < options.points; ++k) {
    const double density = static_cast<double>(k) / (options.points - 1);
    fig.densities.push_back(density);
    fig.bound_density.push_back(bound.evaluate(density * n).bound / n);
  }
  fig.monotone = std::is_sorted(fig.bound_density.rbegin(), fig.bound_density.rend());

  AnnealingSchedule schedule = options.annealing;
  if (schedule.beta_end == 0.0) schedule.beta_end = 0.99 * fig.beta_max;
  const auto sa = simulated_annealing(instance, schedule, options.restarts, derive_seed(seed, 0), false,
                                      options.threads);
  fig.sa_energy = sa.mean_final_energy;
  const auto sdp = burer_monteiro_round(instance, options.relaxation, derive_seed(seed, 1));
  fig.sdp_energy = sdp.mean_energy;
  fig.relaxation_value = sdp.relaxation_value;
  fig.heuristic_energy = total_weight - 2.0 * options.heuristic_ratio * fig.max_cut;

  fig.sa_crossing = crossing_density(bound, fig.sa_energy);
  fig.sdp_crossing = crossing_density(bound, fig.sdp_energy);
  fig.heuristic_crossing = crossing_density(bound, fig.heuristic_energy);
  return fig;
}

void write_maxcut_csv(std::ostream& out, const MaxcutFigure& figure, int n) {
  write_csv_header(out, {"density", "bound_energy_density", "sa_energy_density", "sdp_energy_density",
                         "heuristic_energy_density"});
  for (std::size_t k = 0; k < figure.densities.size(); ++k) {
    write_csv_row(out, {figure.densities[k], figure.bound_density[k], figure.sa_energy / n,
                        figure.sdp_energy / n, figure.heuristic_energy / n});
  }
}

RealmInputs annealer_figure_inputs(int degree, double eps) {
  require(degree >= 1, "degree must be positive");
  return {.n = 1, .mean_field = 1.0, .coupling_norm = static_cast<double>(degree),
          .hamiltonian_norm = degree / 2.0, .eps = eps};
}

ContinuousNoise annealer_figure_noise(double damping_ratio, double control_rate) {
  require(damping_ratio >= 0.0 && control_rate > 0.0, "annealer figure needs r1/r3 >= 0 and r3 > 0");
  return {.r1 = damping_ratio * control_rate, .r2 = 0.0, .r3 = control_rate};
}

}  // namespace noisebound
