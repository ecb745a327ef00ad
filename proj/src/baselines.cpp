#include "noisebound/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "noisebound/errors.hpp"
#include "noisebound/rng.hpp"
#include "noisebound/sampler.hpp"

namespace noisebound {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

AnnealingResult simulated_annealing(const IsingInstance& instance, const AnnealingSchedule& schedule,
                                    int restarts, std::uint64_t seed, bool require_certified,
                                    int threads) {
  require(schedule.beta_start > 0.0 && schedule.beta_start <= schedule.beta_end &&
              std::isfinite(schedule.beta_end),
          "annealing needs 0 < beta_start <= beta_end");
  require(schedule.sweeps >= 1 && restarts >= 1 && threads >= 1,
          "sweeps, restarts and threads must be positive");
  const auto start = Clock::now();

  AnnealingResult out;
  out.certified = rapid_mixing_check(instance, schedule.beta_end).ok;
  require(out.certified || !require_certified,
          "beta_end lies outside the certified rapid-mixing range");

  std::vector<double> ladder(schedule.sweeps);
  for (int t = 0; t < schedule.sweeps; ++t) {
    const double frac = schedule.sweeps == 1 ? 1.0 : static_cast<double>(t) / (schedule.sweeps - 1);
    ladder[t] = schedule.beta_start * std::pow(schedule.beta_end / schedule.beta_start, frac);
  }

  std::vector<SpinConfig> best(restarts);
  std::vector<double> best_energy(restarts);
  out.final_energies.resize(restarts);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (int r = 0; r < restarts; ++r) {
    GlauberChain chain(instance, ladder.front(), 0.0, derive_seed(seed, r));
    best[r] = chain.config();
    best_energy[r] = chain.energy();
    for (double beta : ladder) {
      chain.set_beta(beta);
      chain.sweep();
      if (chain.energy() < best_energy[r]) {
        best_energy[r] = chain.energy();
        best[r] = chain.config();
      }
    }
    best_energy[r] = instance.energy(best[r]);
    out.final_energies[r] = instance.energy(chain.config());
  }

  std::size_t arg = 0;
  for (int r = 1; r < restarts; ++r) {
    if (best_energy[r] < best_energy[arg]) arg = r;
  }
  out.result.best_config = best[arg];
  out.result.best_energy = best_energy[arg];
  out.result.iterations = static_cast<std::int64_t>(restarts) * schedule.sweeps;
  double total = 0.0;
  for (double e : out.final_energies) total += e;
  out.mean_final_energy = total / restarts;
  out.result.wall_time = seconds_since(start);
  return out;
}

double cut_weight_total(const IsingInstance& instance) {
  double w = 0.0;
  for (const auto& e : instance.edges()) w -= e.coupling;
  return w;
}

double cut_value(const IsingInstance& instance, const SpinConfig& spins) {
  require(static_cast<int>(spins.size()) == instance.size(), "configuration length does not match instance size");
  double cut = 0.0;
  for (const auto& e : instance.edges()) cut += -e.coupling * (1.0 - spins[e.i] * spins[e.j]) / 2.0;
  return cut;
}

RelaxationResult burer_monteiro_round(const IsingInstance& instance, const RelaxationOptions& options,
                                      std::uint64_t seed) {
  require(!instance.has_fields(), "the cut relaxation needs an instance without fields");
  const int n = instance.size();
  const int k = options.rank > 0 ? options.rank
                                 : static_cast<int>(std::ceil(std::sqrt(2.0 * n)));
  require(k >= 2, "relaxation rank must be at least 2");
  require(options.iterations >= 1 && options.rounding_draws >= 1,
          "iterations and rounding draws must be positive");
  const auto start = Clock::now();
  Rng rng(seed);

  // Row-major n x k unit vectors.
  std::vector<double> v(static_cast<std::size_t>(n) * k);
  auto row = [&](std::vector<double>& m, int i) { return m.data() + static_cast<std::size_t>(i) * k; };
  auto normalize_rows = [&](std::vector<double>& m) {
    for (int i = 0; i < n; ++i) {
      double* r = row(m, i);
      double norm = 0.0;
      for (int c = 0; c < k; ++c) norm += r[c] * r[c];
      norm = std::sqrt(norm);
      if (norm == 0.0) {
        r[0] = 1.0;
        continue;
      }
      for (int c = 0; c < k; ++c) r[c] /= norm;
    }
  };
  for (double& x : v) x = rng.normal();
  normalize_rows(v);

  auto objective = [&](const std::vector<double>& m) {
    double value = 0.0;
    for (const auto& e : instance.edges()) {
      const double* a = m.data() + static_cast<std::size_t>(e.i) * k;
      const double* b = m.data() + static_cast<std::size_t>(e.j) * k;
      double dot = 0.0;
      for (int c = 0; c < k; ++c) dot += a[c] * b[c];
      value += -e.coupling * (1.0 - dot) / 2.0;
    }
    return value;
  };

  const double max_w = instance.max_abs_coupling();
  RelaxationResult out;
  double current = objective(v);
  if (max_w > 0.0) {
    const double step = 1.0 / (2.0 * instance.max_degree() * max_w);
    const double tolerance = 1e-10 * instance.max_degree() * max_w;
    std::vector<double> next(v.size());
    for (int it = 1; it <= options.iterations; ++it) {
      // d/dv_i of sum w (1 - v_i.v_j)/2 is -sum_j w_ij v_j / 2, with w = -a.
      double residual = 0.0;
      for (int i = 0; i < n; ++i) {
        double* out_row = row(next, i);
        const double* in_row = v.data() + static_cast<std::size_t>(i) * k;
        std::fill(out_row, out_row + k, 0.0);
        for (const auto& nb : instance.neighbors(i)) {
          const double* other = v.data() + static_cast<std::size_t>(nb.site) * k;
          for (int c = 0; c < k; ++c) out_row[c] += nb.coupling * other[c] / 2.0;
        }
        double radial = 0.0;
        for (int c = 0; c < k; ++c) radial += out_row[c] * in_row[c];
        double tangential = 0.0;
        for (int c = 0; c < k; ++c) tangential += std::pow(out_row[c] - radial * in_row[c], 2);
        residual = std::max(residual, std::sqrt(tangential));
        for (int c = 0; c < k; ++c) out_row[c] = in_row[c] + step * out_row[c];
      }
      out.iterations = it;
      if (residual <= tolerance) break;
      normalize_rows(next);
      v.swap(next);
    }
    current = objective(v);
  }
  out.relaxation_value = current;

  const double total_weight = cut_weight_total(instance);
  std::vector<double> r(k);
  SpinConfig spins(n);
  double cut_sum = 0.0;
  out.best_cut = -std::numeric_limits<double>::infinity();
  for (int draw = 0; draw < options.rounding_draws; ++draw) {
    for (double& x : r) x = rng.normal();
    for (int i = 0; i < n; ++i) {
      const double* a = v.data() + static_cast<std::size_t>(i) * k;
      double dot = 0.0;
      for (int c = 0; c < k; ++c) dot += a[c] * r[c];
      spins[i] = dot >= 0.0 ? 1 : -1;
    }
    const double cut = cut_value(instance, spins);
    cut_sum += cut;
    if (cut > out.best_cut) {
      out.best_cut = cut;
      out.rounded.best_config = spins;
    }
  }
  out.mean_cut = cut_sum / options.rounding_draws;
  out.mean_energy = total_weight - 2.0 * out.mean_cut;
  out.rounded.best_energy = instance.energy(out.rounded.best_config);
  out.rounded.iterations = out.iterations;
  out.rounded.wall_time = seconds_since(start);
  return out;
}

}  // namespace noisebound
