#include "noisebound/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "gray_walk.hpp"
#include "noisebound/csv.hpp"
#include "noisebound/errors.hpp"
#include "noisebound/log_sum_exp.hpp"

namespace noisebound {

namespace {

struct BlockPartial {
  StreamingLogSumExp lse;
  double min_energy = std::numeric_limits<double>::infinity();
  std::uint64_t min_bits = 0;
  double max_abs = 0.0;
};

void merge_partials(BlockPartial& a, const BlockPartial& b) {
  a.lse.merge(b.lse);
  if (b.min_energy < a.min_energy || (b.min_energy == a.min_energy && b.min_bits < a.min_bits)) {
    a.min_energy = b.min_energy;
    a.min_bits = b.min_bits;
  }
  a.max_abs = std::max(a.max_abs, b.max_abs);
}

void check_cap(int n, int cap) {
  if (n > cap) {
    throw InputError("enumeration of " + std::to_string(n) + " spins exceeds the cap of " +
                     std::to_string(cap) + " qubits");
  }
}

int thread_count(int requested) {
  require(requested >= 1, "thread count must be at least 1");
  return requested;
}

}  // namespace

double log_two_cosh(double gamma) {
  const double a = std::abs(gamma);
  return a + std::log1p(std::exp(-2.0 * a));
}

PartitionSummary enumerate(const GibbsSpec& spec, const EnumerationOptions& options) {
  const IsingInstance& instance = spec.instance;
  const int n = instance.size();
  check_cap(n, options.max_qubits);
  require(spec.beta >= 0.0 && std::isfinite(spec.beta), "beta must be finite and non-negative");
  require(std::isfinite(spec.gamma), "gamma must be finite");
  const int threads = thread_count(options.threads);

  const auto blocks = static_cast<std::int64_t>(detail::block_count(n));
  std::vector<BlockPartial> partials(blocks);
  const double beta = spec.beta;
  const double gamma = spec.gamma;

#pragma omp parallel for schedule(static) num_threads(threads)
  for (std::int64_t b = 0; b < blocks; ++b) {
    BlockPartial& part = partials[b];
    detail::walk_block(instance, static_cast<std::uint64_t>(b),
                       [&](std::uint64_t bits, double energy, int magnetization) {
                         part.lse.add(-beta * energy + gamma * magnetization, energy);
                         if (energy < part.min_energy ||
                             (energy == part.min_energy && bits < part.min_bits)) {
                           part.min_energy = energy;
                           part.min_bits = bits;
                         }
                         part.max_abs = std::max(part.max_abs, std::abs(energy));
                       });
  }

  const BlockPartial total = tree_reduce(std::move(partials), merge_partials);
  PartitionSummary out;
  out.log_z = total.lse.log_sum();
  out.mean_energy = total.lse.weighted_mean();
  out.ground_energy = total.min_energy;
  out.ground_bits = total.min_bits;
  out.hamiltonian_norm = total.max_abs;
  return out;
}

EnergySpectrum::EnergySpectrum(const IsingInstance& instance, const EnumerationOptions& options)
    : n_(instance.size()), threads_(thread_count(options.threads)), has_fields_(instance.has_fields()) {
  check_cap(n_, std::min(options.max_qubits, kMaxQubits));
  const std::uint64_t states = std::uint64_t{1} << n_;
  energies_.resize(states);
  magnetization_.resize(states);

  const auto blocks = static_cast<std::int64_t>(detail::block_count(n_));
  std::vector<std::pair<double, double>> extremes(blocks);
#pragma omp parallel for schedule(static) num_threads(threads_)
  for (std::int64_t b = 0; b < blocks; ++b) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    detail::walk_block(instance, static_cast<std::uint64_t>(b),
                       [&](std::uint64_t bits, double energy, int magnetization) {
                         energies_[bits] = energy;
                         magnetization_[bits] = static_cast<std::int8_t>(magnetization);
                         lo = std::min(lo, energy);
                         hi = std::max(hi, std::abs(energy));
                       });
    extremes[b] = {lo, hi};
  }
  ground_energy_ = std::numeric_limits<double>::infinity();
  for (const auto& [lo, hi] : extremes) {
    ground_energy_ = std::min(ground_energy_, lo);
    hamiltonian_norm_ = std::max(hamiltonian_norm_, hi);
  }
}

EnergySpectrum::Moments EnergySpectrum::moments(double beta, double gamma) const {
  require(beta >= 0.0 && std::isfinite(beta), "beta must be finite and non-negative");
  require(std::isfinite(gamma), "gamma must be finite");
  // Without fields or bias, E(s) = E(-s): sum the half with the top spin up.
  const bool symmetric = !has_fields_ && gamma == 0.0 && n_ >= 1;
  const std::uint64_t count = (std::uint64_t{1} << n_) >> (symmetric ? 1 : 0);
  constexpr std::uint64_t chunk = std::uint64_t{1} << detail::kBlockLog2;
  const auto chunks = static_cast<std::int64_t>((count + chunk - 1) / chunk);

  std::vector<StreamingLogSumExp> partials(chunks);
  const double* energies = energies_.data();
  const std::int8_t* magnetization = magnetization_.data();
#pragma omp parallel for schedule(static) num_threads(threads_)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk;
    const std::uint64_t end = std::min(count, begin + chunk);
    StreamingLogSumExp lse;
    if (gamma == 0.0) {
      for (std::uint64_t x = begin; x < end; ++x) lse.add(-beta * energies[x], energies[x]);
    } else {
      for (std::uint64_t x = begin; x < end; ++x) {
        lse.add(-beta * energies[x] + gamma * magnetization[x], energies[x]);
      }
    }
    partials[c] = lse;
  }
  const StreamingLogSumExp total =
      tree_reduce(std::move(partials), [](StreamingLogSumExp& a, const StreamingLogSumExp& b) { a.merge(b); });
  Moments out;
  out.log_z = total.log_sum() + (symmetric ? kLn2 : 0.0);
  out.mean_energy = total.weighted_mean();
  return out;
}

void BetaSearch::validate() const {
  require(beta_min > 0.0 && beta_max > beta_min && std::isfinite(beta_max),
          "beta search needs 0 < beta_min < beta_max");
  require(points >= 2, "beta search needs at least 2 grid points");
  require(relative_tolerance > 0.0, "beta search tolerance must be positive");
}

FreeEnergyBound::FreeEnergyBound(const EnergySpectrum& spectrum, double gamma, BetaSearch search)
    : spectrum_(spectrum), gamma_(gamma), search_(search) {
  search_.validate();
  require(std::isfinite(gamma), "gamma must be finite");
  log_norm_ = spectrum_.size() * log_two_cosh(gamma_);
  fixed_point_energy_ = spectrum_.moments(0.0, gamma_).mean_energy;
  const double log_lo = std::log(search_.beta_min);
  const double log_hi = std::log(search_.beta_max);
  grid_.resize(search_.points);
  grid_log_z_.resize(search_.points);
  for (int k = 0; k < search_.points; ++k) {
    grid_[k] = std::exp(log_lo + (log_hi - log_lo) * k / (search_.points - 1));
    grid_log_z_[k] = log_partition(grid_[k]);
  }
}

double FreeEnergyBound::log_partition(double beta) const {
  return spectrum_.moments(beta, gamma_).log_z - log_norm_;
}

double FreeEnergyBound::objective(double beta, double budget_nats) const {
  return (-log_partition(beta) - budget_nats) / beta;
}

double FreeEnergyBound::max_budget_bits() const {
  return spectrum_.size() * (std::abs(gamma_) + log_two_cosh(gamma_)) / kLn2;
}

VariationalBound FreeEnergyBound::evaluate(double budget_bits) const {
  require(budget_bits >= 0.0, "entropy budget must be non-negative");
  require(budget_bits <= max_budget_bits() * (1.0 + 1e-12),
          "entropy budget exceeds the largest relative entropy to the fixed point");
  const double lambda = budget_bits * kLn2;

  VariationalBound best{-std::numeric_limits<double>::infinity(), 0.0};
  std::size_t arg = 0;
  for (std::size_t k = 0; k < grid_.size(); ++k) {
    const double value = (-grid_log_z_[k] - lambda) / grid_[k];
    if (value > best.bound) {
      best = {value, grid_[k]};
      arg = k;
    }
  }

  // Golden-section search in log(beta) on the bracket around the grid argmax.
  double a = std::log(grid_[arg == 0 ? 0 : arg - 1]);
  double b = std::log(grid_[std::min(arg + 1, grid_.size() - 1)]);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto f = [&](double log_beta) {
    const double beta = std::exp(log_beta);
    const double value = objective(beta, lambda);
    if (value > best.bound) best = {value, beta};
    return value;
  };
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > search_.relative_tolerance) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }

  if (budget_bits == 0.0 && fixed_point_energy_ >= best.bound) best = {fixed_point_energy_, 0.0};
  return best;
}

VariationalBound variational_lower_bound(const IsingInstance& instance, const EntropyBudget& budget,
                                         double gamma, const BetaSearch& search,
                                         const EnumerationOptions& options) {
  const EnergySpectrum spectrum(instance, options);
  const FreeEnergyBound bound(spectrum, gamma, search);
  return bound.evaluate(budget.bits);
}

CrossingDepth crossing_depth(const FreeEnergyBound& bound, const DiscreteNoise& noise,
                             double classical_energy, bool include_measurement, int max_depth) {
  noise.validate();
  require(std::isfinite(classical_energy), "classical energy must be finite");
  require(max_depth >= 1, "max_depth must be positive");
  const double ground = bound.spectrum().ground_energy();
  require(classical_energy >= ground - 1e-12 * std::max(1.0, std::abs(ground)),
          "classical energy below the ground energy cannot be certified");
  const int n = bound.spectrum().size();

  auto at = [&](int depth) {
    const double bits = entropy_budget(noise, depth, n, include_measurement).bits;
    return CrossingDepth{depth, bound.evaluate(std::min(bits, bound.max_budget_bits())).bound, bits};
  };

  CrossingDepth zero = at(0);
  if (zero.bound >= classical_energy) return zero;
  CrossingDepth never{std::nullopt, 0.0, 0.0};
  if (classical_energy >= bound.fixed_point_energy()) return never;
  if (noise.effective_log_rate() == 0.0) return never;

  int lo = 0;
  int hi = 1;
  CrossingDepth hit = at(hi);
  while (hit.bound < classical_energy) {
    if (hi >= max_depth) return never;
    lo = hi;
    hi = static_cast<int>(std::min<long>(2L * hi, max_depth));
    hit = at(hi);
  }
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    CrossingDepth probe = at(mid);
    if (probe.bound >= classical_energy) {
      hi = mid;
      hit = probe;
    } else {
      lo = mid;
    }
  }
  return hit;
}

void write_partition_csv(std::ostream& out, const EnergySpectrum& spectrum, double gamma,
                         std::span<const double> betas) {
  write_csv_header(out, {"beta", "logZ_nats", "mean_energy"});
  for (double beta : betas) {
    const auto m = spectrum.moments(beta, gamma);
    write_csv_row(out, {beta, m.log_z, m.mean_energy});
  }
}

}  // namespace noisebound
