#pragma once

// Exact classical partition functions by full enumeration, and the
// variational lower bound on the energy of any state whose relative entropy
// to a product fixed point sigma_gamma is at most a given budget.
//
// For a bias gamma the enumerated weight of configuration s is
//   exp(-beta E(s) + gamma M(s)),   M(s) = sum_k s_k,
// and the fixed point is sigma_gamma = (e^{gamma Z} / (2 cosh gamma))^{(x) n}.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "noisebound/bounds.hpp"
#include "noisebound/instances.hpp"

namespace noisebound {

struct GibbsSpec {
  const IsingInstance& instance;
  double beta = 0.0;
  double gamma = 0.0;
};

struct EnumerationOptions {
  int max_qubits = 30;
  int threads = 1;
};

struct PartitionSummary {
  double log_z = 0.0;             // log sum_s exp(-beta E + gamma M), nats
  double mean_energy = 0.0;       // thermal average of E
  double ground_energy = 0.0;     // min_s E(s)
  double hamiltonian_norm = 0.0;  // max_s |E(s)|
  std::uint64_t ground_bits = 0;  // lowest-index minimizer
};

// Gray-code walk over fixed 2^20-configuration blocks; blocks run in
// parallel and are combined by a fixed reduction tree, so the result is
// identical for every thread count.
PartitionSummary enumerate(const GibbsSpec& spec, const EnumerationOptions& options = {});

namespace reference {
// Direct evaluation of every configuration, no incremental updates, serial.
PartitionSummary enumerate_serial(const GibbsSpec& spec);
}  // namespace reference

// log(2 cosh gamma), stable for large |gamma|.
double log_two_cosh(double gamma);

// All 2^n energies and magnetizations, indexed by configuration bits, so
// that repeated partition-function evaluations cost one exp per state.
class EnergySpectrum {
 public:
  static constexpr int kMaxQubits = 26;

  EnergySpectrum(const IsingInstance& instance, const EnumerationOptions& options = {});

  int size() const { return n_; }
  bool has_fields() const { return has_fields_; }
  double ground_energy() const { return ground_energy_; }
  double hamiltonian_norm() const { return hamiltonian_norm_; }
  std::span<const double> energies() const { return energies_; }
  int threads() const { return threads_; }

  struct Moments {
    double log_z = 0.0;
    double mean_energy = 0.0;
  };
  // log sum_s exp(-beta E + gamma M) and the matching mean energy.
  Moments moments(double beta, double gamma = 0.0) const;

 private:
  int n_ = 0;
  int threads_ = 1;
  bool has_fields_ = false;
  double ground_energy_ = 0.0;
  double hamiltonian_norm_ = 0.0;
  std::vector<double> energies_;
  std::vector<std::int8_t> magnetization_;
};

struct BetaSearch {
  double beta_min = 1e-3;
  double beta_max = 1e2;
  int points = 400;
  double relative_tolerance = 1e-6;

  void validate() const;
};

struct VariationalBound {
  double bound = 0.0;      // energy units
  double beta_star = 0.0;  // 0 means the beta -> 0+ limit
};

// beta^{-1} (-log Z_{beta,sigma} - budget), with
// log Z_{beta,sigma} = log sum_s exp(-beta E + gamma M) - n log(2 cosh gamma).
// Grid values are computed once and shared by every budget.
class FreeEnergyBound {
 public:
  FreeEnergyBound(const EnergySpectrum& spectrum, double gamma, BetaSearch search = {});

  double gamma() const { return gamma_; }
  const EnergySpectrum& spectrum() const { return spectrum_; }
  const BetaSearch& search() const { return search_; }

  // tr(sigma_gamma H): the value approached as beta -> 0+ with zero budget.
  double fixed_point_energy() const { return fixed_point_energy_; }

  // log Z_{beta,sigma}, nats.
  double log_partition(double beta) const;
  double objective(double beta, double budget_nats) const;

  // Largest admissible budget: D(|s><s| || sigma) for the least likely s.
  double max_budget_bits() const;

  VariationalBound evaluate(double budget_bits) const;

 private:
  const EnergySpectrum& spectrum_;
  double gamma_ = 0.0;
  double log_norm_ = 0.0;
  double fixed_point_energy_ = 0.0;
  BetaSearch search_;
  std::vector<double> grid_;
  std::vector<double> grid_log_z_;
};

VariationalBound variational_lower_bound(const IsingInstance& instance, const EntropyBudget& budget,
                                         double gamma = 0.0, const BetaSearch& search = {},
                                         const EnumerationOptions& options = {});

struct CrossingDepth {
  std::optional<int> depth;  // nullopt: the bound never reaches the classical energy
  double bound = 0.0;        // bound at the returned depth
  double budget_bits = 0.0;  // budget at the returned depth
};

// Smallest integer depth whose budget pushes the variational bound to or
// above classical_energy. Rejects classical_energy below the ground energy.
CrossingDepth crossing_depth(const FreeEnergyBound& bound, const DiscreteNoise& noise,
                             double classical_energy, bool include_measurement = false,
                             int max_depth = 1 << 24);

// Columns: beta, logZ_nats, mean_energy.
void write_partition_csv(std::ostream& out, const EnergySpectrum& spectrum, double gamma,
                         std::span<const double> betas);

}  // namespace noisebound
