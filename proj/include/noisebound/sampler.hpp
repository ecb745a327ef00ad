#pragma once

// Heat-bath Glauber dynamics for classical Gibbs states
//   pi(s) ~ exp(-beta E(s) + gamma sum_k s_k)
// and the rapid-mixing certificates that make it a polynomial-time sampler.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "noisebound/instances.hpp"
#include "noisebound/partition.hpp"
#include "noisebound/rng.hpp"

namespace noisebound {

struct MixingCertificate {
  std::string label;
  bool ok = false;
  double margin = 0.0;
};

struct RapidMixing {
  bool ok = false;
  double margin = 0.0;              // margin of the reported certificate
  std::string label;                // which certificate is reported
  MixingCertificate spectral;       // beta ||A|| < 1
  std::optional<MixingCertificate> sk;  // beta < 1/4, SK instances only
};

RapidMixing rapid_mixing_check(const IsingInstance& instance, double beta);

// Probability that a site with local field h is set to +1.
double heat_bath_up_probability(double beta, double local_field, double gamma);

class GlauberChain {
 public:
  // Starts from a uniformly random configuration drawn from the chain's generator.
  GlauberChain(const IsingInstance& instance, double beta, double gamma, std::uint64_t seed);
  GlauberChain(const IsingInstance& instance, double beta, double gamma, std::uint64_t seed,
               SpinConfig initial);

  // One pass over sites 0..n-1.
  void sweep();
  void set_beta(double beta) { beta_ = beta; }

  const SpinConfig& config() const { return spins_; }
  double energy() const { return energy_; }
  std::int64_t sweep_count() const { return sweeps_; }
  double beta() const { return beta_; }

 private:
  const IsingInstance& instance_;
  double beta_;
  double gamma_;
  Rng rng_;
  SpinConfig spins_;
  double energy_ = 0.0;
  std::int64_t sweeps_ = 0;
};

struct SamplingSchedule {
  int sweeps = 1000;              // recorded sweeps per chain, after burn-in
  std::optional<int> burn_in;     // default 100 * ceil(1 / margin) when certified
  int thin = 1;
  int chains = 1;
  int threads = 1;
};

struct SampleSet {
  std::vector<SpinConfig> configs;
  std::vector<double> energies;
  bool certified = false;
  int burn_in = 0;
};

// Chains are seeded with derive_seed(seed, chain) and concatenated in chain order.
SampleSet glauber_run(const GibbsSpec& spec, const SamplingSchedule& schedule, std::uint64_t seed);

struct EnergyEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
};

// Batch means over min(16, N) contiguous batches.
EnergyEstimate estimate_energy(std::span<const double> energies);
EnergyEstimate estimate_energy(const SampleSet& samples, const IsingInstance& instance);

// Bitstring position k is bit k (0 for s_k = +1). Columns: bitstring, energy, certified.
void write_samples_csv(std::ostream& out, const SampleSet& samples);

}  // namespace noisebound
