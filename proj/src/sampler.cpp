#include "noisebound/sampler.hpp"

#include <cmath>
#include <ostream>

#include "noisebound/csv.hpp"
#include "noisebound/errors.hpp"

namespace noisebound {

RapidMixing rapid_mixing_check(const IsingInstance& instance, double beta) {
  require(beta >= 0.0 && std::isfinite(beta), "beta must be finite and non-negative");
  RapidMixing out;
  const double spectral_margin = 1.0 - beta * spectral_norm(instance);
  out.spectral = {"beta*||A||<1", spectral_margin > 0.0, spectral_margin};
  out.ok = out.spectral.ok;
  out.margin = out.spectral.margin;
  out.label = out.spectral.label;
  if (instance.family() == InstanceFamily::sherrington_kirkpatrick) {
    const double sk_margin = 1.0 - 4.0 * beta;
    out.sk = MixingCertificate{"sk:beta<1/4", sk_margin > 0.0, sk_margin};
    if (sk_margin > out.margin) {
      out.ok = out.sk->ok;
      out.margin = out.sk->margin;
      out.label = out.sk->label;
    }
  }
  return out;
}

double heat_bath_up_probability(double beta, double local_field, double gamma) {
  return 1.0 / (1.0 + std::exp(-2.0 * beta * local_field - 2.0 * gamma));
}

GlauberChain::GlauberChain(const IsingInstance& instance, double beta, double gamma, std::uint64_t seed)
    : instance_(instance), beta_(beta), gamma_(gamma), rng_(seed) {
  spins_.resize(instance.size());
  for (auto& s : spins_) s = (rng_.next_u64() >> 63) ? -1 : 1;
  energy_ = instance_.energy(spins_);
}

GlauberChain::GlauberChain(const IsingInstance& instance, double beta, double gamma, std::uint64_t seed,
                           SpinConfig initial)
    : instance_(instance), beta_(beta), gamma_(gamma), rng_(seed), spins_(std::move(initial)) {
  energy_ = instance_.energy(spins_);
}

void GlauberChain::sweep() {
  const int n = instance_.size();
  for (int k = 0; k < n; ++k) {
    const double h = instance_.local_field(spins_, k);
    const std::int8_t next = rng_.uniform() < heat_bath_up_probability(beta_, h, gamma_) ? 1 : -1;
    if (next != spins_[k]) {
      energy_ += 2.0 * spins_[k] * h;
      spins_[k] = next;
    }
  }
  ++sweeps_;
}

SampleSet glauber_run(const GibbsSpec& spec, const SamplingSchedule& schedule, std::uint64_t seed) {
  require(spec.beta >= 0.0 && std::isfinite(spec.beta), "beta must be finite and non-negative");
  require(schedule.sweeps >= 1 && schedule.thin >= 1 && schedule.chains >= 1 && schedule.threads >= 1,
          "sweeps, thin, chains and threads must be positive");
  const RapidMixing certificate = rapid_mixing_check(spec.instance, spec.beta);

  SampleSet out;
  out.certified = certificate.ok;
  if (schedule.burn_in) {
    require(*schedule.burn_in >= 0, "burn-in must be non-negative");
    out.burn_in = *schedule.burn_in;
  } else {
    require(certificate.ok, "burn-in must be given outside the certified mixing regime");
    out.burn_in = 100 * static_cast<int>(std::ceil(1.0 / certificate.margin));
  }

  const int per_chain = schedule.sweeps / schedule.thin;
  std::vector<std::vector<SpinConfig>> configs(schedule.chains);
  std::vector<std::vector<double>> energies(schedule.chains);
#pragma omp parallel for schedule(dynamic) num_threads(schedule.threads)
  for (int c = 0; c < schedule.chains; ++c) {
    GlauberChain chain(spec.instance, spec.beta, spec.gamma, derive_seed(seed, c));
    for (int t = 0; t < out.burn_in; ++t) chain.sweep();
    configs[c].reserve(per_chain);
    energies[c].reserve(per_chain);
    for (int t = 1; t <= schedule.sweeps; ++t) {
      chain.sweep();
      if (t % schedule.thin == 0) {
        configs[c].push_back(chain.config());
        energies[c].push_back(chain.energy());
      }
    }
  }
  for (int c = 0; c < schedule.chains; ++c) {
    out.configs.insert(out.configs.end(), configs[c].begin(), configs[c].end());
    out.energies.insert(out.energies.end(), energies[c].begin(), energies[c].end());
  }
  return out;
}

EnergyEstimate estimate_energy(std::span<const double> energies) {
  const std::size_t count = energies.size();
  require(count >= 2, "energy estimate needs at least 2 samples");
  const std::size_t batches = std::min<std::size_t>(16, count);
  double total = 0.0;
  for (double e : energies) total += e;
  EnergyEstimate out;
  out.mean = total / count;

  std::vector<double> means(batches);
  for (std::size_t b = 0; b < batches; ++b) {
    const std::size_t begin = b * count / batches;
    const std::size_t end = (b + 1) * count / batches;
    double s = 0.0;
    for (std::size_t k = begin; k < end; ++k) s += energies[k];
    means[b] = s / (end - begin);
  }
  double grand = 0.0;
  for (double m : means) grand += m;
  grand /= batches;
  double var = 0.0;
  for (double m : means) var += (m - grand) * (m - grand);
  var /= (batches - 1);
  out.standard_error = std::sqrt(var / batches);
  return out;
}

EnergyEstimate estimate_energy(const SampleSet& samples, const IsingInstance& instance) {
  std::vector<double> energies;
  energies.reserve(samples.configs.size());
  for (const auto& s : samples.configs) energies.push_back(instance.energy(s));
  return estimate_energy(energies);
}

void write_samples_csv(std::ostream& out, const SampleSet& samples) {
  write_csv_header(out, {"bitstring", "energy", "certified"});
  for (std::size_t k = 0; k < samples.configs.size(); ++k) {
    for (auto s : samples.configs[k]) out << (s < 0 ? '1' : '0');
    out << ',' << format_number(samples.energies[k]) << ',' << (samples.certified ? 1 : 0) << '\n';
  }
}

}  // namespace noisebound
