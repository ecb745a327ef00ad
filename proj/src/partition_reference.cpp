#include <cmath>
#include <limits>
#include <vector>

#include "noisebound/errors.hpp"
#include "noisebound/partition.hpp"

namespace noisebound::reference {

PartitionSummary enumerate_serial(const GibbsSpec& spec) {
  const IsingInstance& instance = spec.instance;
  const int n = instance.size();
  require(n <= 24, "serial reference enumeration is limited to 24 spins");
  const std::uint64_t states = std::uint64_t{1} << n;

  std::vector<double> exponents(states);
  std::vector<double> energies(states);
  PartitionSummary out;
  out.ground_energy = std::numeric_limits<double>::infinity();
  double max_exponent = -std::numeric_limits<double>::infinity();
  for (std::uint64_t x = 0; x < states; ++x) {
    const SpinConfig s = config_from_bits(x, n);
    const double e = instance.energy(s);
    int m = 0;
    for (auto v : s) m += v;
    energies[x] = e;
    exponents[x] = -spec.beta * e + spec.gamma * m;
    max_exponent = std::max(max_exponent, exponents[x]);
    if (e < out.ground_energy) {
      out.ground_energy = e;
      out.ground_bits = x;
    }
    out.hamiltonian_norm = std::max(out.hamiltonian_norm, std::abs(e));
  }
  long double z = 0.0L;
  long double ze = 0.0L;
  for (std::uint64_t x = 0; x < states; ++x) {
    const long double w = std::exp(static_cast<long double>(exponents[x] - max_exponent));
    z += w;
    ze += w * energies[x];
  }
  out.log_z = max_exponent + static_cast<double>(std::log(z));
  out.mean_energy = static_cast<double>(ze / z);
  return out;
}

}  // namespace noisebound::reference
