#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "noisebound/errors.hpp"
#include "noisebound/partition.hpp"
#include "noisebound/rng.hpp"
#include "noisebound/sampler.hpp"

using namespace noisebound;

namespace {

IsingInstance k4_antiferro() {
  return IsingInstance(4, {{0, 1, -1}, {0, 2, -1}, {0, 3, -1}, {1, 2, -1}, {1, 3, -1}, {2, 3, -1}}, {0, 0, 0, 0});
}

IsingInstance random_instance(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j, rng.normal()});
  std::vector<double> b(n);
  for (auto& x : b) x = rng.normal();
  return IsingInstance(n, edges, b);
}

// Probability that the single-site heat-bath update at `site` takes s to t
// (t equal to s or to s with `site` flipped), computed from the weights
// directly rather than from the library's closed form.
double site_kernel(const IsingInstance& inst, double beta, double gamma, const SpinConfig& s, int site,
                   const SpinConfig& t) {
  SpinConfig up = s;
  SpinConfig down = s;
  up[site] = 1;
  down[site] = -1;
  const double wu = std::exp(-beta * inst.energy(up) + gamma);
  const double wd = std::exp(-beta * inst.energy(down) - gamma);
  return t[site] == 1 ? wu / (wu + wd) : wd / (wu + wd);
}

}  // namespace

TEST(RapidMixing, Examples) {
  const auto zero = rapid_mixing_check(k4_antiferro(), 0.0);
  EXPECT_TRUE(zero.ok);
  EXPECT_EQ(zero.margin, 1.0);
  const auto hot = rapid_mixing_check(k4_antiferro(), 0.5);
  EXPECT_FALSE(hot.ok);
  EXPECT_NEAR(hot.margin, -0.5, 1e-8);
  for (std::uint64_t s = 0; s < 5; ++s) {
    EXPECT_TRUE(rapid_mixing_check(generate_regular(16, 3, -1, s), 1.0 / 6.0).ok);
  }
}

TEST(RapidMixing, SkCertificateAlongsideSpectral) {
  const auto sk = generate_sk(24, 3);
  const double norm = spectral_norm(sk);
  const auto cert = rapid_mixing_check(sk, 0.24);
  ASSERT_TRUE(cert.sk.has_value());
  EXPECT_TRUE(cert.sk->ok);
  EXPECT_NEAR(cert.sk->margin, 1 - 0.96, 1e-15);
  EXPECT_NEAR(cert.spectral.margin, 1 - 0.24 * norm, 1e-15);
  EXPECT_EQ(cert.margin, std::max(cert.sk->margin, cert.spectral.margin));
  EXPECT_EQ(cert.label, cert.sk->margin > cert.spectral.margin ? cert.sk->label : cert.spectral.label);
  const auto past = rapid_mixing_check(sk, 0.26);
  EXPECT_FALSE(past.sk->ok);
  EXPECT_EQ(past.ok, past.spectral.ok);
  EXPECT_FALSE(rapid_mixing_check(sk, 1.01 / norm).ok);
  EXPECT_FALSE(rapid_mixing_check(k4_antiferro(), 0.1).sk.has_value());
}

TEST(HeatBath, DetailedBalanceExact) {
  for (int n = 1; n <= 4; ++n) {
    const auto inst = random_instance(n, 40 + n);
    for (double beta : {0.0, 0.3, 1.7}) {
      for (double gamma : {0.0, 0.45}) {
        auto weight = [&](const SpinConfig& s) {
          double m = 0;
          for (auto v : s) m += v;
          return std::exp(-beta * inst.energy(s) + gamma * m);
        };
        for (std::uint64_t x = 0; x < (1u << n); ++x) {
          const SpinConfig s = config_from_bits(x, n);
          for (int k = 0; k < n; ++k) {
            SpinConfig t = s;
            t[k] = -t[k];
            const double h = inst.local_field(s, k);
            const double p_up = heat_bath_up_probability(beta, h, gamma);
            const double forward = t[k] == 1 ? p_up : heat_bath_up_probability(beta, -h, -gamma);
            EXPECT_NEAR(forward, site_kernel(inst, beta, gamma, s, k, t), 1e-12);
            const double ht = inst.local_field(t, k);
            const double pt_up = heat_bath_up_probability(beta, ht, gamma);
            const double backward = s[k] == 1 ? pt_up : heat_bath_up_probability(beta, -ht, -gamma);
            const double lhs = weight(s) * forward;
            const double rhs = weight(t) * backward;
            EXPECT_LE(std::abs(lhs - rhs), 1e-12 * std::max(lhs, rhs));
          }
        }
      }
    }
  }
}

TEST(HeatBath, SweepPreservesGibbsDistribution) {
  const int n = 4;
  const auto inst = random_instance(n, 77);
  const double beta = 0.8;
  const double gamma = -0.3;
  const int states = 1 << n;
  // Transition matrix of one sequential sweep.
  std::vector<double> pi(states);
  double z = 0;
  for (int x = 0; x < states; ++x) {
    const auto s = config_from_bits(x, n);
    double m = 0;
    for (auto v : s) m += v;
    pi[x] = std::exp(-beta * inst.energy(s) + gamma * m);
    z += pi[x];
  }
  for (auto& p : pi) p /= z;
  std::vector<double> dist = pi;
  for (int k = 0; k < n; ++k) {
    std::vector<double> next(states, 0.0);
    for (int x = 0; x < states; ++x) {
      const auto s = config_from_bits(x, n);
      for (int v : {1, -1}) {
        SpinConfig t = s;
        t[k] = static_cast<std::int8_t>(v);
        next[config_to_bits(t)] += dist[x] * site_kernel(inst, beta, gamma, s, k, t);
      }
    }
    dist = next;
  }
  for (int x = 0; x < states; ++x) EXPECT_NEAR(dist[x], pi[x], 1e-13);
}

TEST(Glauber, InfiniteTemperatureIsUniform) {
  const auto inst = k4_antiferro();
  const auto set = glauber_run({inst, 0.0, 0.0}, {.sweeps = 10000, .burn_in = std::nullopt, .thin = 1, .chains = 1, .threads = 1}, 3);
  const auto est = estimate_energy(set.energies);
  EXPECT_LE(std::abs(est.mean), 3 * est.standard_error);
  EXPECT_EQ(set.burn_in, 100);
  EXPECT_TRUE(set.certified);
}

TEST(Glauber, SingleSiteMagnetization) {
  const IsingInstance inst(1, {}, {1.0});
  const auto set = glauber_run({inst, 0.7, 0.0}, {.sweeps = 20000, .burn_in = 10, .thin = 1, .chains = 1, .threads = 1}, 5);
  std::vector<double> z;
  for (const auto& s : set.configs) z.push_back(s[0]);
  const auto est = estimate_energy(z);
  EXPECT_LE(std::abs(est.mean - std::tanh(0.7)), 3 * est.standard_error);
}

TEST(Glauber, BiasShiftsMagnetization) {
  const IsingInstance inst(1, {}, {0.0});
  const auto set = glauber_run({inst, 1.0, 0.4}, {.sweeps = 20000, .burn_in = 10, .thin = 1, .chains = 1, .threads = 1}, 6);
  std::vector<double> z;
  for (const auto& s : set.configs) z.push_back(s[0]);
  const auto est = estimate_energy(z);
  EXPECT_LE(std::abs(est.mean - std::tanh(0.4)), 3 * est.standard_error);
}

TEST(Glauber, RegularGraphMatchesEnumeration) {
  const auto inst = generate_regular(16, 3, -1, 12);
  const double beta = 1.0 / 6.0;
  const auto exact = enumerate({inst, beta, 0.0});
  const auto set = glauber_run({inst, beta, 0.0}, {.sweeps = 2500, .burn_in = std::nullopt, .thin = 1, .chains = 4, .threads = 1}, 99);
  ASSERT_EQ(set.energies.size(), 10000u);
  const auto est = estimate_energy(set, inst);
  EXPECT_LE(std::abs(est.mean - exact.mean_energy), 3 * est.standard_error);
}

TEST(Glauber, MarginalsMatchEnumerationOnSmallSystem) {
  const auto inst = random_instance(8, 13);
  const double beta = 0.5 / spectral_norm(inst);
  const double gamma = 0.2;
  // Exact single-site magnetizations from the weights.
  std::vector<double> exact(8, 0.0);
  double z = 0.0;
  for (std::uint64_t x = 0; x < 256; ++x) {
    const auto s = config_from_bits(x, 8);
    double m = 0;
    for (auto v : s) m += v;
    const double w = std::exp(-beta * inst.energy(s) + gamma * m);
    z += w;
    for (int k = 0; k < 8; ++k) exact[k] += w * s[k];
  }
  const auto set = glauber_run({inst, beta, gamma}, {.sweeps = 5000, .burn_in = std::nullopt, .thin = 1, .chains = 2, .threads = 1}, 17);
  for (int k = 0; k < 8; ++k) {
    std::vector<double> series;
    for (const auto& s : set.configs) series.push_back(s[k]);
    const auto est = estimate_energy(series);
    EXPECT_LE(std::abs(est.mean - exact[k] / z), 3 * est.standard_error + 1e-12) << "site " << k;
  }
}

TEST(Glauber, CachedEnergyTracksRecomputation) {
  const auto inst = generate_sk(20, 4);
  GlauberChain chain(inst, 0.2, 0.1, 8);
  for (int t = 0; t < 2000; ++t) {
    chain.sweep();
    ASSERT_NEAR(chain.energy(), inst.energy(chain.config()), 1e-9);
  }
  EXPECT_EQ(chain.sweep_count(), 2000);
}

TEST(Glauber, ReproducibleAndThreadIndependent) {
  const auto inst = generate_sk(12, 9);
  const SamplingSchedule base{.sweeps = 300, .burn_in = 20, .thin = 3, .chains = 3, .threads = 1};
  SamplingSchedule wide = base;
  wide.threads = 3;
  const auto a = glauber_run({inst, 0.2, 0.0}, base, 1);
  const auto b = glauber_run({inst, 0.2, 0.0}, base, 1);
  const auto c = glauber_run({inst, 0.2, 0.0}, wide, 1);
  EXPECT_EQ(a.configs, b.configs);
  EXPECT_EQ(a.energies, c.energies);
  EXPECT_EQ(a.configs.size(), 300u);
  const auto d = glauber_run({inst, 0.2, 0.0}, base, 2);
  EXPECT_NE(a.configs, d.configs);
}

TEST(Glauber, BurnInRequiredOutsideCertifiedRegime) {
  const auto inst = k4_antiferro();
  EXPECT_THROW(glauber_run({inst, 1.0, 0.0}, {}, 1), InputError);
  const auto set = glauber_run({inst, 1.0, 0.0}, {.sweeps = 10, .burn_in = 5, .thin = 1, .chains = 1, .threads = 1}, 1);
  EXPECT_FALSE(set.certified);
  EXPECT_EQ(set.burn_in, 5);
}

TEST(Estimate, Examples) {
  const std::vector<double> same(50, -3.5);
  const auto flat = estimate_energy(same);
  EXPECT_EQ(flat.mean, -3.5);
  EXPECT_EQ(flat.standard_error, 0.0);
  const std::vector<double> pair{4.0, 6.0};
  EXPECT_EQ(estimate_energy(pair).mean, 5.0);
  const std::vector<double> one{1.0};
  EXPECT_THROW(estimate_energy(one), InputError);
}

TEST(Estimate, UniformStreamOnK4ConvergesToZero) {
  const auto inst = k4_antiferro();
  double last = INFINITY;
  for (int sweeps : {1000, 100000}) {
    const auto set = glauber_run({inst, 0.0, 0.0}, {.sweeps = sweeps, .burn_in = 0, .thin = 1, .chains = 1, .threads = 1}, 21);
    const auto est = estimate_energy(set.energies);
    EXPECT_LT(est.standard_error, last);
    EXPECT_LE(std::abs(est.mean), 4 * est.standard_error);
    last = est.standard_error;
  }
}

TEST(Csv, SampleDump) {
  const auto inst = k4_antiferro();
  const auto set = glauber_run({inst, 0.1, 0.0}, {.sweeps = 3, .burn_in = 0, .thin = 1, .chains = 1, .threads = 1}, 2);
  std::ostringstream out;
  write_samples_csv(out, set);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "bitstring,energy,certified");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(line.substr(4, 1), ",");
    EXPECT_EQ(line.back(), '1');
  }
  EXPECT_EQ(rows, 3);
}
