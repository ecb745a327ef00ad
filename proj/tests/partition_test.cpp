#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "noisebound/errors.hpp"
#include "noisebound/partition.hpp"
#include "noisebound/rng.hpp"

using namespace noisebound;

namespace {

IsingInstance k4_antiferro() {
  return IsingInstance(4, {{0, 1, -1}, {0, 2, -1}, {0, 3, -1}, {1, 2, -1}, {1, 3, -1}, {2, 3, -1}}, {0, 0, 0, 0});
}

IsingInstance random_instance(int n, std::uint64_t seed, double density, bool fields) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.uniform() < density) edges.push_back({i, j, rng.normal()});
  std::vector<double> b(n, 0.0);
  if (fields)
    for (auto& x : b) x = 0.5 * rng.normal();
  return IsingInstance(n, edges, b);
}

// Two-pass brute force in long double, written without any library helper.
struct Brute {
  long double log_z = 0;
  long double mean = 0;
  double ground = 0;
  double norm = 0;
};

Brute brute(const IsingInstance& inst, double beta, double gamma) {
  const int n = inst.size();
  const std::uint64_t states = std::uint64_t{1} << n;
  std::vector<long double> expo(states);
  std::vector<double> energy(states);
  long double top = -INFINITY;
  Brute out;
  out.ground = INFINITY;
  for (std::uint64_t x = 0; x < states; ++x) {
    double e = 0.0;
    int m = 0;
    for (const auto& edge : inst.edges()) {
      const int si = ((x >> edge.i) & 1) ? -1 : 1;
      const int sj = ((x >> edge.j) & 1) ? -1 : 1;
      e -= edge.coupling * si * sj;
    }
    for (int k = 0; k < n; ++k) {
      const int s = ((x >> k) & 1) ? -1 : 1;
      e -= inst.fields()[k] * s;
      m += s;
    }
    energy[x] = e;
    expo[x] = -static_cast<long double>(beta) * e + static_cast<long double>(gamma) * m;
    top = std::max(top, expo[x]);
    out.ground = std::min(out.ground, e);
    out.norm = std::max(out.norm, std::abs(e));
  }
  long double z = 0;
  long double ez = 0;
  for (std::uint64_t x = 0; x < states; ++x) {
    const long double w = std::exp(expo[x] - top);
    z += w;
    ez += w * energy[x];
  }
  out.log_z = top + std::log(z);
  out.mean = ez / z;
  return out;
}

// Bound objective from the brute-force partition function.
double brute_objective(const IsingInstance& inst, double beta, double gamma, double budget_bits) {
  const long double log_norm = inst.size() * std::log(2.0L * std::cosh(static_cast<long double>(gamma)));
  const long double lz = brute(inst, beta, gamma).log_z - log_norm;
  return static_cast<double>((-lz - budget_bits * std::log(2.0L)) / beta);
}

}  // namespace

TEST(Enumerate, FreeSpinsClosedForm) {
  const IsingInstance inst(3, {}, {1, 1, 1});
  const auto s = enumerate({inst, 1.0, 0.0});
  EXPECT_NEAR(s.log_z, 3 * std::log(2 * std::cosh(1.0)), 1e-12);
  EXPECT_NEAR(s.log_z, 3.38078, 1e-5);
  EXPECT_EQ(s.ground_energy, -3.0);
  EXPECT_EQ(s.hamiltonian_norm, 3.0);
  EXPECT_EQ(s.ground_bits, 0u);
}

TEST(Enumerate, K4AtInfiniteTemperature) {
  const auto s = enumerate({k4_antiferro(), 0.0, 0.0});
  EXPECT_NEAR(s.log_z, 4 * std::log(2.0), 1e-14);
  EXPECT_NEAR(s.mean_energy, 0.0, 1e-14);
  EXPECT_EQ(s.ground_energy, -2.0);
  EXPECT_EQ(s.hamiltonian_norm, 6.0);
}

TEST(Enumerate, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const int n = 6 + static_cast<int>(seed);
    const auto inst = random_instance(n, seed, 0.5, seed % 2 == 0);
    for (double beta : {0.0, 0.3, 2.0, 15.0}) {
      for (double gamma : {0.0, -0.4, 1.3}) {
        const auto s = enumerate({inst, beta, gamma});
        const auto b = brute(inst, beta, gamma);
        EXPECT_NEAR(s.log_z, static_cast<double>(b.log_z), 1e-11 * std::max(1.0L, std::abs(b.log_z)));
        EXPECT_NEAR(s.mean_energy, static_cast<double>(b.mean), 1e-10 * std::max(1.0, b.norm));
        EXPECT_NEAR(s.ground_energy, b.ground, 1e-12 * b.norm);
        EXPECT_NEAR(s.hamiltonian_norm, b.norm, 1e-12 * b.norm);
      }
    }
  }
}

TEST(Enumerate, SerialReferenceAgrees) {
  const auto inst = random_instance(14, 3, 0.3, true);
  for (double beta : {0.0, 0.7, 4.0}) {
    const auto fast = enumerate({inst, beta, 0.2});
    const auto ref = reference::enumerate_serial({inst, beta, 0.2});
    EXPECT_NEAR(fast.log_z, ref.log_z, 1e-11 * std::abs(ref.log_z));
    EXPECT_NEAR(fast.mean_energy, ref.mean_energy, 1e-10);
    EXPECT_NEAR(fast.ground_energy, ref.ground_energy, 1e-12 * ref.hamiltonian_norm);
    EXPECT_EQ(fast.ground_bits, ref.ground_bits);
  }
}

TEST(Enumerate, BitStableAcrossThreadsAndBlocks) {
  // 22 spins span four enumeration blocks.
  const auto inst = random_instance(22, 8, 0.15, true);
  const auto one = enumerate({inst, 0.9, 0.1}, {.max_qubits = 30, .threads = 1});
  for (int threads : {2, 3, 4}) {
    const auto many = enumerate({inst, 0.9, 0.1}, {.max_qubits = 30, .threads = threads});
    EXPECT_EQ(one.log_z, many.log_z);
    EXPECT_EQ(one.mean_energy, many.mean_energy);
    EXPECT_EQ(one.ground_energy, many.ground_energy);
    EXPECT_EQ(one.ground_bits, many.ground_bits);
  }
  const EnergySpectrum a(inst, {.max_qubits = 26, .threads = 1});
  const EnergySpectrum b(inst, {.max_qubits = 26, .threads = 3});
  EXPECT_EQ(a.moments(0.9, 0.1).log_z, b.moments(0.9, 0.1).log_z);
  EXPECT_NEAR(a.moments(0.9, 0.1).log_z, one.log_z, 1e-12 * std::abs(one.log_z));
}

TEST(Enumerate, GroundMatchesDirectMinimum) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = random_instance(12, 100 + seed, 0.4, seed % 3 == 0);
    double lo = INFINITY;
    for (std::uint64_t x = 0; x < 4096; ++x) lo = std::min(lo, inst.energy(config_from_bits(x, 12)));
    EXPECT_NEAR(enumerate({inst, 1.0, 0.0}).ground_energy, lo, 1e-12 * std::abs(lo));
  }
}

TEST(Enumerate, CapIsEnforced) {
  const auto inst = random_instance(12, 1, 0.3, false);
  try {
    enumerate({inst, 1.0, 0.0}, {.max_qubits = 10, .threads = 1});
    FAIL() << "cap not enforced";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("10"), std::string::npos);
  }
  const IsingInstance big(27, {}, std::vector<double>(27, 0.0));
  EXPECT_THROW(EnergySpectrum{big}, InputError);
}

TEST(Identities, InfiniteTemperature) {
  const auto inst = random_instance(20, 4, 0.2, true);
  EXPECT_NEAR(enumerate({inst, 0.0, 0.0}).log_z, 20 * std::log(2.0), 1e-12);
}

TEST(Identities, FreeSpinsAtManyTemperatures) {
  const IsingInstance inst(10, {}, std::vector<double>(10, 1.0));
  for (double beta : {0.01, 0.5, 3.0, 40.0}) {
    EXPECT_NEAR(enumerate({inst, beta, 0.0}).log_z, 10 * log_two_cosh(beta), 1e-12 * 10 * log_two_cosh(beta));
  }
}

TEST(Identities, MeanEnergyIsLogZDerivative) {
  const auto inst = random_instance(16, 6, 0.2, true);
  const EnergySpectrum spectrum(inst);
  const double h = 1e-5;
  for (double beta : {0.1, 0.5, 1.5}) {
    const double fd = -(spectrum.moments(beta + h).log_z - spectrum.moments(beta - h).log_z) / (2 * h);
    const double mean = spectrum.moments(beta).mean_energy;
    EXPECT_NEAR(fd, mean, 1e-6 * std::abs(mean));
  }
}

TEST(Spectrum, SymmetricHalfSumMatchesFullSum) {
  const auto inst = random_instance(13, 12, 0.4, false);
  const EnergySpectrum spectrum(inst);
  for (double beta : {0.0, 0.4, 3.0}) {
    const auto m = spectrum.moments(beta);
    const auto b = brute(inst, beta, 0.0);
    EXPECT_NEAR(m.log_z, static_cast<double>(b.log_z), 1e-11 * std::abs(static_cast<double>(b.log_z)));
    EXPECT_NEAR(m.mean_energy, static_cast<double>(b.mean), 1e-10);
  }
}

TEST(LogTwoCosh, StableForLargeArguments) {
  EXPECT_NEAR(log_two_cosh(0.0), std::log(2.0), 1e-16);
  EXPECT_NEAR(log_two_cosh(0.3), std::log(2 * std::cosh(0.3)), 1e-15);
  EXPECT_DOUBLE_EQ(log_two_cosh(1000.0), 1000.0);
  EXPECT_DOUBLE_EQ(log_two_cosh(-1000.0), 1000.0);
}

TEST(Variational, ZeroBudgetGivesMixedEnergy) {
  const auto inst = k4_antiferro();
  const auto vb = variational_lower_bound(inst, {0.0, ""});
  EXPECT_NEAR(vb.bound, 0.0, 1e-9);
}

TEST(Variational, FullBudgetApproachesGround) {
  const auto inst = k4_antiferro();
  const auto vb = variational_lower_bound(inst, {4.0, ""});
  // At the largest grid beta the bound is E0 - ln(degeneracy)/beta.
  EXPECT_LE(vb.bound, -2.0);
  EXPECT_NEAR(vb.bound, -2.0, std::log(6.0) / 100.0 + 1e-9);
  EXPECT_THROW(variational_lower_bound(inst, {4.01, ""}), InputError);
}

TEST(Variational, K4MatchesDenseGrid) {
  const auto inst = k4_antiferro();
  const auto vb = variational_lower_bound(inst, {1.6, ""});
  // The ground manifold fits inside the budget, so the optimum sits at beta_max.
  EXPECT_LE(vb.bound, -2.0);
  EXPECT_NEAR(vb.bound, -2.0 + (2.4 * std::log(2.0) - std::log(6.0)) / 100.0, 1e-9);
  double dense = -INFINITY;
  for (int k = 0; k <= 200000; ++k) {
    const double beta = std::exp(std::log(1e-3) + (std::log(1e2) - std::log(1e-3)) * k / 200000.0);
    dense = std::max(dense, brute_objective(inst, beta, 0.0, 1.6));
  }
  EXPECT_NEAR(vb.bound, dense, 1e-8);
  EXPECT_NEAR(brute_objective(inst, vb.beta_star, 0.0, 1.6), vb.bound, 1e-12);
}

TEST(Variational, BiasedObjectiveMatchesBruteForce) {
  const auto inst = random_instance(9, 21, 0.5, true);
  const EnergySpectrum spectrum(inst);
  for (double gamma : {0.0, 0.2, -0.7}) {
    const FreeEnergyBound bound(spectrum, gamma);
    for (double beta : {0.01, 0.4, 3.0}) {
      EXPECT_NEAR(bound.objective(beta, 2.0 * kLn2), brute_objective(inst, beta, gamma, 2.0), 1e-9);
    }
    // tr(sigma_gamma H) by direct product-state expectation.
    const double m = std::tanh(gamma);
    double tr = 0.0;
    for (const auto& e : inst.edges()) tr -= e.coupling * m * m;
    for (double b : inst.fields()) tr -= b * m;
    EXPECT_NEAR(bound.fixed_point_energy(), tr, 1e-10);
    EXPECT_NEAR(bound.evaluate(0.0).bound, tr, 1e-9);
  }
}

TEST(Variational, MonotoneInBudget) {
  const auto inst = random_instance(10, 5, 0.5, true);
  const EnergySpectrum spectrum(inst);
  for (double gamma : {0.0, 0.3}) {
    const FreeEnergyBound bound(spectrum, gamma);
    double last = INFINITY;
    for (int k = 0; k <= 40; ++k) {
      const double bits = bound.max_budget_bits() * k / 40.0;
      const double value = bound.evaluate(bits).bound;
      EXPECT_LE(value, last + 1e-12);
      last = value;
    }
  }
}

TEST(Crossing, RejectsAndNever) {
  const auto inst = random_instance(10, 2, 0.5, false);
  const EnergySpectrum spectrum(inst);
  const FreeEnergyBound bound(spectrum, 0.0);
  const DiscreteNoise noise{.p1 = 1.6e-3, .p2 = 6.2e-3, .pm = 0, .f1 = 0.5, .f2 = 0.5};
  EXPECT_THROW(crossing_depth(bound, noise, spectrum.ground_energy() - 0.1), InputError);
  EXPECT_FALSE(crossing_depth(bound, noise, bound.fixed_point_energy() + 1e-3).depth.has_value());
  const DiscreteNoise silent{.p1 = 0, .p2 = 0, .pm = 0, .f1 = 0.5, .f2 = 0.5};
  EXPECT_FALSE(crossing_depth(bound, silent, 0.5 * spectrum.ground_energy()).depth.has_value());
}

TEST(Crossing, IsSmallestDepthReachingTheEnergy) {
  const auto inst = random_instance(12, 9, 0.5, false);
  const EnergySpectrum spectrum(inst);
  const FreeEnergyBound bound(spectrum, 0.0);
  const DiscreteNoise noise{.p1 = 1.6e-3, .p2 = 6.2e-3, .pm = 0, .f1 = 0.5, .f2 = 0.5};
  for (double frac : {0.9, 0.6, 0.3, 0.05}) {
    const double ec = frac * spectrum.ground_energy();
    const auto cd = crossing_depth(bound, noise, ec);
    ASSERT_TRUE(cd.depth.has_value());
    const int d = *cd.depth;
    auto at = [&](int depth) { return bound.evaluate(entropy_budget(noise, depth, 12, false).bits).bound; };
    EXPECT_GE(at(d), ec);
    if (d > 0) {
      EXPECT_LT(at(d - 1), ec);
    }
    EXPECT_EQ(cd.bound, at(d));
  }
  EXPECT_TRUE(crossing_depth(bound, noise, spectrum.ground_energy()).depth.has_value());
}

TEST(Csv, PartitionCurve) {
  const auto inst = k4_antiferro();
  const EnergySpectrum spectrum(inst);
  std::ostringstream out;
  const std::vector<double> betas{0.0, 0.5};
  write_partition_csv(out, spectrum, 0.0, betas);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "beta,logZ_nats,mean_energy");
  std::getline(in, line);
  EXPECT_EQ(line.substr(0, 2), "0,");
  std::getline(in, line);
  EXPECT_EQ(line.substr(0, 4), "0.5,");
}
