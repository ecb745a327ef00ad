// Prints one PASS/FAIL line per acceptance criterion. Exit status is nonzero
// when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "noisebound/annealer.hpp"
#include "noisebound/baselines.hpp"
#include "noisebound/bounds.hpp"
#include "noisebound/instances.hpp"
#include "noisebound/oracle/suites.hpp"
#include "noisebound/partition.hpp"
#include "noisebound/sampler.hpp"
#include "noisebound/workflows.hpp"

using namespace noisebound;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) pass = false;
    detail << (ok ? "" : "[x] ") << what << "; ";
  }
};

std::string fmt(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

bool within(double v, double lo, double hi) { return v >= lo && v <= hi; }

void depth_ceiling(Outcome& o) {
  const double eps = 0.1;
  DiscreteNoise noise = superconducting_noise();
  const auto mixed = dmax_ising(noise, eps, 0.0).approximate.value_or(INFINITY);
  o.check(within(mixed, 290, 300), "(f1,f2)=(0.5,0.5): D=" + fmt(mixed) + " in [290,300]");
  noise.f1 = 1.0;
  noise.f2 = 0.0;
  const auto single = dmax_ising(noise, eps, 0.0).approximate.value_or(INFINITY);
  o.check(within(single, 715, 725), "(f1,f2)=(1,0): D=" + fmt(single) + " in [715,725]");
}

void suite(Outcome& o, const std::string& name, oracle::SuiteOptions options) {
  const auto r = oracle::run_suite(name, options);
  o.check(r.passed, name + ": " + std::to_string(r.cases.size()) + " cases, min margin " + fmt(r.min_margin) +
                        " >= -" + fmt(r.tolerance));
}

void lemma1(Outcome& o) { suite(o, "lemma1", {.n_min = 2, .n_max = 6, .cases = 100, .seed = 1}); }

void mirror(Outcome& o) { suite(o, "mirror", {.n_min = 4, .n_max = 4, .cases = 50, .seed = 2, .eps = 0.1}); }

void variational(Outcome& o) { suite(o, "variational", {.n_min = 8, .n_max = 8, .cases = 50, .seed = 3}); }

void partition_identities(Outcome& o) {
  const auto sk20 = generate_sk(20, 5);
  const auto at_zero = enumerate({sk20, 0.0, 0.0});
  const double err0 = std::abs(at_zero.log_z - 20 * kLn2);
  o.check(err0 <= 1e-12, "logZ(0) error " + fmt(err0, 3));

  const IsingInstance free_field(20, {}, std::vector<double>(20, -1.0));
  double worst = 0.0;
  for (double beta : {0.1, 0.5, 1.0, 2.0}) {
    const double want = 20 * log_two_cosh(beta);
    worst = std::max(worst, std::abs(enumerate({free_field, beta, 0.0}).log_z - want));
  }
  o.check(worst <= 1e-12, "free spins logZ error " + fmt(worst, 3));

  const auto sk16 = generate_sk(16, 6);
  double rel = 0.0;
  for (double beta : {0.2, 0.5, 1.0}) {
    const double h = 1e-4;
    const double fd = (enumerate({sk16, beta + h, 0.0}).log_z - enumerate({sk16, beta - h, 0.0}).log_z) / (2 * h);
    const double mean = enumerate({sk16, beta, 0.0}).mean_energy;
    rel = std::max(rel, std::abs(fd + mean) / std::abs(mean));
  }
  o.check(rel <= 1e-6, "dlogZ/dbeta vs -<H> relative " + fmt(rel, 3));
}

void sampler(Outcome& o) {
  suite(o, "detailed-balance", {.n_min = 1, .n_max = 4, .cases = 50, .seed = 4});
  const auto inst = generate_regular(16, 3, -1, 7);
  const double beta = 1.0 / 6.0;
  const double exact = enumerate({inst, beta, 0.0}).mean_energy;
  const auto samples = glauber_run({inst, beta, 0.0}, {.sweeps = 10000, .burn_in = std::nullopt, .thin = 1, .chains = 1}, 8);
  const auto est = estimate_energy(samples, inst);
  const double z = std::abs(est.mean - exact) / est.standard_error;
  o.check(z <= 3.0, "3-regular n=16: mean " + fmt(est.mean) + " vs exact " + fmt(exact) + ", " + fmt(z, 3) + " SE");
}

void annealer(Outcome& o) {
  double worst = 0.0;
  for (const ContinuousNoise noise : {ContinuousNoise{0.1, 0.0, 0.2}, ContinuousNoise{1e-3, 0.5, 2e-2},
                                      ContinuousNoise{0.5, 0.1, 0.01}}) {
    for (double T : {0.5, 5.0, 50.0, 500.0}) {
      Schedule schedule{.total_time = T, .fields = std::vector<double>(3, 1.0)};
      const double closed = linear_path_bound(noise, 1.0, T, 3).bits;
      const double quad = schedule_bound(schedule, noise, T / 1e4).bits;
      worst = std::max(worst, std::abs(quad - closed) / closed);
    }
  }
  o.check(worst <= 1e-6, "closed form vs quadrature relative " + fmt(worst, 3));
  suite(o, "lindblad", {.n_min = 1, .n_max = 3, .cases = 20, .seed = 5});
  for (double ratio : {1e-4, 1e-2}) {
    const auto rt = classical_realm_time(annealer_figure_noise(ratio), annealer_figure_inputs(6, 0.1));
    const bool ok = rt.kind == RealmTime::Kind::finite && within(rt.time, 200.0 / 3, 600.0);
    o.check(ok, "r1/r3=" + fmt(ratio) + ": T*=" + fmt(rt.time) + " us in [66.7,600]");
  }
}

void sk_workflow(Outcome& o) {
  for (std::uint64_t seed : {11, 12, 13}) {
    const auto inst = generate_sk(24, seed);
    const auto r = sk_crossing(inst, {}, seed);
    const int mean_depth = r.mean_crossing.depth.value_or(-1);
    const int best_depth = r.best_crossing.depth.value_or(-1);
    o.check(r.mean_crossing.depth && mean_depth <= 250,
            "seed " + std::to_string(seed) + ": E_c=<E>=" + fmt(r.sampled_mean) + " D_c=" + std::to_string(mean_depth));
    std::printf("  info seed %llu: ground %s, best sample %s gives D_c=%d, certified %d\n",
                static_cast<unsigned long long>(seed), fmt(r.ground_energy).c_str(), fmt(r.sampled_best).c_str(),
                best_depth, static_cast<int>(r.certified));
  }
}

void maxcut(Outcome& o) {
  const auto inst = generate_regular(20, 3, -1, 2024);
  const auto fig = maxcut_figure(inst, {}, 2024);
  o.check(fig.monotone, "bound monotone in entropy density");
  o.check(fig.sa_crossing < fig.sdp_crossing,
          "SA crossing " + fmt(fig.sa_crossing, 4) + " < SDP crossing " + fmt(fig.sdp_crossing, 4));
  o.check(within(fig.sdp_crossing, 0.3, 0.5), "SDP crossing in [0.3,0.5]");
}

void baselines(Outcome& o) {
  const IsingInstance k3(3, {{0, 1, -1}, {0, 2, -1}, {1, 2, -1}}, {0, 0, 0});
  const double k3_value = burer_monteiro_round(k3, {}, 1).relaxation_value;
  o.check(within(k3_value, 2.249, 2.251), "K3 relaxation " + fmt(k3_value, 8));

  bool sandwich = true;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto r = burer_monteiro_round(generate_regular(12 + 2 * static_cast<int>(seed % 5), 3, -1, seed), {}, seed);
    sandwich = sandwich && r.best_cut <= r.relaxation_value + 1e-9;
  }
  o.check(sandwich, "rounded cut <= relaxation on 50 instances");

  int hits = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto inst = generate_sk(10, 1000 + seed);
    const double ground = enumerate({inst, 0.0, 0.0}).ground_energy;
    const auto sa = simulated_annealing(inst, {.beta_start = 0.1, .beta_end = 5.0, .sweeps = 1000}, 4, seed);
    if (sa.result.best_energy <= ground + 1e-9) ++hits;
  }
  o.check(hits >= 95, "SA ground hits " + std::to_string(hits) + "/100");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"depth ceiling", depth_ceiling},
      {"contraction under depolarizing noise", lemma1},
      {"mirror descent", mirror},
      {"variational bound validity", variational},
      {"partition identities", partition_identities},
      {"sampler correctness", sampler},
      {"annealer bound", annealer},
      {"SK workflow", sk_workflow},
      {"MAXCUT figure", maxcut},
      {"baseline sanity", baselines},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("%s %zu %s (%.1f s): %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), seconds,
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
