#include "noisebound/oracle/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "json.hpp"

#include "noisebound/annealer.hpp"
#include "noisebound/errors.hpp"
#include "noisebound/oracle/circuit.hpp"
#include "noisebound/oracle/contraction.hpp"
#include "noisebound/oracle/lindblad.hpp"
#include "noisebound/oracle/mirror_descent.hpp"
#include "noisebound/partition.hpp"
#include "noisebound/rng.hpp"
#include "noisebound/sampler.hpp"

namespace noisebound::oracle {

namespace {

constexpr double kNoiseLevels[] = {0.01, 0.05, 0.2};

int draw_n(Rng& rng, int lo, int hi) { return lo + static_cast<int>(rng.below(hi - lo + 1)); }

double draw_p(Rng& rng) { return kNoiseLevels[rng.below(3)]; }

Matrix random_hermitian(int n, Rng& rng) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix g(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) g(r, c) = std::complex<double>(rng.normal(), rng.normal());
  }
  return 0.5 * (g + g.adjoint());
}

IsingInstance random_ising(int n, Rng& rng) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j, rng.normal() / std::sqrt(static_cast<double>(n))});
  }
  std::vector<double> fields(n);
  for (double& b : fields) b = 0.5 * rng.normal();
  return IsingInstance(n, std::move(edges), std::move(fields));
}

CaseResult lemma1_case(std::uint64_t seed, const SuiteOptions& o) {
  Rng rng(seed);
  CaseResult c{seed, draw_n(rng, o.n_min, o.n_max), 1 + static_cast<int>(rng.below(20)), draw_p(rng)};
  const auto circuit = random_circuit(c.n, c.depth, rng.next_u64());
  const auto out = run_noisy_circuit(circuit, c.p, DensityMatrix::basis_state(c.n, 0));
  c.measured = relative_entropy_bits(out, DensityMatrix::maximally_mixed(c.n));
  c.bound = std::pow(1.0 - c.p, 2.0 * c.depth) * c.n;
  c.margin = c.bound - c.measured;
  return c;
}

CaseResult mirror_case(std::uint64_t seed, const SuiteOptions& o) {
  Rng rng(seed);
  CaseResult c{seed, o.n_max, 0, 0.0};
  const Matrix h = random_hermitian(c.n, rng);
  const Matrix tilted = h + 0.5 * random_hermitian(c.n, rng);
  const double beta = (2.0 + 4.0 * rng.uniform()) / operator_norm(tilted);
  Matrix rho = hermitian_exp(-beta * tilted);
  rho /= rho.trace().real();
  const auto sigma = DensityMatrix::maximally_mixed(c.n);
  const auto trace = mirror_descent_trace(rho, h, o.eps, sigma.matrix());
  c.depth = static_cast<int>(trace.steps.size()) - 1;
  c.bound = o.eps * o.eps / 4.0;
  c.measured = c.depth == 0 ? c.bound : trace.min_decrease;
  c.margin = trace.converged ? c.measured - c.bound : -1.0;
  return c;
}

CaseResult variational_case(std::uint64_t seed, const SuiteOptions& o) {
  Rng rng(seed);
  CaseResult c{seed, o.n_max, 1 + static_cast<int>(rng.below(20)), draw_p(rng)};
  const IsingInstance instance = random_ising(c.n, rng);
  const auto circuit = random_circuit(c.n, c.depth, rng.next_u64());
  const auto out = run_noisy_circuit(circuit, c.p, DensityMatrix::basis_state(c.n, 0));
  const double budget = std::clamp(relative_entropy_bits(out, DensityMatrix::maximally_mixed(c.n)), 0.0,
                                   static_cast<double>(c.n));
  const EnergySpectrum spectrum(instance);
  const FreeEnergyBound bound(spectrum, 0.0);
  c.bound = bound.evaluate(budget).bound;
  c.measured = out.expectation(ising_matrix(instance));
  c.margin = c.measured - c.bound;
  return c;
}

CaseResult contraction_case(std::uint64_t seed, const SuiteOptions& o) {
  Rng rng(seed);
  CaseResult c{seed, draw_n(rng, o.n_min, o.n_max), 1 + static_cast<int>(rng.below(20)), draw_p(rng)};
  const auto circuit = random_circuit(c.n, c.depth, rng.next_u64());
  const double up = std::exp(o.gamma) / (2.0 * std::cosh(o.gamma));
  Matrix2 single;
  single << up, 0, 0, 1.0 - up;
  const auto sigma = DensityMatrix::product(std::vector<Matrix2>(c.n, single));
  const auto report = verify_contraction(DensityMatrix::basis_state(c.n, 0), circuit, c.p, sigma);
  const auto worst = std::min_element(report.layers.begin(), report.layers.end(), [](const auto& a, const auto& b) {
    return a.bound - a.measured < b.bound - b.measured;
  });
  c.bound = worst->bound;
  c.measured = worst->measured;
  c.margin = report.min_margin;
  return c;
}

CaseResult lindblad_case(std::uint64_t seed, const SuiteOptions& o) {
  Rng rng(seed);
  CaseResult c{seed, draw_n(rng, std::max(1, o.n_min), std::min(3, o.n_max)), 0, 0.0};
  ContinuousNoise noise{0.05 + 0.45 * rng.uniform(), 0.5 * rng.uniform(), 0.05 + 0.45 * rng.uniform()};
  Schedule schedule;
  schedule.total_time = 0.5 + 4.5 * rng.uniform();
  schedule.fields.resize(c.n);
  for (double& g : schedule.fields) g = 0.5 + rng.uniform();
  const IsingInstance instance = random_ising(c.n, rng);

  Matrix2 plus;
  plus << 0.5, 0.5, 0.5, 0.5;
  LindbladOptions options;
  options.dt = std::min(1e-2, schedule.total_time / 200.0);
  const auto trajectory = lindblad_evolve(schedule, instance, noise,
                                          DensityMatrix::product(std::vector<Matrix2>(c.n, plus)), options);
  c.depth = static_cast<int>(std::ceil(schedule.total_time / options.dt));
  c.p = noise.r1 + 2.0 * noise.r3;
  c.measured = relative_entropy_bits(trajectory.states.back(), fixed_point_state(noise, c.n));
  c.bound = schedule_bound(schedule, noise, schedule.total_time / 1e4).bits;
  c.margin = c.bound - c.measured;
  return c;
}

CaseResult detailed_balance_case(std::uint64_t seed, const SuiteOptions& o) {
  Rng rng(seed);
  CaseResult c{seed, draw_n(rng, 1, std::min(4, std::max(1, o.n_max))), 0, 0.0};
  const IsingInstance instance = random_ising(c.n, rng);
  const double beta = 2.0 * rng.uniform();
  const double gamma = 2.0 * rng.uniform() - 1.0;
  const std::uint64_t states = std::uint64_t{1} << c.n;
  double worst = 0.0;
  for (std::uint64_t x = 0; x < states; ++x) {
    const SpinConfig s = config_from_bits(x, c.n);
    int m = 0;
    for (auto v : s) m += v;
    const double log_pi = -beta * instance.energy(s) + gamma * m;
    for (int k = 0; k < c.n; ++k) {
      SpinConfig t = s;
      t[k] = static_cast<std::int8_t>(-t[k]);
      const double log_pi_t = log_pi - beta * instance.flip_delta(s, k) - 2.0 * gamma * s[k];
      const double h_s = instance.local_field(s, k);
      const double h_t = instance.local_field(t, k);
      const double forward = heat_bath_up_probability(beta, t[k] * h_s, t[k] * gamma);
      const double backward = heat_bath_up_probability(beta, s[k] * h_t, s[k] * gamma);
      const double lhs = std::exp(log_pi) * forward;
      const double rhs = std::exp(log_pi_t) * backward;
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(lhs, rhs));
    }
  }
  c.bound = 1e-12;
  c.measured = worst;
  c.margin = c.bound - c.measured;
  return c;
}

struct SuiteDef {
  std::string name;
  std::function<CaseResult(std::uint64_t, const SuiteOptions&)> run;
  double tolerance;
};

const std::vector<SuiteDef>& suites() {
  static const std::vector<SuiteDef> defs = {
      {"lemma1", lemma1_case, 1e-9},
      {"mirror", mirror_case, 0.0},
      {"variational", variational_case, 1e-9},
      {"contraction", contraction_case, 1e-9},
      {"lindblad", lindblad_case, 1e-6},
      {"detailed-balance", detailed_balance_case, 0.0},
  };
  return defs;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& d : suites()) out.push_back(d.name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  require(options.cases >= 1 && options.threads >= 1, "cases and threads must be positive");
  require(options.n_min >= 1 && options.n_max >= options.n_min && options.n_max <= 8,
          "suite sizes must satisfy 1 <= n_min <= n_max <= 8");
  const auto it = std::find_if(suites().begin(), suites().end(), [&](const auto& d) { return d.name == name; });
  if (it == suites().end()) throw InputError("unknown verification suite '" + name + "'");

  SuiteReport report;
  report.suite = name;
  report.tolerance = it->tolerance;
  report.cases.resize(options.cases);
#pragma omp parallel for schedule(dynamic) num_threads(options.threads)
  for (int k = 0; k < options.cases; ++k) report.cases[k] = it->run(derive_seed(options.seed, k), options);
  report.min_margin = std::numeric_limits<double>::infinity();
  for (const auto& c : report.cases) report.min_margin = std::min(report.min_margin, c.margin);
  report.passed = report.min_margin >= -report.tolerance;
  return report;
}

std::string to_json(const SuiteReport& report) {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : report.cases) {
    cases.push_back({{"seed", c.seed}, {"n", c.n}, {"D", c.depth}, {"p", c.p},
                     {"bound", c.bound}, {"measured", c.measured}, {"margin", c.margin}});
  }
  nlohmann::json doc = {{"suite", report.suite},
                        {"cases", std::move(cases)},
                        {"min_margin", report.min_margin},
                        {"tolerance", report.tolerance},
                        {"passed", report.passed}};
  return doc.dump(2) + "\n";
}

}  // namespace noisebound::oracle
