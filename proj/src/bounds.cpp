#include "noisebound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "noisebound/errors.hpp"

namespace noisebound {

namespace {

bool is_probability(double p) { return p >= 0.0 && p < 1.0; }

std::optional<double> clamped_ratio(double numerator, double denominator) {
  if (denominator <= 0.0) return std::nullopt;
  return std::max(0.0, numerator / denominator);
}

}  // namespace

void DiscreteNoise::validate() const {
  require(is_probability(p1) && is_probability(p2) && is_probability(pm),
          "noise probabilities must lie in [0, 1)");
  require(f1 >= 0.0 && f2 >= 0.0, "layer fractions must be non-negative");
  require(std::abs(f1 + f2 - 1.0) <= 1e-12, "layer fractions must sum to 1");
}

double DiscreteNoise::effective_log_rate() const {
  return -(f1 * std::log1p(-p1) + f2 * std::log1p(-p2));
}

void LatticeSpec::validate() const {
  require(dimension >= 1 && locality >= 1 && strength > 0.0,
          "lattice needs d >= 1, kappa >= 1 and J > 0");
}

EntropyBudget entropy_budget(const DiscreteNoise& noise, double depth, int n,
                             bool include_measurement) {
  noise.validate();
  require(depth >= 0.0, "depth must be non-negative");
  require(n >= 0, "qubit count must be non-negative");
  // exp of the log-sum keeps the product accurate for large depths.
  double log_factor = 2.0 * depth * (noise.f1 * std::log1p(-noise.p1) + noise.f2 * std::log1p(-noise.p2));
  if (include_measurement) log_factor += 2.0 * std::log1p(-noise.pm);
  return {n * std::exp(log_factor), include_measurement ? "depolarizing-contraction+measurement"
                                                        : "depolarizing-contraction"};
}

double ising_log_term(double coupling_norm, double hamiltonian_norm, int n) {
  require(coupling_norm > 0.0 && hamiltonian_norm > 0.0 && n > 0,
          "log term needs positive ||A||, ||H|| and n");
  return std::log(coupling_norm * n / hamiltonian_norm);
}

DepthCeiling dmax_ising(const DiscreteNoise& noise, double eps, double log_term) {
  noise.validate();
  require(eps > 0.0 && eps <= 1.0, "eps must lie in (0, 1]");
  DepthCeiling out;
  const double log_inv_eps = -std::log(eps);
  out.approximate = clamped_ratio(log_inv_eps + log_term - noise.pm, 2.0 * noise.effective_rate());
  out.exact = clamped_ratio(log_inv_eps + log_term + std::log(kLn2) + 2.0 * std::log1p(-noise.pm),
                            2.0 * noise.effective_log_rate());
  return out;
}

DepthCeiling dmax_ising(const IsingInstance& instance, const DiscreteNoise& noise, double eps,
                        double hamiltonian_norm) {
  return dmax_ising(noise, eps,
                    ising_log_term(spectral_norm(instance), hamiltonian_norm, instance.size()));
}

LatticeDepth dmax_lattice(const LatticeSpec& spec, double eps, double p) {
  spec.validate();
  require(eps > 0.0, "eps must be positive");
  require(p >= 0.0 && p < 1.0, "p must lie in [0, 1)");
  const double dk = std::pow(static_cast<double>(spec.dimension), spec.locality);
  LatticeDepth out;
  out.depth = clamped_ratio(std::log(20.0 * std::numbers::e / (dk * eps)), 2.0 * p);
  out.beta_critical = 1.0 / (5.0 * std::numbers::e * spec.locality * dk * spec.strength);
  return out;
}

double beta_equivalent(const EntropyBudget& budget, double hamiltonian_norm, double eps,
                       bool generalized) {
  require(hamiltonian_norm > 0.0 && eps > 0.0, "beta_equivalent needs ||H|| > 0 and eps > 0");
  require(budget.bits >= 0.0, "entropy budget must be non-negative");
  const double lambda_nats = budget.bits * kLn2;
  return (generalized ? 4.0 : 1.0) * lambda_nats / (hamiltonian_norm * eps);
}

int trace_mixing_depth(double alpha, double eps, double initial_bits) {
  require(alpha > 0.0 && alpha <= 1.0, "alpha must lie in (0, 1]");
  require(eps > 0.0 && eps < 1.0, "eps must lie in (0, 1)");
  require(initial_bits > 0.0, "initial relative entropy must be positive");
  const double ratio = initial_bits * kLn2 / (2.0 * eps * eps);
  if (ratio <= 1.0) return 0;
  if (alpha == 1.0) return 1;
  return static_cast<int>(std::ceil(std::log(ratio) / -std::log1p(-alpha)));
}

QaoaThresholds qaoa_thresholds(int n, int degree, double eps) {
  require(degree >= 3, "QAOA thresholds need degree >= 3");
  require(n >= degree + 1, "QAOA thresholds need n >= degree + 1");
  require(eps > 0.0 && eps < 1.0, "eps must lie in (0, 1)");
  const double log_n = std::log(static_cast<double>(n));
  const double log_branch = std::log(static_cast<double>(degree - 1));
  return {log_n / log_branch, -std::log(eps) * log_branch / (2.0 * log_n)};
}

CorrelationThresholds correlation_thresholds(double correlation_length, const LatticeSpec& spec,
                                             double eps) {
  spec.validate();
  require(correlation_length > 0.0, "correlation length must be positive");
  require(eps > 0.0 && eps < 1.0, "eps must lie in (0, 1)");
  const double dk = std::pow(static_cast<double>(spec.dimension), spec.locality);
  return {correlation_length / 2.0,
          2.0 * std::log(20.0 * std::numbers::e * dk / eps) / correlation_length};
}

}  // namespace noisebound
