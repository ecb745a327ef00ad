#pragma once

// Closed-form limits for noisy circuits: entropy budgets, depth ceilings,
// equivalent Gibbs temperatures, mixing depths, and QAOA / correlation
// length thresholds.
//
// Unit convention: every EntropyBudget is in bits. Anything that feeds a
// Gibbs exponent converts to nats with ln 2 at the call boundary.

#include <optional>
#include <string>

#include "noisebound/instances.hpp"

namespace noisebound {

inline constexpr double kLn2 = 0.69314718055994530942;

struct DiscreteNoise {
  double p1 = 0.0;  // one-qubit layer depolarizing probability
  double p2 = 0.0;  // two-qubit layer depolarizing probability
  double pm = 0.0;  // measurement depolarizing probability
  double f1 = 0.5;  // fraction of one-qubit layers
  double f2 = 0.5;  // fraction of two-qubit layers

  void validate() const;
  // f1 p1 + f2 p2
  double effective_rate() const { return f1 * p1 + f2 * p2; }
  // f1 (-ln(1-p1)) + f2 (-ln(1-p2))
  double effective_log_rate() const;
};

struct EntropyBudget {
  double bits = 0.0;
  std::string provenance;
};

struct LatticeSpec {
  int dimension = 1;   // d
  int locality = 1;    // kappa
  double strength = 1; // J

  void validate() const;
};

// n (1-p1)^{2 D f1} (1-p2)^{2 D f2} [(1-pm)^2], bits.
EntropyBudget entropy_budget(const DiscreteNoise& noise, double depth, int n,
                             bool include_measurement);

// Depth past which an efficiently sampleable Gibbs state matches the circuit
// output energy to relative error eps. std::nullopt means unbounded (no noise).
struct DepthCeiling {
  // (ln(1/eps) + log_term - pm) / (2 (f1 p1 + f2 p2)), the small-p form.
  std::optional<double> approximate;
  // Solves n ln2 prod(1-p)^{2Df} (1-pm)^2 = ||H|| eps / ||A|| exactly, so that
  // beta_equivalent(entropy_budget(D)) * ||A|| = 1 at the returned depth.
  std::optional<double> exact;
};

// log_term = ln(||A|| n / ||H_I||)
double ising_log_term(double coupling_norm, double hamiltonian_norm, int n);

DepthCeiling dmax_ising(const DiscreteNoise& noise, double eps, double log_term);
DepthCeiling dmax_ising(const IsingInstance& instance, const DiscreteNoise& noise, double eps,
                        double hamiltonian_norm);

struct LatticeDepth {
  std::optional<double> depth;  // ln(20 e / (d^kappa eps)) / (2p), clamped at 0
  double beta_critical = 0.0;   // 1 / (5 e kappa d^kappa J)
};
LatticeDepth dmax_lattice(const LatticeSpec& spec, double eps, double p);

// lambda/(||H|| eps), times 4 for a general fixed point; lambda in bits is
// converted to nats first.
double beta_equivalent(const EntropyBudget& budget, double hamiltonian_norm, double eps,
                       bool generalized);

// Smallest N with (1-alpha)^N D0 ln2 <= 2 eps^2.
int trace_mixing_depth(double alpha, double eps, double initial_bits);

struct QaoaThresholds {
  double min_rounds = 0.0;      // ln n / ln(Delta - 1)
  double noise_threshold = 0.0; // ln(1/eps) ln(Delta - 1) / (2 ln n)
};
QaoaThresholds qaoa_thresholds(int n, int degree, double eps);

struct CorrelationThresholds {
  double min_depth = 0.0;        // xi / 2
  double noise_threshold = 0.0;  // 2 ln(20 e d^kappa / eps) / xi
};
CorrelationThresholds correlation_thresholds(double correlation_length, const LatticeSpec& spec,
                                             double eps);

}  // namespace noisebound
