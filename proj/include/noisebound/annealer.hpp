#pragma once

// Continuous-time noise: amplitude damping (r1), dephasing (r2) and control
// error (r3) on every qubit of an annealer running
//   H(t) = g_I(t) H_I + g_0(t) H_0,   H_0 = -sum_i Gamma_i X_i.
// All entropies here are computed in nats and returned as bits.

#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "noisebound/bounds.hpp"
#include "noisebound/instances.hpp"

namespace noisebound {

struct ContinuousNoise {
  double r1 = 0.0;
  double r2 = 0.0;
  double r3 = 0.0;

  void validate() const;
};

// Single-qubit fixed point diag(p0, p1) = e^{gamma Z} / (2 cosh gamma).
struct FixedPointParams {
  double gamma = 0.0;  // +infinity when r3 = 0
  double alpha = 0.0;  // entropy decay rate r1 + 2 r3
  double p0 = 0.5;
  double p1 = 0.5;
  bool pure() const { return p1 == 0.0; }
};

FixedPointParams fixed_point(const ContinuousNoise& noise);

// (1 - e^{-x}(1 + x)) / x^2, with a series near 0.
double decay_kernel(double x);

// Per-qubit bound in nats after time T on the linear path from |+>^n:
//   e^{-rT} log(2 cosh gamma) + 2 sinh(gamma) mean_field T decay_kernel(rT).
double linear_path_rate(double gamma, double rate, double total_time, double mean_field);

EntropyBudget linear_path_bound(const ContinuousNoise& noise, double mean_field, double total_time, int n);

// Piecewise-linear function of the schedule fraction s/T in [0, 1].
class Modulation {
 public:
  Modulation() = default;
  explicit Modulation(std::vector<std::pair<double, double>> knots);
  static Modulation constant(double value);
  static Modulation linear(double start, double end);

  double operator()(double fraction) const;
  std::span<const std::pair<double, double>> knots() const { return knots_; }

 private:
  std::vector<std::pair<double, double>> knots_;
};

struct Schedule {
  double total_time = 1.0;
  Modulation transverse = Modulation::linear(1.0, 0.0);  // g_0
  Modulation ising = Modulation::linear(0.0, 1.0);       // g_I
  std::vector<double> fields;                            // Gamma_i

  void validate(bool paper_standard = false) const;
  double mean_field() const;
  int size() const { return static_cast<int>(fields.size()); }
};

// e^{-alpha T} n log(2 cosh gamma) plus the composite-Simpson integral of
//   e^{-alpha (T - tau)} g_0(tau) sum_i |Gamma_i| 2 sinh(gamma),
// integrated knot segment by knot segment with spacing at most `step`.
EntropyBudget schedule_bound(const Schedule& schedule, const ContinuousNoise& noise, double step);

struct RealmInputs {
  int n = 1;
  double mean_field = 1.0;
  double coupling_norm = 1.0;     // ||A||
  double hamiltonian_norm = 1.0;  // ||H_I||
  double eps = 0.1;
};

// Entropy allowed for a Gibbs state that is still sampleable in polynomial
// time: beta = 4 lambda / (||H_I|| eps) <= 1 / ||A||, so lambda <= ||H_I|| eps / (4 ||A||).
double classical_realm_threshold_nats(const RealmInputs& inputs);

struct RealmTime {
  enum class Kind { immediate, finite, never };
  Kind kind = Kind::never;
  double time = 0.0;
  double threshold_bits = 0.0;
};

// Smallest T with n * linear_path_rate(T) <= threshold, to relative tolerance 1e-6.
RealmTime classical_realm_time(const ContinuousNoise& noise, const RealmInputs& inputs);

// Columns: T, budget_bits_per_qubit, poly_threshold, classical.
void write_annealer_csv(std::ostream& out, const ContinuousNoise& noise, const RealmInputs& inputs,
                        std::span<const double> times);

}  // namespace noisebound
