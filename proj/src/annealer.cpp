#include "noisebound/annealer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "noisebound/csv.hpp"
#include "noisebound/errors.hpp"
#include "noisebound/partition.hpp"

namespace noisebound {

void ContinuousNoise::validate() const {
  require(r1 >= 0.0 && r2 >= 0.0 && r3 >= 0.0 && std::isfinite(r1 + r2 + r3),
          "noise rates must be finite and non-negative");
  require(r1 + 2.0 * r3 > 0.0, "r1 + 2 r3 must be positive for the state to contract");
}

FixedPointParams fixed_point(const ContinuousNoise& noise) {
  noise.validate();
  FixedPointParams out;
  out.alpha = noise.r1 + 2.0 * noise.r3;
  out.p0 = (noise.r1 + noise.r3) / out.alpha;
  out.p1 = noise.r3 / out.alpha;
  out.gamma = noise.r3 == 0.0 ? std::numeric_limits<double>::infinity()
                              : 0.5 * std::log1p(noise.r1 / noise.r3);
  return out;
}

double decay_kernel(double x) {
  if (std::abs(x) < 1e-3) return 0.5 - x / 3.0 + x * x / 8.0 - x * x * x / 30.0 + x * x * x * x / 144.0;
  return (-std::expm1(-x) - x * std::exp(-x)) / (x * x);
}

double linear_path_rate(double gamma, double rate, double total_time, double mean_field) {
  require(std::isfinite(gamma), "the fixed point must be full rank");
  require(rate > 0.0 && total_time >= 0.0 && mean_field >= 0.0,
          "linear path bound needs rate > 0, T >= 0 and mean field >= 0");
  const double x = rate * total_time;
  return std::exp(-x) * log_two_cosh(gamma) +
         2.0 * std::sinh(std::abs(gamma)) * mean_field * total_time * decay_kernel(x);
}

EntropyBudget linear_path_bound(const ContinuousNoise& noise, double mean_field, double total_time, int n) {
  require(n >= 1, "qubit count must be positive");
  const FixedPointParams fp = fixed_point(noise);
  const double nats = n * linear_path_rate(fp.gamma, fp.alpha, total_time, mean_field);
  return {nats / kLn2, "linear-path-entropy-decay"};
}

Modulation::Modulation(std::vector<std::pair<double, double>> knots) : knots_(std::move(knots)) {
  require(knots_.size() >= 2, "a modulation needs at least two knots");
  require(knots_.front().first == 0.0 && knots_.back().first == 1.0,
          "modulation knots must span the fractions 0 to 1");
  for (std::size_t k = 1; k < knots_.size(); ++k) {
    require(knots_[k].first > knots_[k - 1].first, "modulation knots must be strictly increasing");
  }
  for (const auto& [s, g] : knots_) require(std::isfinite(g), "modulation values must be finite");
}

Modulation Modulation::constant(double value) { return Modulation({{0.0, value}, {1.0, value}}); }

Modulation Modulation::linear(double start, double end) { return Modulation({{0.0, start}, {1.0, end}}); }

double Modulation::operator()(double fraction) const {
  if (fraction <= knots_.front().first) return knots_.front().second;
  if (fraction >= knots_.back().first) return knots_.back().second;
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), fraction,
                                   [](double f, const auto& knot) { return f < knot.first; });
  const auto& [s1, g1] = *it;
  const auto& [s0, g0] = *(it - 1);
  return g0 + (g1 - g0) * (fraction - s0) / (s1 - s0);
}

void Schedule::validate(bool paper_standard) const {
  require(total_time >= 0.0 && std::isfinite(total_time), "total time must be finite and non-negative");
  require(!fields.empty(), "schedule needs at least one transverse field");
  for (double g : fields) require(std::isfinite(g), "transverse fields must be finite");
  require(transverse(0.0) > 0.0, "the transverse modulation must be positive at the start");
  if (paper_standard) require(ising(0.0) == 0.0, "the Ising modulation must vanish at the start");
}

double Schedule::mean_field() const {
  double total = 0.0;
  for (double g : fields) total += std::abs(g);
  return total / fields.size();
}

EntropyBudget schedule_bound(const Schedule& schedule, const ContinuousNoise& noise, double step) {
  require(step > 0.0, "quadrature step must be positive");
  schedule.validate();
  const FixedPointParams fp = fixed_point(noise);
  require(std::isfinite(fp.gamma), "the fixed point must be full rank");
  const int n = schedule.size();
  const double T = schedule.total_time;
  const double commutator = 2.0 * std::sinh(std::abs(fp.gamma)) * n * schedule.mean_field();
  const double initial = n * log_two_cosh(fp.gamma);

  double integral = 0.0;
  if (T > 0.0 && commutator > 0.0) {
    auto integrand = [&](double tau) {
      return std::exp(-fp.alpha * (T - tau)) * std::abs(schedule.transverse(tau / T));
    };
    const auto knots = schedule.transverse.knots();
    for (std::size_t k = 1; k < knots.size(); ++k) {
      const double a = knots[k - 1].first * T;
      const double b = knots[k].first * T;
      int m = static_cast<int>(std::ceil((b - a) / step));
      m = std::max(2, m + (m % 2));
      const double h = (b - a) / m;
      double s = integrand(a) + integrand(b);
      for (int j = 1; j < m; ++j) s += (j % 2 == 1 ? 4.0 : 2.0) * integrand(a + j * h);
      integral += s * h / 3.0;
    }
    integral *= commutator;
  }
  const double nats = std::exp(-fp.alpha * T) * initial + integral;
  return {nats / kLn2, "schedule-entropy-decay"};
}

double classical_realm_threshold_nats(const RealmInputs& inputs) {
  require(inputs.n >= 1, "qubit count must be positive");
  require(inputs.coupling_norm > 0.0 && inputs.hamiltonian_norm > 0.0 && inputs.eps > 0.0,
          "threshold needs ||A|| > 0, ||H_I|| > 0 and eps > 0");
  return inputs.hamiltonian_norm * inputs.eps / (4.0 * inputs.coupling_norm);
}

RealmTime classical_realm_time(const ContinuousNoise& noise, const RealmInputs& inputs) {
  const FixedPointParams fp = fixed_point(noise);
  require(inputs.mean_field >= 0.0, "mean field must be non-negative");
  const double threshold = classical_realm_threshold_nats(inputs);
  RealmTime out;
  out.threshold_bits = threshold / kLn2;
  if (!std::isfinite(fp.gamma)) return out;

  auto total = [&](double T) { return inputs.n * linear_path_rate(fp.gamma, fp.alpha, T, inputs.mean_field); };
  if (total(0.0) <= threshold) {
    out.kind = RealmTime::Kind::immediate;
    return out;
  }

  // Bracket by doubling, then locate the first satisfied point on a fine scan
  // of the last bracket before bisecting.
  double lo = 0.0;
  double hi = 1.0 / fp.alpha;
  const double limit = 1e12 / fp.alpha;
  while (total(hi) > threshold) {
    lo = hi;
    hi *= 2.0;
    if (hi > limit) return out;
  }
  constexpr int scan = 1000;
  const double width = hi - lo;
  const double base = lo;
  for (int k = 1; k <= scan; ++k) {
    const double t = base + width * k / scan;
    if (total(t) <= threshold) {
      lo = base + width * (k - 1) / scan;
      hi = t;
      break;
    }
  }
  while (hi - lo > 1e-6 * hi) {
    const double mid = 0.5 * (lo + hi);
    (total(mid) <= threshold ? hi : lo) = mid;
  }
  out.kind = RealmTime::Kind::finite;
  out.time = hi;
  return out;
}

void write_annealer_csv(std::ostream& out, const ContinuousNoise& noise, const RealmInputs& inputs,
                        std::span<const double> times) {
  const FixedPointParams fp = fixed_point(noise);
  const double threshold = classical_realm_threshold_nats(inputs) / (inputs.n * kLn2);
  write_csv_header(out, {"T", "budget_bits_per_qubit", "poly_threshold", "classical"});
  for (double T : times) {
    const double rate = linear_path_rate(fp.gamma, fp.alpha, T, inputs.mean_field) / kLn2;
    write_csv_row(out, {T, rate, threshold, rate <= threshold ? 1.0 : 0.0});
  }
}

}  // namespace noisebound
