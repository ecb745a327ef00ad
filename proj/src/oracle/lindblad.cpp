#include "noisebound/oracle/lindblad.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "noisebound/errors.hpp"

namespace noisebound::oracle {

namespace {

using Complex = std::complex<double>;

class Generator {
 public:
  Generator(const Schedule& schedule, const IsingInstance& instance, const ContinuousNoise& noise)
      : schedule_(schedule), n_(instance.size()), noise_(noise) {
    const Eigen::Index dim = Eigen::Index{1} << n_;
    diagonal_.resize(dim);
    for (Eigen::Index x = 0; x < dim; ++x) diagonal_(x) = instance.energy(config_from_bits(x, n_));
    lower_ << 0, 1, 0, 0;
    lower_dag_ = lower_.adjoint();
    excited_ << 0, 0, 0, 1;
  }

  Matrix operator()(double t, const Matrix& rho) const {
    const double T = schedule_.total_time;
    const double fraction = T > 0.0 ? t / T : 0.0;
    const double g_ising = schedule_.ising(fraction);
    const double g_transverse = schedule_.transverse(fraction);
    const Eigen::Index dim = rho.rows();
    const Complex minus_i(0.0, -1.0);

    Matrix out(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
      for (Eigen::Index i = 0; i < dim; ++i) {
        out(i, j) = minus_i * g_ising * (diagonal_(i) - diagonal_(j)) * rho(i, j);
      }
    }

    const double cz = noise_.r2 / 2.0 + noise_.r3;
    const Matrix2 x = pauli_x();
    const Matrix2 z = pauli_z();
    Matrix left(dim, dim);
    Matrix right(dim, dim);
    for (int k = 0; k < n_; ++k) {
      // -i [-Gamma_k g_0 X_k, rho]
      const double field = -schedule_.fields[k] * g_transverse;
      left = rho;
      apply_left(left, k, x);
      right = rho;
      apply_right(right, k, x);
      if (field != 0.0) out += minus_i * field * (left - right);

      if (noise_.r3 != 0.0) {
        apply_right(left, k, x);  // X rho X
        out += noise_.r3 * (left - rho);
      }
      if (cz != 0.0) {
        left = rho;
        apply_left(left, k, z);
        apply_right(left, k, z);
        out += cz * (left - rho);
      }
      if (noise_.r1 != 0.0) {
        left = rho;
        apply_left(left, k, lower_);
        apply_right(left, k, lower_dag_);
        out += noise_.r1 * left;
        left = rho;
        apply_left(left, k, excited_);
        right = rho;
        apply_right(right, k, excited_);
        out -= 0.5 * noise_.r1 * (left + right);
      }
    }
    return out;
  }

 private:
  const Schedule& schedule_;
  int n_;
  ContinuousNoise noise_;
  Eigen::VectorXd diagonal_;
  Matrix2 lower_;
  Matrix2 lower_dag_;
  Matrix2 excited_;
};

}  // namespace

DensityMatrix fixed_point_state(const ContinuousNoise& noise, int n) {
  const FixedPointParams fp = fixed_point(noise);
  Matrix2 single;
  single << fp.p0, 0, 0, fp.p1;
  return DensityMatrix::product(std::vector<Matrix2>(n, single));
}

LindbladTrajectory lindblad_evolve(const Schedule& schedule, const IsingInstance& instance,
                                   const ContinuousNoise& noise, const DensityMatrix& initial,
                                   const LindbladOptions& options) {
  const int n = instance.size();
  require(n >= 1 && n <= kLindbladQubitCap, "Lindblad evolution is limited to 6 qubits");
  require(schedule.size() == n, "schedule must have one transverse field per qubit");
  require(initial.qubits() == n, "initial state size does not match the instance");
  require(options.dt > 0.0, "time step must be positive");
  require(options.record_every >= 0, "record interval must be non-negative");
  noise.validate();
  schedule.validate();

  const Generator generator(schedule, instance, noise);
  const double T = schedule.total_time;
  const long steps = T > 0.0 ? static_cast<long>(std::ceil(T / options.dt - 1e-12)) : 0;
  const double h = steps > 0 ? T / steps : 0.0;

  LindbladTrajectory out;
  Matrix rho = initial.matrix();
  out.times.push_back(0.0);
  out.states.push_back(initial);
  for (long s = 0; s < steps; ++s) {
    const double t = s * h;
    const Matrix k1 = generator(t, rho);
    const Matrix k2 = generator(t + h / 2, rho + (h / 2) * k1);
    const Matrix k3 = generator(t + h / 2, rho + (h / 2) * k2);
    const Matrix k4 = generator(t + h, rho + h * k3);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    const double drift = std::abs(rho.trace().real() - 1.0);
    out.max_trace_drift = std::max(out.max_trace_drift, drift);
    if (!(drift <= 1e-6)) {
      std::ostringstream msg;
      msg << "Lindblad integration unstable (trace drift " << drift << "); try dt = " << h / 4;
      throw ComputationError(msg.str());
    }
    rho = 0.5 * (rho + rho.adjoint());
    rho /= rho.trace().real();
    const bool last = s + 1 == steps;
    if (last || (options.record_every > 0 && (s + 1) % options.record_every == 0)) {
      out.times.push_back((s + 1) * h);
      out.states.emplace_back(n, rho);
    }
  }

  if (options.estimate_error && steps > 0) {
    LindbladOptions half = options;
    half.dt = h / 2;
    half.record_every = 0;
    half.estimate_error = false;
    const auto fine = lindblad_evolve(schedule, instance, noise, initial, half);
    out.step_halving_error = (fine.states.back().matrix() - rho).cwiseAbs().maxCoeff();
  }
  return out;
}

}  // namespace noisebound::oracle
