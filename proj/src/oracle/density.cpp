#include "noisebound/oracle/density.hpp"

#include <bit>
#include <cmath>
#include <complex>

#include "noisebound/bounds.hpp"
#include "noisebound/errors.hpp"

namespace noisebound::oracle {

namespace {

using Complex = std::complex<double>;

void check_qubit(const Matrix& m, int qubit) {
  require(qubit >= 0 && (Eigen::Index{1} << qubit) < m.rows(), "qubit index out of range");
}

}  // namespace

int qubits_of(const Matrix& m) {
  require(m.rows() == m.cols() && m.rows() >= 1 && std::has_single_bit(static_cast<std::uint64_t>(m.rows())),
          "matrix dimension must be a power of two");
  return std::countr_zero(static_cast<std::uint64_t>(m.rows()));
}

DensityMatrix::DensityMatrix(int n, Matrix rho) : n_(n), rho_(std::move(rho)) {
  require(n_ >= 0 && rho_.rows() == (Eigen::Index{1} << n_) && rho_.cols() == rho_.rows(),
          "density matrix must be 2^n x 2^n");
  require((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() <= 1e-12, "density matrix must be Hermitian");
  require(std::abs(rho_.trace() - Complex(1.0)) <= 1e-12, "density matrix must have unit trace");
  require(hermitian_eigen(rho_).values.minCoeff() >= -1e-10, "density matrix must be positive semidefinite");
}

DensityMatrix DensityMatrix::maximally_mixed(int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  return DensityMatrix(n, Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::basis_state(int n, std::uint64_t bits) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  require(bits < static_cast<std::uint64_t>(dim), "basis index out of range");
  Matrix rho = Matrix::Zero(dim, dim);
  rho(bits, bits) = 1.0;
  return DensityMatrix(n, std::move(rho));
}

DensityMatrix DensityMatrix::product(const std::vector<Matrix2>& factors) {
  Matrix rho = Matrix::Ones(1, 1);
  // Qubit k must be bit k, so later factors become more significant.
  for (const auto& f : factors) {
    Matrix next(rho.rows() * 2, rho.cols() * 2);
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) next.block(a * rho.rows(), b * rho.cols(), rho.rows(), rho.cols()) = f(a, b) * rho;
    }
    rho = std::move(next);
  }
  return DensityMatrix(static_cast<int>(factors.size()), std::move(rho));
}

HermitianSpectrum hermitian_eigen(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success) throw ComputationError("Hermitian eigendecomposition failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix hermitian_log(const Matrix& m) {
  const auto spec = hermitian_eigen(m);
  Eigen::VectorXd logs = spec.values.unaryExpr([](double x) { return std::log(std::max(x, 1e-30)); });
  return spec.vectors * logs.cast<Complex>().asDiagonal() * spec.vectors.adjoint();
}

Matrix hermitian_exp(const Matrix& m) {
  const auto spec = hermitian_eigen(m);
  Eigen::VectorXd exps = spec.values.unaryExpr([](double x) { return std::exp(x); });
  return spec.vectors * exps.cast<Complex>().asDiagonal() * spec.vectors.adjoint();
}

double operator_norm(const Matrix& hermitian) {
  return hermitian_eigen(hermitian).values.cwiseAbs().maxCoeff();
}

double von_neumann_entropy_bits(const DensityMatrix& rho) {
  const auto values = hermitian_eigen(rho.matrix()).values;
  double s = 0.0;
  for (double v : values) {
    if (v > 0.0) s -= v * std::log(v);
  }
  return s / kLn2;
}

double relative_entropy_bits(const Matrix& rho, const Matrix& sigma) {
  require(rho.rows() == sigma.rows() && rho.cols() == sigma.cols(), "state dimensions differ");
  const auto sig = hermitian_eigen(sigma);
  if (sig.values.minCoeff() <= 1e-12) throw ComputationError("reference state is singular");
  const auto r = hermitian_eigen(rho);
  double neg_entropy = 0.0;
  for (double v : r.values) {
    if (v > 0.0) neg_entropy += v * std::log(v);
  }
  Eigen::VectorXd log_sigma = sig.values.unaryExpr([](double x) { return std::log(x); });
  const Matrix rotated = sig.vectors.adjoint() * rho * sig.vectors;
  double cross = 0.0;
  for (Eigen::Index k = 0; k < rotated.rows(); ++k) cross += rotated(k, k).real() * log_sigma(k);
  return (neg_entropy - cross) / kLn2;
}

double relative_entropy_bits(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return relative_entropy_bits(rho.matrix(), sigma.matrix());
}

double max_relative_entropy_bits(const Matrix& rho, const Matrix& sigma) {
  const auto sig = hermitian_eigen(sigma);
  if (sig.values.minCoeff() <= 1e-12) throw ComputationError("reference state is singular");
  Eigen::VectorXd inv_sqrt = sig.values.unaryExpr([](double x) { return 1.0 / std::sqrt(x); });
  const Matrix s = sig.vectors * inv_sqrt.cast<Complex>().asDiagonal() * sig.vectors.adjoint();
  const Matrix m = s * rho * s;
  return std::log2(hermitian_eigen(0.5 * (m + m.adjoint())).values.maxCoeff());
}

Matrix ising_matrix(const IsingInstance& instance) {
  const int n = instance.size();
  require(n <= kCircuitQubitCap, "dense Hamiltonian limited to 10 qubits");
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix h = Matrix::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) h(x, x) = instance.energy(config_from_bits(x, n));
  return h;
}

void apply_left(Matrix& m, int qubit, const Matrix2& op) {
  check_qubit(m, qubit);
  const Eigen::Index bit = Eigen::Index{1} << qubit;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i & bit) continue;
      const Complex a = m(i, c);
      const Complex b = m(i | bit, c);
      m(i, c) = op(0, 0) * a + op(0, 1) * b;
      m(i | bit, c) = op(1, 0) * a + op(1, 1) * b;
    }
  }
}

void apply_right(Matrix& m, int qubit, const Matrix2& op) {
  check_qubit(m, qubit);
  const Eigen::Index bit = Eigen::Index{1} << qubit;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    if (j & bit) continue;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      const Complex a = m(r, j);
      const Complex b = m(r, j | bit);
      m(r, j) = a * op(0, 0) + b * op(1, 0);
      m(r, j | bit) = a * op(0, 1) + b * op(1, 1);
    }
  }
}

void apply_left(Matrix& m, int q0, int q1, const Matrix4& op) {
  check_qubit(m, q0);
  check_qubit(m, q1);
  require(q0 != q1, "two-qubit gate needs distinct wires");
  const Eigen::Index b0 = Eigen::Index{1} << q0;
  const Eigen::Index b1 = Eigen::Index{1} << q1;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if ((i & b0) || (i & b1)) continue;
      const Eigen::Index idx[4] = {i, i | b0, i | b1, i | b0 | b1};
      Eigen::Vector4cd v;
      for (int k = 0; k < 4; ++k) v(k) = m(idx[k], c);
      const Eigen::Vector4cd w = op * v;
      for (int k = 0; k < 4; ++k) m(idx[k], c) = w(k);
    }
  }
}

void apply_right(Matrix& m, int q0, int q1, const Matrix4& op) {
  check_qubit(m, q0);
  check_qubit(m, q1);
  require(q0 != q1, "two-qubit gate needs distinct wires");
  const Eigen::Index b0 = Eigen::Index{1} << q0;
  const Eigen::Index b1 = Eigen::Index{1} << q1;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    if ((j & b0) || (j & b1)) continue;
    const Eigen::Index idx[4] = {j, j | b0, j | b1, j | b0 | b1};
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      Eigen::RowVector4cd v;
      for (int k = 0; k < 4; ++k) v(k) = m(r, idx[k]);
      const Eigen::RowVector4cd w = v * op;
      for (int k = 0; k < 4; ++k) m(r, idx[k]) = w(k);
    }
  }
}

void depolarize(Matrix& rho, int qubit, double p) {
  check_qubit(rho, qubit);
  require(p >= 0.0 && p <= 1.0, "depolarizing probability must lie in [0, 1]");
  const Eigen::Index bit = Eigen::Index{1} << qubit;
  const double keep = 1.0 - p;
  for (Eigen::Index j = 0; j < rho.cols(); ++j) {
    if (j & bit) continue;
    for (Eigen::Index i = 0; i < rho.rows(); ++i) {
      if (i & bit) continue;
      const Complex half_trace = 0.5 * (rho(i, j) + rho(i | bit, j | bit));
      rho(i, j) = keep * rho(i, j) + p * half_trace;
      rho(i | bit, j | bit) = keep * rho(i | bit, j | bit) + p * half_trace;
      rho(i | bit, j) *= keep;
      rho(i, j | bit) *= keep;
    }
  }
}

Matrix embed(int n, int qubit, const Matrix2& op) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix m = Matrix::Identity(dim, dim);
  apply_left(m, qubit, op);
  return m;
}

Matrix2 pauli_x() {
  Matrix2 m;
  m << 0, 1, 1, 0;
  return m;
}

Matrix2 pauli_y() {
  Matrix2 m;
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Matrix2 pauli_z() {
  Matrix2 m;
  m << 1, 0, 0, -1;
  return m;
}

}  // namespace noisebound::oracle
