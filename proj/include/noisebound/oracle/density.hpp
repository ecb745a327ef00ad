#pragma once

// Dense density matrices for small systems. Basis index bit k is qubit k,
// with bit value 0 the Z = +1 state |0>.

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "noisebound/instances.hpp"

namespace noisebound::oracle {

using Matrix = Eigen::MatrixXcd;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;

inline constexpr int kCircuitQubitCap = 10;

class DensityMatrix {
 public:
  DensityMatrix() = default;
  // Checks Hermiticity and unit trace to 1e-12, eigenvalues >= -1e-10.
  DensityMatrix(int n, Matrix rho);

  static DensityMatrix maximally_mixed(int n);
  static DensityMatrix basis_state(int n, std::uint64_t bits);
  // Tensor product of single-qubit states, qubit 0 first.
  static DensityMatrix product(const std::vector<Matrix2>& factors);

  int qubits() const { return n_; }
  const Matrix& matrix() const { return rho_; }
  Matrix& mutable_matrix() { return rho_; }
  double trace() const { return rho_.trace().real(); }
  double purity() const { return (rho_ * rho_).trace().real(); }
  double expectation(const Matrix& op) const { return (rho_ * op).trace().real(); }

 private:
  int n_ = 0;
  Matrix rho_;
};

struct HermitianSpectrum {
  Eigen::VectorXd values;
  Matrix vectors;
};
HermitianSpectrum hermitian_eigen(const Matrix& m);

// Eigenvalues are clamped at 1e-30 before the logarithm.
Matrix hermitian_log(const Matrix& m);
Matrix hermitian_exp(const Matrix& m);
double operator_norm(const Matrix& hermitian);

double von_neumann_entropy_bits(const DensityMatrix& rho);
// Throws ComputationError when sigma has an eigenvalue <= 1e-12.
double relative_entropy_bits(const DensityMatrix& rho, const DensityMatrix& sigma);
double relative_entropy_bits(const Matrix& rho, const Matrix& sigma);
// log2 of the largest eigenvalue of sigma^{-1/2} rho sigma^{-1/2}.
double max_relative_entropy_bits(const Matrix& rho, const Matrix& sigma);

// Diagonal matrix of the classical energies.
Matrix ising_matrix(const IsingInstance& instance);

// Qubit-local actions on a 2^n x 2^n matrix.
void apply_left(Matrix& m, int qubit, const Matrix2& op);   // m <- op_k m
void apply_right(Matrix& m, int qubit, const Matrix2& op);  // m <- m op_k
void apply_left(Matrix& m, int q0, int q1, const Matrix4& op);  // op index = b(q0) + 2 b(q1)
void apply_right(Matrix& m, int q0, int q1, const Matrix4& op);

// rho <- (1-p) rho + p tr_k(rho) (x) I/2 on one qubit.
void depolarize(Matrix& rho, int qubit, double p);

// Embeds a single-qubit operator as a full 2^n x 2^n matrix.
Matrix embed(int n, int qubit, const Matrix2& op);

Matrix2 pauli_x();
Matrix2 pauli_y();
Matrix2 pauli_z();

int qubits_of(const Matrix& m);

}  // namespace noisebound::oracle
