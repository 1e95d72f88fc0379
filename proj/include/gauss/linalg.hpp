#pragma once

#include <span>

#include <Eigen/Dense>

namespace gauss {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct SymmetricEigen {
  Vector values;   // ascending
  Matrix vectors;  // columns, matching `values`; empty when not requested
  int sweeps = 0;
};

inline constexpr double kJacobiTolerance = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;

/// Cyclic Jacobi diagonalization of a real symmetric matrix.
///
/// Sweeps until the off-diagonal Frobenius norm drops below
/// kJacobiTolerance * max(1, ||a||_F). Only the upper triangle is trusted to
/// be symmetric with the lower one; callers symmetrize first if needed.
/// Throws ConvergenceError after kJacobiMaxSweeps sweeps.
SymmetricEigen jacobi_eigen(const Matrix& a, bool with_vectors = true);

Vector jacobi_eigenvalues(const Matrix& a);

/// Matrix square root of a symmetric positive semidefinite matrix.
Matrix sqrt_psd(const Matrix& a);

Matrix symmetrize(const Matrix& a);

/// Block-diagonal matrix built from `blocks` in order.
Matrix direct_sum(std::span<const Matrix> blocks);

/// `copies` copies of `block` along the diagonal.
Matrix direct_sum_repeat(const Matrix& block, int copies);

double off_diagonal_norm(const Matrix& a);

}  // namespace gauss
