#include "gauss/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gauss/errors.hpp"

namespace gauss {

namespace {

void require_even_square(const Matrix& v, const char* who) {
  if (v.rows() != v.cols() || v.rows() == 0 || v.rows() % 2 != 0)
    throw DimensionError(std::string(who) + ": expected a non-empty square matrix of even dimension");
}

}  // namespace

bool is_symmetric(const Matrix& v) {
  if (v.rows() != v.cols()) return false;
  for (Eigen::Index i = 0; i < v.rows(); ++i)
    for (Eigen::Index j = i + 1; j < v.cols(); ++j)
      if (std::abs(v(i, j) - v(j, i)) >
          kSymmetryTolerance * std::max({1.0, std::abs(v(i, j)), std::abs(v(j, i))}))
        return false;
  return true;
}

CovarianceMatrix::CovarianceMatrix(const Matrix& entries) {
  require_even_square(entries, "CovarianceMatrix");
  if (!is_symmetric(entries)) throw DimensionError("CovarianceMatrix: matrix is not symmetric");
  entries_ = symmetrize(entries);
}

CovarianceMatrix CovarianceMatrix::identity(int n_modes) {
  if (n_modes < 1) throw DimensionError("CovarianceMatrix::identity: n_modes must be >= 1");
  return CovarianceMatrix(Matrix::Identity(2 * n_modes, 2 * n_modes));
}

SymplecticForm::SymplecticForm(int n_modes) {
  if (n_modes < 1) throw DimensionError("SymplecticForm: n_modes must be >= 1");
  Matrix j(2, 2);
  j << 0.0, 1.0, -1.0, 0.0;
  omega_ = direct_sum_repeat(j, n_modes);
}

Vector symplectic_eigenvalues(const Matrix& v) {
  require_even_square(v, "symplectic_eigenvalues");
  const Matrix sym = symmetrize(v);
  if (jacobi_eigenvalues(sym)(0) <= 0.0)
    throw KindError("symplectic_eigenvalues: matrix is not positive definite");
  const int modes = static_cast<int>(sym.rows() / 2);
  // M = V^{1/2} Omega V^{1/2} is antisymmetric with eigenvalues +-i nu, so
  // M^T M carries each nu^2 twice.
  const Matrix root = sqrt_psd(sym);
  const Matrix m = root * SymplecticForm(modes).matrix() * root;
  const Vector sq = jacobi_eigenvalues(m.transpose() * m);
  Vector nu(modes);
  for (int k = 0; k < modes; ++k)
    nu(k) = std::sqrt(std::max(0.0, 0.5 * (sq(2 * k) + sq(2 * k + 1))));
  return nu;
}

ValidityReport validate_state(const Matrix& v) {
  require_even_square(v, "validate_state");
  ValidityReport report;
  report.symmetric = is_symmetric(v);
  const Matrix sym = symmetrize(v);
  if (jacobi_eigenvalues(sym)(0) > 0.0) {
    report.min_symplectic_eigenvalue = symplectic_eigenvalues(sym)(0);
  }
  report.physical = report.symmetric && report.min_symplectic_eigenvalue >= 1.0 - kPhysicalTolerance;
  return report;
}

ValidityReport validate_state(const CovarianceMatrix& v) { return validate_state(v.entries()); }

double min_eigenvalue(const Matrix& v) {
  if (v.rows() != v.cols() || v.rows() == 0)
    throw DimensionError("min_eigenvalue: expected a non-empty square matrix");
  return jacobi_eigenvalues(v)(0);
}

double min_eigenvalue(const CovarianceMatrix& v) { return min_eigenvalue(v.entries()); }

bool is_classical(const CovarianceMatrix& v) {
  return min_eigenvalue(v) >= 1.0 - kClassicalTolerance;
}

PhaseSpacePoint PhaseSpacePoint::from_amplitude(std::complex<double> alpha) {
  // q = (alpha + alpha*)/sqrt2, p = i(alpha* - alpha)/sqrt2
  return {std::numbers::sqrt2 * alpha.real(), std::numbers::sqrt2 * alpha.imag()};
}

std::complex<double> PhaseSpacePoint::amplitude() const {
  return {q / std::numbers::sqrt2, p / std::numbers::sqrt2};
}

std::complex<double> characteristic_function(const CovarianceMatrix& v,
                                             std::span<const PhaseSpacePoint> x) {
  if (static_cast<int>(x.size()) != v.n_modes())
    throw DimensionError("characteristic_function: one phase-space point per mode required");
  Vector stacked(v.dim());
  for (std::size_t k = 0; k < x.size(); ++k) {
    stacked(static_cast<Eigen::Index>(2 * k)) = x[k].q;
    stacked(static_cast<Eigen::Index>(2 * k + 1)) = x[k].p;
  }
  const double quad = stacked.dot(v.entries() * stacked);
  return {std::exp(-quad / 4.0), 0.0};
}

double GaussianPFunction::density(std::complex<double> alpha) const {
  return std::exp(-std::norm(alpha - mean) / variance) / (std::numbers::pi * variance);
}

GaussianPFunction evolve_coherent_p(std::complex<double> alpha0, double gamma0,
                                    double n_bath, double t, bool include_rotation,
                                    double omega0) {
  if (!(gamma0 > 0.0)) throw DomainError("evolve_coherent_p: gamma0 must be positive");
  if (n_bath < 0.0) throw DomainError("evolve_coherent_p: bath occupancy must be non-negative");
  if (t < 0.0) throw DomainError("evolve_coherent_p: time must be non-negative");
  const double w = include_rotation ? omega0 : 0.0;
  const std::complex<double> rate{-gamma0 / 2.0, -w};
  return {alpha0 * std::exp(rate * t), n_bath * (1.0 - std::exp(-gamma0 * t))};
}

Matrix phase_rotation(double theta) {
  Matrix r(2, 2);
  r << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
  return r;
}

Matrix single_mode_squeezer(double r) {
  Matrix s = Matrix::Zero(2, 2);
  s(0, 0) = std::exp(-r);
  s(1, 1) = std::exp(r);
  return s;
}

Matrix embed_local(const Matrix& block, int n_modes, int mode) {
  Matrix s = Matrix::Identity(2 * n_modes, 2 * n_modes);
  s.block(2 * mode, 2 * mode, 2, 2) = block;
  return s;
}

Matrix beam_splitter(int n_modes, int i, int j, double theta) {
  Matrix s = Matrix::Identity(2 * n_modes, 2 * n_modes);
  const Matrix id2 = Matrix::Identity(2, 2);
  s.block(2 * i, 2 * i, 2, 2) = std::cos(theta) * id2;
  s.block(2 * j, 2 * j, 2, 2) = std::cos(theta) * id2;
  s.block(2 * i, 2 * j, 2, 2) = std::sin(theta) * id2;
  s.block(2 * j, 2 * i, 2, 2) = -std::sin(theta) * id2;
  return s;
}

Matrix two_mode_squeezer(int n_modes, int i, int j, double r) {
  Matrix s = Matrix::Identity(2 * n_modes, 2 * n_modes);
  Matrix z = Matrix::Zero(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  const Matrix id2 = Matrix::Identity(2, 2);
  s.block(2 * i, 2 * i, 2, 2) = std::cosh(r) * id2;
  s.block(2 * j, 2 * j, 2, 2) = std::cosh(r) * id2;
  s.block(2 * i, 2 * j, 2, 2) = std::sinh(r) * z;
  s.block(2 * j, 2 * i, 2, 2) = std::sinh(r) * z;
  return s;
}

}  // namespace gauss
