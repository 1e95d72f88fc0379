#pragma once

#include <complex>
#include <span>

#include "gauss/linalg.hpp"

namespace gauss {

// Vacuum covariance is the identity. Quadrature ordering is
// (q1, p1, q2, p2, ...).

inline constexpr double kSymmetryTolerance = 1e-12;
inline constexpr double kPhysicalTolerance = 1e-10;
inline constexpr double kClassicalTolerance = 1e-10;

/// Zero-mean covariance matrix of an n-mode Gaussian state.
///
/// Construction checks shape and symmetry only; physicality is a separate
/// question answered by validate_state().
class CovarianceMatrix {
 public:
  /// Throws DimensionError for non-square or odd-dimension input and for
  /// asymmetry beyond kSymmetryTolerance. The stored matrix is symmetrized.
  explicit CovarianceMatrix(const Matrix& entries);

  static CovarianceMatrix identity(int n_modes);

  int n_modes() const { return static_cast<int>(entries_.rows() / 2); }
  int dim() const { return static_cast<int>(entries_.rows()); }
  const Matrix& entries() const { return entries_; }
  double operator()(int i, int j) const { return entries_(i, j); }

 private:
  Matrix entries_;
};

/// The n-fold direct sum of [[0, 1], [-1, 0]].
class SymplecticForm {
 public:
  explicit SymplecticForm(int n_modes);
  int n_modes() const { return static_cast<int>(omega_.rows() / 2); }
  const Matrix& matrix() const { return omega_; }

 private:
  Matrix omega_;
};

struct ValidityReport {
  bool symmetric = false;
  bool physical = false;
  /// 0 when the matrix is not positive definite.
  double min_symplectic_eigenvalue = 0.0;
};

bool is_symmetric(const Matrix& v);

/// Throws DimensionError when `v` is not square with even dimension.
ValidityReport validate_state(const Matrix& v);
ValidityReport validate_state(const CovarianceMatrix& v);

/// Symplectic spectrum (one entry per mode, ascending) of a positive definite
/// matrix. Throws KindError when `v` is not positive definite.
Vector symplectic_eigenvalues(const Matrix& v);

double min_eigenvalue(const Matrix& v);
double min_eigenvalue(const CovarianceMatrix& v);

/// Classical (non-negative P-function) iff V >= I, up to kClassicalTolerance.
bool is_classical(const CovarianceMatrix& v);

struct PhaseSpacePoint {
  double q = 0.0;
  double p = 0.0;

  static PhaseSpacePoint from_amplitude(std::complex<double> alpha);
  std::complex<double> amplitude() const;
};

/// exp(-X^T V X / 4) for the stacked point X = (q1, p1, q2, p2, ...).
/// `x` must hold one point per mode.
std::complex<double> characteristic_function(const CovarianceMatrix& v,
                                             std::span<const PhaseSpacePoint> x);

/// Isotropic Gaussian P-distribution centred on `mean`.
struct GaussianPFunction {
  std::complex<double> mean;
  double variance = 0.0;

  /// P(alpha); only meaningful for variance > 0.
  double density(std::complex<double> alpha) const;
};

/// Coherent state |alpha0> after time t in a thermal bath of occupancy n_bath.
/// Throws DomainError for t < 0, n_bath < 0 or gamma0 <= 0.
GaussianPFunction evolve_coherent_p(std::complex<double> alpha0, double gamma0,
                                    double n_bath, double t,
                                    bool include_rotation = false,
                                    double omega0 = 0.0);

// Symplectic building blocks, used to generate test corpora.
Matrix phase_rotation(double theta);
Matrix single_mode_squeezer(double r);
/// Beam splitter mixing modes i and j of an n-mode system.
Matrix beam_splitter(int n_modes, int i, int j, double theta);
/// Two-mode squeezer acting on modes i and j of an n-mode system.
Matrix two_mode_squeezer(int n_modes, int i, int j, double r);
/// Embeds a single-mode 2x2 block at `mode` of an n-mode identity.
Matrix embed_local(const Matrix& block, int n_modes, int mode);

}  // namespace gauss
