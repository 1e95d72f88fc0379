#pragma once

#include <complex>
#include <span>

#include "gauss/linalg.hpp"
#include "gauss/phase_space.hpp"

namespace gauss {

enum class BathKind { thermal, squeezed_thermal };

/// Local reservoir description. Thermal baths use `n`; squeezed-thermal baths
/// use `n_th`, `r` and `phi`, from which the effective occupancy and the
/// anomalous correlation are derived. `omega0` is only read by the Fock oracle.
struct BathSpec {
  BathKind kind = BathKind::thermal;
  double gamma0 = 1.0;
  double n = 0.0;
  double n_th = 0.0;
  double r = 0.0;
  double phi = 0.0;
  double omega0 = 0.0;

  static BathSpec thermal(double gamma0, double n);
  static BathSpec squeezed(double gamma0, double n_th, double r, double phi);

  /// N; for squeezed baths 2N + 1 = cosh(2r)(2N_th + 1).
  double occupancy() const;
  /// M = -sinh(2r) e^{i phi} (2N_th + 1) / 2; zero for thermal baths.
  std::complex<double> anomalous() const;

  /// Throws DomainError on negative or non-finite parameters.
  void validate() const;
};

/// Fixed point of the single-mode bath dynamics:
/// [[N/2+1+Re M, Im M], [Im M, N/2+1-Re M]].
Matrix asymptotic_covariance(const BathSpec& bath);

/// V -> A V A^T + B.
struct GaussianChannel {
  Matrix a;
  Matrix b;

  int n_modes() const { return static_cast<int>(a.rows() / 2); }
  static GaussianChannel identity(int n_modes);
};

/// Tolerance for negative eigenvalues of B before a channel is rejected.
inline constexpr double kChannelPsdTolerance = 1e-12;

GaussianChannel thermal_channel(double gamma0, double n, double t);

/// Throws DomainError when the asymptotic covariance has a negative eigenvalue
/// (N/2 + 1 < |M|), i.e. B would not be positive semidefinite.
GaussianChannel squeezed_channel(double gamma0, double n_th, double r, double phi, double t);

/// Single-mode channel for `bath` after time t.
GaussianChannel channel_for(const BathSpec& bath, double t);

CovarianceMatrix apply(const GaussianChannel& ch, const CovarianceMatrix& v);

/// Identical local copies of a single-mode channel on `n_modes` modes.
GaussianChannel extend_local(const GaussianChannel& single, int n_modes);

/// Direct sum of (possibly different) single-mode channels. Experimental:
/// the closed-form criteria assume identical baths.
GaussianChannel extend_local(std::span<const GaussianChannel> per_mode);

/// ch2 after ch1.
GaussianChannel compose(const GaussianChannel& ch2, const GaussianChannel& ch1);

/// Covariance after time t with identical local baths on every mode.
CovarianceMatrix evolve(const CovarianceMatrix& v0, const BathSpec& bath, double t);

}  // namespace gauss
