#include "gauss/random_states.hpp"

#include <cmath>
#include <numbers>

#include "gauss/errors.hpp"

namespace gauss {

CovarianceMatrix StateSampler::physical(int n_modes) {
  if (n_modes < 1) throw DimensionError("StateSampler: n_modes must be >= 1");
  const int d = 2 * n_modes;
  Matrix thermal = Matrix::Zero(d, d);
  for (int k = 0; k < n_modes; ++k) {
    const double nu = 1.0 + uniform(0.0, 1.5);
    thermal(2 * k, 2 * k) = nu;
    thermal(2 * k + 1, 2 * k + 1) = nu;
  }
  Matrix s = Matrix::Identity(d, d);
  for (int k = 0; k < n_modes; ++k) {
    const Matrix local = phase_rotation(uniform(0.0, std::numbers::pi)) *
                         single_mode_squeezer(uniform(0.0, 1.2)) *
                         phase_rotation(uniform(0.0, std::numbers::pi));
    s = embed_local(local, n_modes, k) * s;
  }
  for (int i = 0; i < n_modes; ++i) {
    for (int j = i + 1; j < n_modes; ++j) {
      s = two_mode_squeezer(n_modes, i, j, uniform(0.0, 1.0)) * s;
      s = beam_splitter(n_modes, i, j, uniform(0.0, std::numbers::pi)) * s;
    }
  }
  for (int k = 0; k < n_modes; ++k)
    s = embed_local(phase_rotation(uniform(0.0, 2.0 * std::numbers::pi)), n_modes, k) * s;
  return CovarianceMatrix(symmetrize(s * thermal * s.transpose()));
}

CovarianceMatrix StateSampler::nonclassical(int n_modes) {
  for (;;) {
    auto v = physical(n_modes);
    if (min_eigenvalue(v) < 1.0 - 1e-6) return v;
  }
}

CovarianceMatrix StateSampler::entangled_two_mode() {
  for (;;) {
    auto v = physical(2);
    if (ppt_min_symplectic_eigenvalue(v) < 1.0 - 1e-6) return v;
  }
}

SymmetricTwoModeState StateSampler::family_member() {
  const double n = uniform(1.0, 5.0);
  const double kmax = uniform(0.0, 1.0) * std::sqrt(n * n - 1.0);
  const double kmin = uniform(0.0, 1.0) * kmax;
  if (uniform(0.0, 1.0) < 0.5) return {n, kmax, kmin};
  return {n, kmin, kmax};
}

SymmetricTwoModeState StateSampler::entangled_symmetric_member() {
  const double n = uniform(1.0, 5.0);
  const double hi = std::sqrt(n * n - 1.0);
  const double lo = std::max(0.0, n - 1.0);
  // (0, 1] keeps k strictly above n - 1
  const double u = 1.0 - uniform(0.0, 1.0);
  const double k = lo + u * (hi - lo);
  return {n, k, k};
}

}  // namespace gauss
