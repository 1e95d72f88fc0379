#pragma once

#include <cstdint>
#include <random>

#include "gauss/criteria.hpp"
#include "gauss/phase_space.hpp"

namespace gauss {

/// Seeded generator of physical covariance matrices for tests, sweeps and the
/// CLI. States are S D S^T with D a product of thermal blocks (nu >= 1) and S a
/// random product of local rotations, local squeezers, beam splitters and
/// two-mode squeezers, so every sample is physical by construction.
class StateSampler {
 public:
  explicit StateSampler(std::uint64_t seed) : rng_(seed) {}

  CovarianceMatrix physical(int n_modes);
  /// Rejection-samples physical() until min eigenvalue < 1 - 1e-6.
  CovarianceMatrix nonclassical(int n_modes);
  /// Two-mode states with PPT symplectic eigenvalue < 1 - 1e-6.
  CovarianceMatrix entangled_two_mode();

  /// n in [1, 5], max(kx, ky) = u sqrt(n^2 - 1), min = u' max; strictly physical.
  SymmetricTwoModeState family_member();
  /// kx = ky = k with n - 1 < k <= sqrt(n^2 - 1), n in [1, 5].
  SymmetricTwoModeState entangled_symmetric_member();

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gauss
