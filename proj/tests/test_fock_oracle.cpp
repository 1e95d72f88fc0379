#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "gauss/channels.hpp"
#include "gauss/errors.hpp"
#include "gauss/fock_oracle.hpp"

using namespace gauss;
using cd = std::complex<double>;

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

ComplexMatrix random_density(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  ComplexMatrix x(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) x(i, j) = cd(g(rng), g(rng)) * std::exp(-0.3 * (i + j));
  ComplexMatrix rho = x * x.adjoint();
  return rho / rho.trace();
}

double expect_number(const ComplexMatrix& rho) {
  double s = 0.0;
  for (int k = 0; k < rho.rows(); ++k) s += k * rho(k, k).real();
  return s;
}

}  // namespace

TEST_CASE("ladder operators") {
  const LadderOperators ops(8);
  CHECK(ops.a(0, 1) == cd(1.0));
  CHECK(std::abs(ops.a(2, 3) - std::sqrt(3.0)) < 1e-15);
  CHECK(ops.a_dag == ops.a.adjoint());
  const ComplexMatrix comm = ops.a * ops.a_dag - ops.a_dag * ops.a;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) CHECK(std::abs(comm(i, j) - (i == j ? 1.0 : 0.0)) < 1e-14);
}

TEST_CASE("FockDensityMatrix construction") {
  CHECK(FockDensityMatrix::vacuum(5).trace() == doctest::Approx(1.0));
  CHECK(FockDensityMatrix::number(5, 2).entries()(2, 2) == cd(1.0));
  CHECK(FockDensityMatrix::coherent(40, {1.0, 0.5}).trace() == doctest::Approx(1.0).epsilon(1e-14));
  const auto th = FockDensityMatrix::thermal(60, 0.7);
  CHECK(expect_number(th.entries()) == doctest::Approx(0.7).epsilon(1e-10));
  CHECK_THROWS_AS(FockDensityMatrix::vacuum(1), DimensionError);
  ComplexMatrix bad = ComplexMatrix::Zero(3, 3);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(FockDensityMatrix{bad}, KindError);
  CHECK_THROWS_AS(FockDensityMatrix{ComplexMatrix::Zero(3, 4)}, DimensionError);
}

TEST_CASE("lindblad_rhs examples") {
  const auto zero_bath = BathSpec::thermal(1.0, 0.0);
  CHECK(lindblad_rhs(FockDensityMatrix::vacuum(10), zero_bath).norm() < 1e-15);
  const ComplexMatrix d1 = lindblad_rhs(FockDensityMatrix::number(10, 1), zero_bath);
  CHECK(expect_number(d1) == doctest::Approx(-1.0).epsilon(1e-14));
  for (double n : {0.2, 1.0}) {
    const ComplexMatrix d = lindblad_rhs(FockDensityMatrix::thermal(120, n), BathSpec::thermal(1.0, n));
    // stationarity holds away from the truncation edge
    CHECK(d.topLeftCorner(60, 60).norm() < 1e-10);
  }
}

TEST_CASE("banded kernel matches the dense reference") {
  for (int dim : {6, 17, 70}) {
    const ComplexMatrix rho = random_density(dim, static_cast<std::uint64_t>(dim));
    auto thermal = BathSpec::thermal(1.3, 0.6);
    thermal.omega0 = 2.0;
    auto squeezed = BathSpec::squeezed(0.8, 0.4, 0.3, 1.1);
    squeezed.omega0 = -0.5;
    for (const auto& bath : {thermal, squeezed})
      for (bool rot : {false, true}) {
        const ComplexMatrix fast = lindblad_rhs(rho, bath, rot);
        const ComplexMatrix ref = lindblad_rhs_reference(rho, bath, rot);
        CHECK((fast - ref).cwiseAbs().maxCoeff() < 1e-12);
      }
  }
}

TEST_CASE("covariance_from_state examples") {
  const auto vac = covariance_from_state(FockDensityMatrix::vacuum(10));
  CHECK(max_abs(vac.covariance.entries() - Matrix::Identity(2, 2)) < 1e-14);
  const cd alpha(0.8, -0.3);
  const auto coh = covariance_from_state(FockDensityMatrix::coherent(40, alpha));
  CHECK(max_abs(coh.covariance.entries() - Matrix::Identity(2, 2)) < 1e-10);
  CHECK(coh.mean_q == doctest::Approx(std::sqrt(2.0) * alpha.real()).epsilon(1e-10));
  CHECK(coh.mean_p == doctest::Approx(std::sqrt(2.0) * alpha.imag()).epsilon(1e-10));
  CHECK(std::abs(coh.mean_a - alpha) < 1e-10);
  const auto th = covariance_from_state(FockDensityMatrix::thermal(80, 0.5));
  CHECK(max_abs(th.covariance.entries() - 2.0 * Matrix::Identity(2, 2)) < 1e-9);
  const double r = 0.4;
  const auto sq = covariance_from_state(FockDensityMatrix::squeezed_vacuum(60, r, 0.0));
  const auto eig = jacobi_eigenvalues(sq.covariance.entries());
  CHECK(eig(0) == doctest::Approx(std::exp(-2 * r)).epsilon(1e-9));
  CHECK(eig(1) == doctest::Approx(std::exp(2 * r)).epsilon(1e-9));
  CHECK(std::abs(sq.covariance(0, 1)) < 1e-12);
  CHECK(sq.n_mean == doctest::Approx(std::sinh(r) * std::sinh(r)).epsilon(1e-9));
}

TEST_CASE("integrate: vacuum under a zero-temperature bath stays put") {
  const auto traj = integrate(FockDensityMatrix::vacuum(10), BathSpec::thermal(1.0, 0.0), 1.0, 1e-3);
  for (const auto& s : traj.states) CHECK((s.entries() - FockDensityMatrix::vacuum(10).entries()).norm() < 1e-15);
  CHECK(traj.times.front() == 0.0);
  CHECK(traj.times.back() == doctest::Approx(1.0));
}

TEST_CASE("integrate: coherent-state decay") {
  for (double n : {0.0, 0.5}) {
    const auto traj = integrate(FockDensityMatrix::coherent(40, 1.0), BathSpec::thermal(1.0, n), 2.0, 1e-3);
    CHECK(traj.max_trace_drift <= 1e-8);
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
      const double t = traj.times[i];
      const auto m = covariance_from_state(traj.states[i]);
      CHECK(std::abs(m.mean_a - cd(std::exp(-t / 2), 0.0)) <= 1e-6);
      CHECK(std::abs(m.n_mean - (std::exp(-t) + n * (1 - std::exp(-t)))) <= 1e-4);
    }
  }
}

TEST_CASE("integrate: occupancy cross-check at alpha = 2, N = 1, t = ln 2") {
  const auto traj = integrate(FockDensityMatrix::coherent(40, 2.0), BathSpec::thermal(1.0, 1.0), std::log(2.0), 1e-3);
  const auto m = covariance_from_state(traj.states.back());
  const auto p = evolve_coherent_p(2.0, 1.0, 1.0, std::log(2.0));
  // <a^dag a> = |mean|^2 + variance of the P function
  CHECK(m.n_mean == doctest::Approx(std::norm(p.mean) + p.variance).epsilon(1e-5));
  CHECK(m.n_mean == doctest::Approx(2.5).epsilon(1e-5));
}

TEST_CASE("bridge calibration recovers one quarter") {
  CHECK(std::abs(calibrate_bridge_scale() - 0.25) < 1e-4);
  const CovarianceMatrix raw(3.0 * Matrix::Identity(2, 2));
  CHECK(max_abs(bridge_to_model(raw).entries() - 1.5 * Matrix::Identity(2, 2)) < 1e-15);
}

TEST_CASE("thermal oracle matches the bridged channel evolution") {
  for (double n : {0.0, 0.5, 1.0}) {
    for (const auto& rho0 : {FockDensityMatrix::vacuum(40), FockDensityMatrix::squeezed_vacuum(40, 0.3, 0.7)}) {
      const auto traj = integrate(rho0, BathSpec::thermal(1.0, n), 2.0, 1e-3);
      const auto v0 = bridge_to_model(covariance_from_state(rho0).covariance);
      for (std::size_t i = 0; i < traj.times.size(); ++i) {
        const auto oracle_v = bridge_to_model(covariance_from_state(traj.states[i]).covariance);
        const auto model_v = apply(thermal_channel(1.0, n, traj.times[i]), v0);
        CHECK(max_abs(oracle_v.entries() - model_v.entries()) <= 1e-3);
      }
    }
  }
}

TEST_CASE("squeezed oracle follows the standard-convention asymptote") {
  const auto bath = BathSpec::squeezed(1.0, 0.0, 0.5, 0.0);
  const auto traj = integrate(FockDensityMatrix::vacuum(40), bath, 3.0, 1e-3);
  const Matrix v_inf_raw = oracle_asymptotic_covariance(bath);
  double raw_dev = 0.0;
  double bridged_dev = 0.0;
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const double decay = std::exp(-traj.times[i]);
    const auto raw = covariance_from_state(traj.states[i]).covariance;
    raw_dev = std::max(raw_dev, max_abs(raw.entries() - (decay * Matrix::Identity(2, 2) + (1 - decay) * v_inf_raw)));
    const auto model = apply(squeezed_channel(1.0, 0.0, 0.5, 0.0, traj.times[i]), CovarianceMatrix::identity(1));
    bridged_dev = std::max(bridged_dev, max_abs(bridge_to_model(raw).entries() - model.entries()));
  }
  CHECK(raw_dev <= 1e-3);
  CHECK(bridged_dev > 1e-3);
  // at N_th = 0 the oracle fixed point is a pure squeezed vacuum
  CHECK(std::sqrt(v_inf_raw.determinant()) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("rotation leaves the covariance spectrum unchanged") {
  auto bath = BathSpec::thermal(1.0, 0.3);
  bath.omega0 = 3.0;
  const auto rho0 = FockDensityMatrix::squeezed_vacuum(40, 0.4, 0.2);
  const auto off = integrate(rho0, bath, 1.0, 1e-3);
  const auto on = integrate(rho0, bath, 1.0, 1e-3, {.include_rotation = true});
  REQUIRE(off.states.size() == on.states.size());
  double rotated = 0.0;
  for (std::size_t i = 0; i < on.states.size(); ++i) {
    const Matrix v_off = covariance_from_state(off.states[i]).covariance.entries();
    const Matrix v_on = covariance_from_state(on.states[i]).covariance.entries();
    CHECK(max_abs(jacobi_eigenvalues(v_on) - jacobi_eigenvalues(v_off)) < 1e-8);
    rotated = std::max(rotated, max_abs(v_on - v_off));
  }
  CHECK(rotated > 1e-2);
}

TEST_CASE("integrate errors") {
  SUBCASE("insufficient initial headroom") {
    CHECK_THROWS_AS(integrate(FockDensityMatrix::coherent(5, 1.0), BathSpec::thermal(1.0, 0.0), 1.0, 1e-3),
                    TruncationError);
  }
  SUBCASE("headroom lost mid-run") {
    try {
      integrate(FockDensityMatrix::vacuum(12), BathSpec::thermal(1.0, 5.0), 2.0, 1e-3);
      FAIL("expected a truncation error");
    } catch (const TruncationError& e) {
      CHECK(e.time() > 0.0);
      CHECK(e.time() < 2.0);
    }
  }
  CHECK_THROWS_AS(integrate(FockDensityMatrix::vacuum(10), BathSpec::thermal(1.0, 0.0), 1.0, 0.05), DomainError);
  CHECK_THROWS_AS(integrate(FockDensityMatrix::vacuum(10), BathSpec::thermal(1.0, 0.0), 1.0, 0.0), DomainError);
}
