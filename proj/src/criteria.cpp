#include "gauss/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gauss/errors.hpp"

namespace gauss {

namespace {

// An asymptote this close to the threshold is treated as never reaching it.
constexpr double kAsymptoteMargin = 1e-12;

struct Crossing {
  bool found = false;
  double t = 0.0;
};

/// First root of `excess` (metric - 1) on (0, horizon], assuming excess(0) < 0.
/// A sample brackets a root once excess reaches `scan_level`; a positive level
/// keeps rounding noise near an asymptote sitting on the threshold from
/// registering as a crossing.
template <class F>
Crossing first_crossing(F excess, double horizon, double t_tol, double scan_level) {
  double prev_t = 0.0;
  for (int i = 1; i < kScanSamples; ++i) {
    const double t = horizon * static_cast<double>(i) / (kScanSamples - 1);
    if (excess(t) >= scan_level) {
      double lo = prev_t;
      double hi = t;
      while (hi - lo > t_tol) {
        const double mid = 0.5 * (lo + hi);
        (excess(mid) >= 0.0 ? hi : lo) = mid;
      }
      return {true, 0.5 * (lo + hi)};
    }
    prev_t = t;
  }
  return {};
}

double resolve_horizon(const BathSpec& bath, std::optional<double> horizon) {
  const double h = horizon.value_or(default_horizon(bath));
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("horizon must be positive");
  return h;
}

void require_physical(const CovarianceMatrix& v, const char* who) {
  if (!validate_state(v).physical) throw KindError(std::string(who) + ": state is not physical");
}

double closed_form_time(double gamma0, double n, double n0) {
  return -std::log(n / (n + 2.0 - 2.0 * n0)) / gamma0;
}

TransitionResult already() {
  return {TransitionKind::already, 0.0, TransitionMethod::closed_form, std::nullopt};
}

/// Minimal eigenvalue of the compression of `x` onto span{(e_q + i e_p)/sqrt2}
/// of every mode, the kernel of I + i Omega.
double kernel_compression_min(const Matrix& x) {
  const int modes = static_cast<int>(x.rows() / 2);
  Matrix re(modes, modes);
  Matrix im(modes, modes);
  for (int j = 0; j < modes; ++j) {
    for (int k = 0; k < modes; ++k) {
      const double qq = x(2 * j, 2 * k);
      const double pp = x(2 * j + 1, 2 * k + 1);
      const double qp = x(2 * j, 2 * k + 1);
      const double pq = x(2 * j + 1, 2 * k);
      // u_j^dagger X u_k with u = (1, i)/sqrt2
      re(j, k) = 0.5 * (qq + pp);
      im(j, k) = 0.5 * (qp - pq);
    }
  }
  Matrix embed(2 * modes, 2 * modes);
  embed << re, -im, im, re;
  return min_eigenvalue(embed);
}

TransitionResult scan_transition(const CovarianceMatrix& v0, const BathSpec& bath, double horizon,
                                 auto metric, bool crossing_expected) {
  const double excess0 = metric(v0) - 1.0;
  if (excess0 >= -kClassicalTolerance) return already();
  const auto crossing = first_crossing(
      [&](double t) { return metric(evolve(v0, bath, t)) - 1.0; }, horizon,
      kBisectionTolerance / bath.gamma0, crossing_expected ? 0.0 : kAsymptoteMargin);
  TransitionResult out;
  out.method = TransitionMethod::bisection;
  if (crossing.found) {
    out.kind = TransitionKind::finite;
    out.t = crossing.t;
  } else {
    out.kind = crossing_expected ? TransitionKind::horizon_exhausted : TransitionKind::never;
  }
  return out;
}

}  // namespace

std::string_view to_string(TransitionKind kind) {
  switch (kind) {
    case TransitionKind::finite: return "finite";
    case TransitionKind::never: return "never";
    case TransitionKind::already: return "already";
    case TransitionKind::horizon_exhausted: return "horizon_exhausted";
  }
  return "unknown";
}

std::string_view to_string(TransitionMethod method) {
  return method == TransitionMethod::closed_form ? "closed_form" : "bisection";
}

CovarianceMatrix SymmetricTwoModeState::covariance() const {
  Matrix v(4, 4);
  v << n, 0, kx, 0,
       0, n, 0, -ky,
       kx, 0, n, 0,
       0, -ky, 0, n;
  return CovarianceMatrix(v);
}

bool SymmetricTwoModeState::family_bona_fide() const {
  const double kmax = std::max(kx, ky);
  return kx >= 0.0 && ky >= 0.0 && n * n - kmax * kmax >= 1.0 - kPhysicalTolerance;
}

bool SymmetricTwoModeState::physical() const { return validate_state(covariance()).physical; }

bool SymmetricTwoModeState::entangled() const { return (n - kx) * (n - ky) < 1.0; }

double default_horizon(const BathSpec& bath) { return kHorizonUnits / bath.gamma0; }

TransitionResult classicality_time(const CovarianceMatrix& v0, const BathSpec& bath,
                                   std::optional<double> horizon, Route route) {
  bath.validate();
  const double h = resolve_horizon(bath, horizon);
  require_physical(v0, "classicality_time");
  const double n0 = min_eigenvalue(v0);
  if (n0 >= 1.0 - kClassicalTolerance) return already();

  const double n = bath.occupancy();
  if (bath.kind == BathKind::thermal && route == Route::automatic) {
    if (n == 0.0) return {TransitionKind::never, 0.0, TransitionMethod::closed_form, std::nullopt};
    const double t = closed_form_time(bath.gamma0, n, n0);
    return {TransitionKind::finite, t, TransitionMethod::closed_form, t};
  }

  const double asymptote = min_eigenvalue(asymptotic_covariance(bath));
  auto result = scan_transition(
      v0, bath, h, [](const CovarianceMatrix& v) { return min_eigenvalue(v); },
      asymptote > 1.0 + kAsymptoteMargin);
  if (bath.kind == BathKind::squeezed_thermal) {
    result.bound_time = squeezed_classicality_bound(n0, bath);
  } else if (n > 0.0) {
    result.bound_time = closed_form_time(bath.gamma0, n, n0);
  }
  return result;
}

double t_max(double gamma0, double n) {
  if (!(gamma0 > 0.0)) throw DomainError("t_max: gamma0 must be positive");
  if (!(n >= 0.0)) throw DomainError("t_max: N must be non-negative");
  if (n == 0.0) return std::numeric_limits<double>::infinity();
  return -std::log(n / (n + 2.0)) / gamma0;
}

Matrix partial_transpose(const Matrix& v) {
  Matrix out = v;
  const Eigen::Index p = v.rows() - 1;
  out.row(p) *= -1.0;
  out.col(p) *= -1.0;
  return out;
}

double ppt_min_symplectic_eigenvalue(const CovarianceMatrix& v) {
  return symplectic_eigenvalues(partial_transpose(v.entries()))(0);
}

bool is_separable_two_mode(const CovarianceMatrix& v) {
  if (v.n_modes() != 2) throw DimensionError("is_separable_two_mode: expected two modes");
  require_physical(v, "is_separable_two_mode");
  return ppt_min_symplectic_eigenvalue(v) >= 1.0 - kPhysicalTolerance;
}

TransitionResult esd_time(const CovarianceMatrix& v0, const BathSpec& bath,
                          std::optional<double> horizon) {
  bath.validate();
  if (v0.n_modes() != 2) throw DimensionError("esd_time: expected two modes");
  const double h = resolve_horizon(bath, horizon);
  require_physical(v0, "esd_time");
  if (ppt_min_symplectic_eigenvalue(v0) >= 1.0 - kPhysicalTolerance) return already();

  if (bath.kind == BathKind::thermal && bath.n == 0.0) {
    // The vacuum asymptote sits on the PPT boundary. A finite crossing exists
    // iff the compression of (V~0 - I) onto ker(I + i Omega) is positive definite.
    const Matrix excess = partial_transpose(v0.entries()) - Matrix::Identity(4, 4);
    if (kernel_compression_min(excess) <= 1e-12)
      return {TransitionKind::never, 0.0, TransitionMethod::bisection, std::nullopt};
  }

  bool crossing_expected = true;
  if (!(bath.kind == BathKind::thermal && bath.n == 0.0)) {
    const CovarianceMatrix v_inf(direct_sum_repeat(asymptotic_covariance(bath), 2));
    crossing_expected = min_eigenvalue(v_inf) > 0.0 &&
                        ppt_min_symplectic_eigenvalue(v_inf) > 1.0 + kAsymptoteMargin;
  }
  return scan_transition(v0, bath, h, ppt_min_symplectic_eigenvalue, crossing_expected);
}

TransitionResult esd_time_symmetric(const SymmetricTwoModeState& s, const BathSpec& bath,
                                    std::optional<double> horizon) {
  bath.validate();
  if (!s.physical()) throw KindError("esd_time_symmetric: state is not physical");
  if (!s.entangled()) return already();
  if (bath.kind == BathKind::thermal && s.kx == s.ky) {
    if (bath.n == 0.0) return {TransitionKind::never, 0.0, TransitionMethod::closed_form, std::nullopt};
    const double t = closed_form_time(bath.gamma0, bath.n, s.n - s.kx);
    return {TransitionKind::finite, t, TransitionMethod::closed_form, t};
  }
  return esd_time(s.covariance(), bath, horizon);
}

std::optional<double> squeezed_classicality_bound(double n0, const BathSpec& bath) {
  if (bath.kind != BathKind::squeezed_thermal)
    throw KindError("squeezed_classicality_bound: requires a squeezed-thermal bath");
  bath.validate();
  if (!(n0 < 1.0)) throw DomainError("squeezed_classicality_bound: n0 must be below 1");
  const double n = bath.occupancy();
  const double m = std::abs(bath.anomalous());
  if (n / 2.0 + 1.0 - m < 1.0) return std::nullopt;
  const double arg = (n - 2.0 * m) / (n + 2.0 - 2.0 * m - 2.0 * n0);
  if (!(arg > 0.0 && arg <= 1.0)) return std::nullopt;
  return -std::log(arg) / bath.gamma0;
}

}  // namespace gauss
