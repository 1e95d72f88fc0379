#include "gauss/channels.hpp"

#include <cmath>
#include <vector>

#include "gauss/errors.hpp"

namespace gauss {

namespace {

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("channel: time must be finite and non-negative");
}

GaussianChannel finish(Matrix a, Matrix b) {
  b = symmetrize(b);
  if (min_eigenvalue(b) < -kChannelPsdTolerance)
    throw DomainError("channel: B is not positive semidefinite");
  return {std::move(a), std::move(b)};
}

}  // namespace

BathSpec BathSpec::thermal(double gamma0, double n) {
  BathSpec b;
  b.kind = BathKind::thermal;
  b.gamma0 = gamma0;
  b.n = n;
  b.validate();
  return b;
}

BathSpec BathSpec::squeezed(double gamma0, double n_th, double r, double phi) {
  BathSpec b;
  b.kind = BathKind::squeezed_thermal;
  b.gamma0 = gamma0;
  b.n_th = n_th;
  b.r = r;
  b.phi = phi;
  b.validate();
  return b;
}

double BathSpec::occupancy() const {
  if (kind == BathKind::thermal) return n;
  return 0.5 * (std::cosh(2.0 * r) * (2.0 * n_th + 1.0) - 1.0);
}

std::complex<double> BathSpec::anomalous() const {
  if (kind == BathKind::thermal) return {0.0, 0.0};
  return -0.5 * std::sinh(2.0 * r) * (2.0 * n_th + 1.0) * std::polar(1.0, phi);
}

void BathSpec::validate() const {
  if (!(gamma0 > 0.0) || !std::isfinite(gamma0)) throw DomainError("bath: gamma0 must be positive");
  if (!std::isfinite(omega0)) throw DomainError("bath: omega0 must be finite");
  if (kind == BathKind::thermal) {
    if (!(n >= 0.0) || !std::isfinite(n)) throw DomainError("bath: N must be non-negative");
  } else {
    if (!(n_th >= 0.0) || !std::isfinite(n_th)) throw DomainError("bath: N_th must be non-negative");
    if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("bath: r must be non-negative");
    if (!std::isfinite(phi)) throw DomainError("bath: phi must be finite");
  }
}

Matrix asymptotic_covariance(const BathSpec& bath) {
  bath.validate();
  const double diag = bath.occupancy() / 2.0 + 1.0;
  const auto m = bath.anomalous();
  Matrix v(2, 2);
  v << diag + m.real(), m.imag(), m.imag(), diag - m.real();
  return v;
}

GaussianChannel GaussianChannel::identity(int n_modes) {
  if (n_modes < 1) throw DimensionError("GaussianChannel::identity: n_modes must be >= 1");
  const int d = 2 * n_modes;
  return {Matrix::Identity(d, d), Matrix::Zero(d, d)};
}

GaussianChannel thermal_channel(double gamma0, double n, double t) {
  BathSpec::thermal(gamma0, n);  // validates
  require_time(t);
  const double decay = std::exp(-gamma0 * t);
  const Matrix id = Matrix::Identity(2, 2);
  return finish(std::sqrt(decay) * id, (n / 2.0 + 1.0) * (1.0 - decay) * id);
}

GaussianChannel squeezed_channel(double gamma0, double n_th, double r, double phi, double t) {
  const auto bath = BathSpec::squeezed(gamma0, n_th, r, phi);
  require_time(t);
  const double decay = std::exp(-gamma0 * t);
  const Matrix v_inf = asymptotic_covariance(bath);
  if (min_eigenvalue(v_inf) < -kChannelPsdTolerance)
    throw DomainError("squeezed_channel: asymptotic covariance has a negative eigenvalue (|M| > N/2 + 1)");
  // A = e^{-gamma0 t / 2} I so that A V A^T = e^{-gamma0 t} V.
  return finish(std::sqrt(decay) * Matrix::Identity(2, 2), (1.0 - decay) * v_inf);
}

GaussianChannel channel_for(const BathSpec& bath, double t) {
  if (bath.kind == BathKind::thermal) return thermal_channel(bath.gamma0, bath.n, t);
  return squeezed_channel(bath.gamma0, bath.n_th, bath.r, bath.phi, t);
}

CovarianceMatrix apply(const GaussianChannel& ch, const CovarianceMatrix& v) {
  if (ch.a.rows() != v.dim() || ch.a.cols() != v.dim() || ch.b.rows() != v.dim())
    throw DimensionError("apply: channel and state dimensions differ");
  return CovarianceMatrix(symmetrize(ch.a * v.entries() * ch.a.transpose() + ch.b));
}

GaussianChannel extend_local(const GaussianChannel& single, int n_modes) {
  if (n_modes < 1) throw DimensionError("extend_local: n_modes must be >= 1");
  if (single.a.rows() != 2) throw DimensionError("extend_local: expected a single-mode channel");
  return {direct_sum_repeat(single.a, n_modes), direct_sum_repeat(single.b, n_modes)};
}

GaussianChannel extend_local(std::span<const GaussianChannel> per_mode) {
  if (per_mode.empty()) throw DimensionError("extend_local: need at least one mode");
  std::vector<Matrix> as;
  std::vector<Matrix> bs;
  for (const auto& ch : per_mode) {
    if (ch.a.rows() != 2) throw DimensionError("extend_local: expected single-mode channels");
    as.push_back(ch.a);
    bs.push_back(ch.b);
  }
  return {direct_sum(as), direct_sum(bs)};
}

GaussianChannel compose(const GaussianChannel& ch2, const GaussianChannel& ch1) {
  if (ch2.a.rows() != ch1.a.rows()) throw DimensionError("compose: channel dimensions differ");
  return {ch2.a * ch1.a, symmetrize(ch2.a * ch1.b * ch2.a.transpose() + ch2.b)};
}

CovarianceMatrix evolve(const CovarianceMatrix& v0, const BathSpec& bath, double t) {
  return apply(extend_local(channel_for(bath, t), v0.n_modes()), v0);
}

}  // namespace gauss
