#include "gauss/fock_oracle.hpp"

#include <cmath>
#include <numbers>

#include "gauss/errors.hpp"

namespace gauss {

using cd = std::complex<double>;

namespace {

FockDensityMatrix from_amplitudes(Eigen::VectorXcd psi) {
  psi /= psi.norm();
  return FockDensityMatrix(psi * psi.adjoint());
}

}  // namespace

FockDensityMatrix::FockDensityMatrix(const ComplexMatrix& entries) {
  if (entries.rows() != entries.cols() || entries.rows() < 2)
    throw DimensionError("FockDensityMatrix: expected a square matrix with dim >= 2");
  if ((entries - entries.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw KindError("FockDensityMatrix: matrix is not Hermitian");
  rho_ = 0.5 * (entries + entries.adjoint());
}

FockDensityMatrix FockDensityMatrix::vacuum(int dim) { return number(dim, 0); }

FockDensityMatrix FockDensityMatrix::number(int dim, int k) {
  if (dim < 2) throw DimensionError("FockDensityMatrix: dim must be >= 2");
  if (k < 0 || k >= dim) throw DomainError("FockDensityMatrix::number: level outside truncation");
  ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
  rho(k, k) = 1.0;
  return FockDensityMatrix(rho);
}

FockDensityMatrix FockDensityMatrix::coherent(int dim, cd alpha) {
  if (dim < 2) throw DimensionError("FockDensityMatrix: dim must be >= 2");
  Eigen::VectorXcd psi(dim);
  psi(0) = 1.0;
  for (int k = 1; k < dim; ++k) psi(k) = psi(k - 1) * alpha / std::sqrt(static_cast<double>(k));
  return from_amplitudes(psi);
}

FockDensityMatrix FockDensityMatrix::thermal(int dim, double n) {
  if (dim < 2) throw DimensionError("FockDensityMatrix: dim must be >= 2");
  if (!(n >= 0.0)) throw DomainError("FockDensityMatrix::thermal: occupancy must be non-negative");
  ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
  const double ratio = n / (n + 1.0);
  double p = 1.0;
  double total = 0.0;
  for (int k = 0; k < dim; ++k) {
    rho(k, k) = p;
    total += p;
    p *= ratio;
  }
  return FockDensityMatrix(rho / total);
}

FockDensityMatrix FockDensityMatrix::squeezed_vacuum(int dim, double r, double theta) {
  if (dim < 2) throw DimensionError("FockDensityMatrix: dim must be >= 2");
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
  const cd ratio = -std::polar(std::tanh(r), theta);
  // c_{2m} = (-e^{i theta} tanh r)^m sqrt((2m)!) / (2^m m!)
  cd c = 1.0;
  for (int m = 0; 2 * m < dim; ++m) {
    psi(2 * m) = c;
    const double k = static_cast<double>(m);
    c *= ratio * std::sqrt((2.0 * k + 1.0) * (2.0 * k + 2.0)) / (2.0 * (k + 1.0));
  }
  return from_amplitudes(psi);
}

double FockDensityMatrix::top_population(int levels) const {
  double sum = 0.0;
  for (int k = std::max(0, dim() - levels); k < dim(); ++k) sum += rho_(k, k).real();
  return sum;
}

ComplexMatrix lindblad_rhs(const FockDensityMatrix& rho, const BathSpec& bath, bool include_rotation) {
  return lindblad_rhs(rho.entries(), bath, include_rotation);
}

StateMoments covariance_from_state(const FockDensityMatrix& state) {
  const auto& rho = state.entries();
  const int d = state.dim();
  cd mean_a{};
  cd mean_a2{};
  double n_mean = 0.0;
  double anti = 0.0;  // <a a^dag> with the truncated operator
  for (int k = 0; k < d; ++k) {
    const double pk = rho(k, k).real();
    n_mean += k * pk;
    if (k + 1 < d) {
      anti += (k + 1) * pk;
      mean_a += std::sqrt(static_cast<double>(k + 1)) * rho(k + 1, k);
    }
    if (k + 2 < d) mean_a2 += std::sqrt(static_cast<double>((k + 1) * (k + 2))) * rho(k + 2, k);
  }
  const double q = std::numbers::sqrt2 * mean_a.real();
  const double p = std::numbers::sqrt2 * mean_a.imag();
  const double q2 = 0.5 * (2.0 * mean_a2.real() + n_mean + anti);
  const double p2 = 0.5 * (n_mean + anti - 2.0 * mean_a2.real());
  const double qp_sym = 2.0 * mean_a2.imag();

  Matrix v(2, 2);
  v(0, 0) = 2.0 * (q2 - q * q);
  v(1, 1) = 2.0 * (p2 - p * p);
  v(0, 1) = v(1, 0) = qp_sym - 2.0 * q * p;
  return {mean_a, n_mean, CovarianceMatrix(v), q, p};
}

Trajectory integrate(const FockDensityMatrix& rho0, const BathSpec& bath, double t_final,
                     double dt, IntegrateOptions options) {
  bath.validate();
  if (!(dt > 0.0) || dt > kMaxStepUnits / bath.gamma0 * (1.0 + 1e-12))
    throw DomainError("integrate: dt must lie in (0, 1e-2/gamma0]");
  if (!(t_final >= 0.0) || !std::isfinite(t_final)) throw DomainError("integrate: t_final must be non-negative");
  if (rho0.top_population(2) >= kInitialHeadroom)
    throw TruncationError("integrate: initial state populates the top two Fock levels", 0.0);
  if (options.record_every < 1) options.record_every = 1;

  const long steps = t_final == 0.0 ? 0 : std::max(1L, std::lround(t_final / dt));
  const double h = steps == 0 ? 0.0 : t_final / static_cast<double>(steps);
  const int d = rho0.dim();

  Trajectory out;
  ComplexMatrix rho = rho0.entries();
  auto record = [&](double t) {
    const double drift = std::abs(rho.trace().real() - 1.0);
    out.times.push_back(t);
    out.states.emplace_back(rho);
    out.trace_drift.push_back(drift);
  };
  record(0.0);
  out.max_trace_drift = out.trace_drift.front();

  ComplexMatrix k1(d, d), k2(d, d), k3(d, d), k4(d, d), tmp(d, d);
  for (long step = 1; step <= steps; ++step) {
    lindblad_rhs_into(rho, bath, options.include_rotation, k1);
    tmp = rho + 0.5 * h * k1;
    lindblad_rhs_into(tmp, bath, options.include_rotation, k2);
    tmp = rho + 0.5 * h * k2;
    lindblad_rhs_into(tmp, bath, options.include_rotation, k3);
    tmp = rho + h * k3;
    lindblad_rhs_into(tmp, bath, options.include_rotation, k4);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    rho = (0.5 * (rho + rho.adjoint())).eval();

    const double t = h * static_cast<double>(step);
    if (rho(d - 1, d - 1).real() > kAbortHeadroom)
      throw TruncationError("integrate: top Fock level population exceeded headroom", t);
    out.max_trace_drift = std::max(out.max_trace_drift, std::abs(rho.trace().real() - 1.0));
    if (step % options.record_every == 0 || step == steps) record(t);
  }
  return out;
}

CovarianceMatrix bridge_to_model(const CovarianceMatrix& raw, double scale) {
  const Matrix id = Matrix::Identity(raw.dim(), raw.dim());
  return CovarianceMatrix(id + scale * (raw.entries() - id));
}

double calibrate_bridge_scale(int dim, double dt) {
  double xy = 0.0;
  double yy = 0.0;
  for (const double n : {0.25, 0.5, 1.0}) {
    const auto bath = BathSpec::thermal(1.0, n);
    const auto traj = integrate(FockDensityMatrix::vacuum(dim), bath, 2.0, dt);
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
      const auto v = covariance_from_state(traj.states[i]).covariance;
      const double model_excess = 0.5 * n * (1.0 - std::exp(-traj.times[i]));
      const double raw_excess = 0.5 * (v(0, 0) + v(1, 1)) - 1.0;
      xy += model_excess * raw_excess;
      yy += raw_excess * raw_excess;
    }
  }
  return xy / yy;
}

Matrix oracle_asymptotic_covariance(const BathSpec& bath) {
  bath.validate();
  const double diag = 2.0 * bath.occupancy() + 1.0;
  const cd m = bath.anomalous();
  Matrix v(2, 2);
  v << diag + 2.0 * m.real(), 2.0 * m.imag(), 2.0 * m.imag(), diag - 2.0 * m.real();
  return v;
}

}  // namespace gauss
