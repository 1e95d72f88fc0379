#pragma once

#include <complex>
#include <vector>

#include "gauss/channels.hpp"
#include "gauss/lindblad_kernels.hpp"
#include "gauss/phase_space.hpp"

namespace gauss {

/// Single-mode density matrix on span{|0>, ..., |d-1>}.
class FockDensityMatrix {
 public:
  /// Throws DimensionError for d < 2 or non-square input and KindError when
  /// the matrix is not Hermitian to 1e-12. Stored Hermitian-symmetrized.
  explicit FockDensityMatrix(const ComplexMatrix& entries);

  static FockDensityMatrix vacuum(int dim);
  static FockDensityMatrix number(int dim, int k);
  /// Truncated and renormalized coherent state.
  static FockDensityMatrix coherent(int dim, std::complex<double> alpha);
  /// Truncated and renormalized Gibbs state with mean occupancy `n`.
  static FockDensityMatrix thermal(int dim, double n);
  /// Truncated and renormalized squeezed vacuum S(r e^{i theta})|0>.
  static FockDensityMatrix squeezed_vacuum(int dim, double r, double theta);

  int dim() const { return static_cast<int>(rho_.rows()); }
  const ComplexMatrix& entries() const { return rho_; }
  double trace() const { return rho_.trace().real(); }
  /// Population of the top `levels` number states.
  double top_population(int levels = 1) const;

 private:
  ComplexMatrix rho_;
};

ComplexMatrix lindblad_rhs(const FockDensityMatrix& rho, const BathSpec& bath,
                           bool include_rotation = false);

struct StateMoments {
  std::complex<double> mean_a;  // <a>
  double n_mean = 0.0;          // <a^dag a>
  /// V_qq = 2(<q^2> - <q>^2), V_pp likewise, V_qp = <qp + pq> - 2<q><p>;
  /// vacuum is the identity.
  CovarianceMatrix covariance = CovarianceMatrix::identity(1);
  double mean_q = 0.0;
  double mean_p = 0.0;
};

StateMoments covariance_from_state(const FockDensityMatrix& rho);

inline constexpr int kDefaultFockDim = 40;
inline constexpr double kDefaultStepUnits = 1e-3;     // dt * gamma0
inline constexpr double kMaxStepUnits = 1e-2;
inline constexpr double kInitialHeadroom = 1e-6;      // top two levels at t = 0
inline constexpr double kAbortHeadroom = 1e-4;        // top level during the run

struct IntegrateOptions {
  bool include_rotation = false;
  /// Store every `record_every`-th step (the initial and final states are
  /// always stored).
  int record_every = 100;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<FockDensityMatrix> states;
  std::vector<double> trace_drift;  // |tr rho - 1| at each stored time
  double max_trace_drift = 0.0;     // over every step
};

/// Fixed-step RK4 on the master equation. The step is adjusted to
/// t_final / round(t_final / dt). Throws DomainError for dt outside
/// (0, 1e-2/gamma0] and TruncationError when the headroom monitors trip.
Trajectory integrate(const FockDensityMatrix& rho0, const BathSpec& bath, double t_final,
                     double dt, IntegrateOptions options = {});

/// Second-moment map from the oracle's moments to the model's covariance
/// normalization: V_model = I + scale (V_raw - I). Fixes vacuum and sends the
/// thermal fixed point (2N+1) I to (N/2+1) I at scale 1/4.
inline constexpr double kBridgeScale = 0.25;

CovarianceMatrix bridge_to_model(const CovarianceMatrix& raw, double scale = kBridgeScale);

/// Least-squares fit of the bridge scale from thermal runs started in vacuum
/// (N in {0.25, 0.5, 1}, gamma0 = 1, t in [0, 2]).
double calibrate_bridge_scale(int dim = kDefaultFockDim, double dt = kDefaultStepUnits);

/// Fixed point the oracle actually reaches:
/// [[2N+1+2Re M, 2Im M], [2Im M, 2N+1-2Re M]].
Matrix oracle_asymptotic_covariance(const BathSpec& bath);

}  // namespace gauss
