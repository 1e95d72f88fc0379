#pragma once

#include <optional>
#include <string_view>

#include "gauss/channels.hpp"
#include "gauss/phase_space.hpp"

namespace gauss {

/// Two-mode state [[n,0,kx,0],[0,n,0,-ky],[kx,0,n,0],[0,-ky,0,n]].
struct SymmetricTwoModeState {
  double n = 1.0;
  double kx = 0.0;
  double ky = 0.0;

  CovarianceMatrix covariance() const;
  /// n^2 - max(kx, ky)^2 >= 1.
  bool family_bona_fide() const;
  /// Strict test: the minimal symplectic eigenvalue sqrt((n-kmax)(n+kmin)) >= 1.
  bool physical() const;
  /// (n - kx)(n - ky) < 1.
  bool entangled() const;
};

enum class TransitionKind { finite, never, already, horizon_exhausted };
enum class TransitionMethod { closed_form, bisection };

struct TransitionResult {
  TransitionKind kind = TransitionKind::never;
  double t = 0.0;  // meaningful for finite and already
  TransitionMethod method = TransitionMethod::closed_form;
  std::optional<double> bound_time;
};

std::string_view to_string(TransitionKind kind);
std::string_view to_string(TransitionMethod method);

/// How a transition time is solved for. `automatic` uses the closed form where
/// it is exact (thermal baths) and bisection otherwise.
enum class Route { automatic, bisection };

inline constexpr int kScanSamples = 1024;
inline constexpr double kBisectionTolerance = 1e-10;  // in units of 1/gamma0
inline constexpr double kHorizonUnits = 50.0;         // default horizon, 1/gamma0

double default_horizon(const BathSpec& bath);

/// First time V(t) >= I under identical local baths on every mode.
///
/// Thermal baths shift every eigenvalue identically, so the smallest
/// eigenvalue follows e^{-g t} n0 + (N/2+1)(1 - e^{-g t}) and the crossing has
/// a closed form. Squeezed baths rotate the eigenvectors; the crossing is found
/// by a kScanSamples-point scan of [0, horizon] and bisection, with the
/// Weyl-type closed form reported only as `bound_time`.
///
/// Throws KindError for unphysical `v0`, DomainError for a non-positive horizon.
TransitionResult classicality_time(const CovarianceMatrix& v0, const BathSpec& bath,
                                   std::optional<double> horizon = std::nullopt,
                                   Route route = Route::automatic);

/// Upper bound -ln(N/(N+2))/gamma0 on the thermal classicality time over all
/// initial states; +infinity at N = 0.
double t_max(double gamma0, double n);

/// Flips the momentum of the last mode (p_n -> -p_n).
Matrix partial_transpose(const Matrix& v);

/// Smallest symplectic eigenvalue of the partially transposed covariance.
double ppt_min_symplectic_eigenvalue(const CovarianceMatrix& v);

/// PPT test for two-mode states. Throws DimensionError for other mode counts
/// and KindError for unphysical states.
bool is_separable_two_mode(const CovarianceMatrix& v);

/// First time a two-mode state becomes separable (PPT) under identical local
/// baths, by scan and bisection.
TransitionResult esd_time(const CovarianceMatrix& v0, const BathSpec& bath,
                          std::optional<double> horizon = std::nullopt);

/// ESD time for the symmetric family. Thermal baths with kx == ky use the
/// closed form n(t) - k(t) = (N/2+1) + (n-k-N/2-1) e^{-g t}; everything else
/// goes through esd_time(). Non-entangled input returns `already`.
TransitionResult esd_time_symmetric(const SymmetricTwoModeState& s, const BathSpec& bath,
                                    std::optional<double> horizon = std::nullopt);

/// Weyl-type closed-form classicality time for a squeezed bath:
/// -ln((N-2|M|)/(N+2-2|M|-2 n0))/gamma0, or nullopt when N/2+1-|M| < 1 or the
/// log argument lies outside (0, 1]. An upper bound on the true first crossing.
/// Throws KindError for thermal baths and DomainError for n0 >= 1.
std::optional<double> squeezed_classicality_bound(double n0, const BathSpec& bath);

}  // namespace gauss
