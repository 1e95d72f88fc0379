#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gauss/channels.hpp"
#include "gauss/phase_space.hpp"

namespace gauss::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kNegative = 2, kNumerical = 3 };

/// Exactly one of: a covariance JSON file, symmetric-family parameters
/// (n, kx, ky), or a seeded random non-classical state with `random_modes` modes.
struct StateSource {
  std::string file;
  std::vector<double> family;
  int random_modes = 0;
  std::uint64_t seed = 1;

  CovarianceMatrix load() const;
};

struct BathOptions {
  std::string kind = "thermal";
  double gamma0 = 1.0;
  double n = 0.0;
  double n_th = 0.0;
  double r = 0.0;
  double phi = 0.0;
  std::optional<double> temperature;
  std::optional<double> omega0;

  /// With --temperature, N (thermal) or N_th (squeezed) comes from the
  /// Bose-Einstein occupancy 1/(e^{omega0/T} - 1).
  BathSpec build() const;
};

double bose_einstein(double omega0, double temperature);

struct EvolveOptions {
  StateSource state;
  BathOptions bath;
  double t = 1.0;
  int samples = 11;
  std::string out;
};

struct TimesOptions {
  StateSource state;
  BathOptions bath;
  std::optional<double> horizon;
};

struct SweepOptions {
  std::string spec_file;
  std::string out;
  bool serial = false;
};

struct OracleOptions {
  BathOptions bath;
  int dim = 40;
  double t_final = 2.0;
  double dt = 1e-3;
  double alpha_re = 0.0;
  double alpha_im = 0.0;
  double squeeze = 0.0;
  bool rotation = false;
  std::string out;
};

inline constexpr double kOracleTolerance = 1e-3;

int run_validate(const StateSource& state, std::ostream& out, std::ostream& err);
int run_evolve(const EvolveOptions& opts, std::ostream& out, std::ostream& err);
int run_times(const TimesOptions& opts, std::ostream& out, std::ostream& err);
int run_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err);
int run_oracle_check(const OracleOptions& opts, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to the subcommands above; maps exceptions to
/// exit codes (1 parse/usage, 2 validation-negative, 3 numerical abort).
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gauss::cli
