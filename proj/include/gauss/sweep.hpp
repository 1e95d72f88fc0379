#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gauss/channels.hpp"
#include "gauss/criteria.hpp"
#include "gauss/io.hpp"

namespace gauss {

struct GridAxis {
  std::string name;
  double start = 0.0;
  double stop = 0.0;
  int count = 0;
  bool log_scale = false;

  std::vector<double> values() const;
};

/// Initial-state template for a sweep. `family` sweeps n, kx, ky; `squeezed`
/// is diag(s, 1/s) on the first mode and vacuum elsewhere, so its smallest
/// eigenvalue is s; `covariance` is fixed.
struct StateTemplate {
  enum class Kind { family, squeezed, covariance } kind = Kind::family;
  SymmetricTwoModeState family;
  double s = 0.5;
  int n_modes = 2;
  std::optional<CovarianceMatrix> covariance;
};

struct SweepSpec {
  BathSpec bath;
  StateTemplate state;
  std::vector<GridAxis> grid;
  /// Any of t_c, t_esd, t_max, bound_time, n_min0, min_eigenvalue.
  std::vector<std::string> outputs{"t_c", "t_esd", "t_max"};
  /// Sample times for the min_eigenvalue output.
  std::vector<double> times;
  std::optional<double> horizon;

  /// Throws ParseError for unknown names, count < 2, bad scales.
  static SweepSpec from_json(const json& j);
  void validate() const;
};

struct SweepRow {
  std::vector<double> coords;
  std::vector<std::string> cells;
};

/// Cartesian product of the axes, evaluated point by point with OpenMP; rows
/// are sorted lexicographically by coordinates.
std::vector<SweepRow> evaluate_sweep(const SweepSpec& spec);

/// Same contract, one thread, no OpenMP. Kept as the reference for tests.
std::vector<SweepRow> evaluate_sweep_serial(const SweepSpec& spec);

std::vector<std::string> sweep_header(const SweepSpec& spec);
std::string sweep_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows);

}  // namespace gauss
