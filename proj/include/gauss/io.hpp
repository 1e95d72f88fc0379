#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "gauss/channels.hpp"
#include "gauss/criteria.hpp"
#include "gauss/fock_oracle.hpp"
#include "gauss/phase_space.hpp"

namespace gauss {

using json = nlohmann::json;

/// Reals in CSV output: 17 significant digits, '.' decimal.
std::string format_real(double x);

/// {"n_modes": k, "entries": [row-major 4k^2 reals]}
json to_json(const CovarianceMatrix& v);
/// Shape-checked but not symmetry-checked, for validation reports.
Matrix covariance_entries_from_json(const json& j);
CovarianceMatrix covariance_from_json(const json& j);

/// {"kind": "thermal", "gamma0", "N"} or
/// {"kind": "squeezed_thermal", "gamma0", "N_th", "r", "phi"}; "omega0" optional.
json to_json(const BathSpec& bath);
BathSpec bath_from_json(const json& j);

/// {"n_modes": k, "A": [...], "B": [...]}
json to_json(const GaussianChannel& ch);
GaussianChannel channel_from_json(const json& j);

/// {"kind", "t", "method", "bound_time"}; absent values are null.
json to_json(const TransitionResult& r);
json to_json(const ValidityReport& r);

/// Throws ParseError on I/O or syntax errors.
json read_json_file(const std::filesystem::path& path);

/// Header: t,re_a,im_a,n_mean,V_qq,V_pp,V_qp,trace_drift
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

}  // namespace gauss
