#include "gauss/io.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include <fmt/format.h>

#include "gauss/errors.hpp"

namespace gauss {

namespace {

json matrix_array(const Matrix& m) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) arr.push_back(m(i, j));
  return arr;
}

Matrix matrix_from_array(const json& arr, int dim, const char* field) {
  if (!arr.is_array() || arr.size() != static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim))
    throw ParseError(fmt::format("'{}' must be an array of {} numbers", field, dim * dim));
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const auto& x = arr[static_cast<std::size_t>(i * dim + j)];
      if (!x.is_number()) throw ParseError(fmt::format("'{}' entries must be numbers", field));
      m(i, j) = x.get<double>();
    }
  }
  return m;
}

int modes_field(const json& j) {
  if (!j.is_object() || !j.contains("n_modes") || !j["n_modes"].is_number_integer())
    throw ParseError("expected an object with integer 'n_modes'");
  const int k = j["n_modes"].get<int>();
  if (k < 1) throw ParseError("'n_modes' must be >= 1");
  return k;
}

double number_field(const json& j, const char* key, double fallback, bool required) {
  if (!j.contains(key)) {
    if (required) throw ParseError(fmt::format("missing field '{}'", key));
    return fallback;
  }
  if (!j[key].is_number()) throw ParseError(fmt::format("field '{}' must be a number", key));
  return j[key].get<double>();
}

json optional_number(std::optional<double> x) {
  if (x && std::isfinite(*x)) return *x;
  return nullptr;
}

}  // namespace

std::string format_real(double x) { return fmt::format("{:.17g}", x); }

json to_json(const CovarianceMatrix& v) {
  return {{"n_modes", v.n_modes()}, {"entries", matrix_array(v.entries())}};
}

Matrix covariance_entries_from_json(const json& j) {
  const int k = modes_field(j);
  if (!j.contains("entries")) throw ParseError("missing field 'entries'");
  return matrix_from_array(j["entries"], 2 * k, "entries");
}

CovarianceMatrix covariance_from_json(const json& j) {
  try {
    return CovarianceMatrix(covariance_entries_from_json(j));
  } catch (const DimensionError& e) {
    throw ParseError(e.what());
  }
}

json to_json(const BathSpec& bath) {
  json j;
  if (bath.kind == BathKind::thermal) {
    j = {{"kind", "thermal"}, {"gamma0", bath.gamma0}, {"N", bath.n}};
  } else {
    j = {{"kind", "squeezed_thermal"}, {"gamma0", bath.gamma0}, {"N_th", bath.n_th},
         {"r", bath.r}, {"phi", bath.phi}};
  }
  if (bath.omega0 != 0.0) j["omega0"] = bath.omega0;
  return j;
}

BathSpec bath_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ParseError("bath: expected an object with string 'kind'");
  const auto kind = j["kind"].get<std::string>();
  BathSpec bath;
  bath.gamma0 = number_field(j, "gamma0", 1.0, true);
  bath.omega0 = number_field(j, "omega0", 0.0, false);
  if (kind == "thermal") {
    bath.kind = BathKind::thermal;
    bath.n = number_field(j, "N", 0.0, true);
  } else if (kind == "squeezed_thermal") {
    bath.kind = BathKind::squeezed_thermal;
    bath.n_th = number_field(j, "N_th", 0.0, true);
    bath.r = number_field(j, "r", 0.0, true);
    bath.phi = number_field(j, "phi", 0.0, false);
  } else {
    throw ParseError("bath: unknown kind '" + kind + "'");
  }
  try {
    bath.validate();
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  return bath;
}

json to_json(const GaussianChannel& ch) {
  return {{"n_modes", ch.n_modes()}, {"A", matrix_array(ch.a)}, {"B", matrix_array(ch.b)}};
}

GaussianChannel channel_from_json(const json& j) {
  const int k = modes_field(j);
  if (!j.contains("A") || !j.contains("B")) throw ParseError("channel: missing 'A' or 'B'");
  return {matrix_from_array(j["A"], 2 * k, "A"), matrix_from_array(j["B"], 2 * k, "B")};
}

json to_json(const TransitionResult& r) {
  json t = nullptr;
  if (r.kind == TransitionKind::finite || r.kind == TransitionKind::already) t = r.t;
  return {{"kind", std::string(to_string(r.kind))},
          {"t", t},
          {"method", std::string(to_string(r.method))},
          {"bound_time", optional_number(r.bound_time)}};
}

json to_json(const ValidityReport& r) {
  return {{"symmetric", r.symmetric},
          {"physical", r.physical},
          {"min_symplectic_eigenvalue", r.min_symplectic_eigenvalue}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  out << "t,re_a,im_a,n_mean,V_qq,V_pp,V_qp,trace_drift\n";
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const auto m = covariance_from_state(traj.states[i]);
    out << format_real(traj.times[i]) << ',' << format_real(m.mean_a.real()) << ','
        << format_real(m.mean_a.imag()) << ',' << format_real(m.n_mean) << ','
        << format_real(m.covariance(0, 0)) << ',' << format_real(m.covariance(1, 1)) << ','
        << format_real(m.covariance(0, 1)) << ',' << format_real(traj.trace_drift[i]) << '\n';
  }
}

}  // namespace gauss
