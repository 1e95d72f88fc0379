#include "gauss/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "gauss/errors.hpp"

namespace gauss {

namespace {

const std::set<std::string> kOutputs{"t_c", "t_esd", "t_max", "bound_time", "n_min0", "min_eigenvalue"};

bool is_bath_param(const BathSpec& bath, const std::string& name) {
  if (name == "gamma0") return true;
  if (bath.kind == BathKind::thermal) return name == "N";
  return name == "N_th" || name == "r" || name == "phi";
}

bool is_state_param(const StateTemplate& st, const std::string& name) {
  switch (st.kind) {
    case StateTemplate::Kind::family: return name == "n" || name == "kx" || name == "ky";
    case StateTemplate::Kind::squeezed: return name == "s";
    case StateTemplate::Kind::covariance: return false;
  }
  return false;
}

void set_param(BathSpec& bath, StateTemplate& st, const std::string& name, double x) {
  if (name == "gamma0") bath.gamma0 = x;
  else if (name == "N") bath.n = x;
  else if (name == "N_th") bath.n_th = x;
  else if (name == "r") bath.r = x;
  else if (name == "phi") bath.phi = x;
  else if (name == "n") st.family.n = x;
  else if (name == "kx") st.family.kx = x;
  else if (name == "ky") st.family.ky = x;
  else if (name == "s") st.s = x;
}

CovarianceMatrix build_state(const StateTemplate& st) {
  switch (st.kind) {
    case StateTemplate::Kind::family: return st.family.covariance();
    case StateTemplate::Kind::squeezed: {
      if (!(st.s > 0.0)) throw DomainError("squeezed state: s must be positive");
      Matrix v = Matrix::Identity(2 * st.n_modes, 2 * st.n_modes);
      v(0, 0) = st.s;
      v(1, 1) = 1.0 / st.s;
      return CovarianceMatrix(v);
    }
    case StateTemplate::Kind::covariance: return *st.covariance;
  }
  throw DomainError("unknown state kind");
}

std::string transition_cell(const TransitionResult& r) {
  switch (r.kind) {
    case TransitionKind::finite: return format_real(r.t);
    case TransitionKind::already: return format_real(0.0);
    default: return std::string(to_string(r.kind));
  }
}

std::string time_cell(std::optional<double> t) {
  if (!t) return "none";
  if (std::isinf(*t)) return "inf";
  return format_real(*t);
}

std::vector<std::vector<double>> grid_points(const SweepSpec& spec) {
  std::vector<std::vector<double>> points{{}};
  for (const auto& axis : spec.grid) {
    std::vector<std::vector<double>> next;
    for (const auto& prefix : points) {
      for (double x : axis.values()) {
        auto p = prefix;
        p.push_back(x);
        next.push_back(std::move(p));
      }
    }
    points = std::move(next);
  }
  return points;
}

SweepRow evaluate_point(const SweepSpec& spec, const std::vector<double>& coords) {
  BathSpec bath = spec.bath;
  StateTemplate st = spec.state;
  for (std::size_t i = 0; i < coords.size(); ++i) set_param(bath, st, spec.grid[i].name, coords[i]);

  SweepRow row;
  row.coords = coords;
  std::optional<CovarianceMatrix> v0;
  try {
    bath.validate();
    v0 = build_state(st);
  } catch (const std::exception&) {
  }

  for (const auto& out : spec.outputs) {
    const std::size_t before = row.cells.size();
    const std::size_t width = out == "min_eigenvalue" ? spec.times.size() : 1;
    try {
      if (!v0) throw DomainError("invalid grid point");
      if (out == "t_c") {
        row.cells.push_back(transition_cell(classicality_time(*v0, bath, spec.horizon)));
      } else if (out == "t_esd") {
        if (v0->n_modes() != 2) {
          row.cells.emplace_back("n/a");
        } else if (st.kind == StateTemplate::Kind::family) {
          row.cells.push_back(transition_cell(esd_time_symmetric(st.family, bath, spec.horizon)));
        } else {
          row.cells.push_back(transition_cell(esd_time(*v0, bath, spec.horizon)));
        }
      } else if (out == "t_max") {
        row.cells.push_back(bath.kind == BathKind::thermal ? time_cell(t_max(bath.gamma0, bath.n)) : "n/a");
      } else if (out == "bound_time") {
        const double n0 = min_eigenvalue(*v0);
        if (n0 >= 1.0) {
          row.cells.emplace_back("none");
        } else if (bath.kind == BathKind::squeezed_thermal) {
          row.cells.push_back(time_cell(squeezed_classicality_bound(n0, bath)));
        } else {
          row.cells.push_back(time_cell(classicality_time(*v0, bath, spec.horizon).bound_time));
        }
      } else if (out == "n_min0") {
        row.cells.push_back(format_real(min_eigenvalue(*v0)));
      } else if (out == "min_eigenvalue") {
        for (double t : spec.times) row.cells.push_back(format_real(min_eigenvalue(evolve(*v0, bath, t))));
      }
    } catch (const std::exception&) {
      row.cells.resize(before);
      row.cells.resize(before + width, "error");
    }
  }
  return row;
}

void sort_rows(std::vector<SweepRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const SweepRow& a, const SweepRow& b) { return a.coords < b.coords; });
}

}  // namespace

std::vector<double> GridAxis::values() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(count - 1);
    out.push_back(log_scale ? std::exp(std::log(start) + f * (std::log(stop) - std::log(start)))
                            : start + f * (stop - start));
  }
  return out;
}

void SweepSpec::validate() const {
  if (grid.empty()) throw ParseError("sweep: grid must have at least one axis");
  std::set<std::string> seen;
  for (const auto& axis : grid) {
    if (!is_bath_param(bath, axis.name) && !is_state_param(state, axis.name))
      throw ParseError("sweep: unknown swept parameter '" + axis.name + "'");
    if (!seen.insert(axis.name).second) throw ParseError("sweep: parameter '" + axis.name + "' swept twice");
    if (axis.count < 2) throw ParseError("sweep: axis '" + axis.name + "' needs count >= 2");
    if (!std::isfinite(axis.start) || !std::isfinite(axis.stop))
      throw ParseError("sweep: axis '" + axis.name + "' has non-finite bounds");
    if (axis.log_scale && !(axis.start > 0.0 && axis.stop > 0.0))
      throw ParseError("sweep: log axis '" + axis.name + "' needs positive bounds");
  }
  for (const auto& out : outputs)
    if (!kOutputs.contains(out)) throw ParseError("sweep: unknown output '" + out + "'");
  const bool wants_trajectory = std::find(outputs.begin(), outputs.end(), "min_eigenvalue") != outputs.end();
  if (wants_trajectory && times.empty()) throw ParseError("sweep: min_eigenvalue output needs 'times'");
  if (horizon && !(*horizon > 0.0)) throw ParseError("sweep: horizon must be positive");
}

SweepSpec SweepSpec::from_json(const json& j) {
  if (!j.is_object()) throw ParseError("sweep: expected a JSON object");
  SweepSpec spec;
  if (!j.contains("bath")) throw ParseError("sweep: missing 'bath'");
  spec.bath = bath_from_json(j["bath"]);

  if (!j.contains("state") || !j["state"].is_object()) throw ParseError("sweep: missing 'state' object");
  const auto& st = j["state"];
  const auto kind = st.value("kind", std::string("family"));
  try {
    if (kind == "family") {
      spec.state.kind = StateTemplate::Kind::family;
      spec.state.family = {st.at("n").get<double>(), st.value("kx", 0.0), st.value("ky", st.value("kx", 0.0))};
    } else if (kind == "squeezed") {
      spec.state.kind = StateTemplate::Kind::squeezed;
      spec.state.s = st.at("s").get<double>();
      spec.state.n_modes = st.value("n_modes", 2);
      if (spec.state.n_modes < 1) throw ParseError("sweep: n_modes must be >= 1");
    } else if (kind == "covariance") {
      spec.state.kind = StateTemplate::Kind::covariance;
      spec.state.covariance = covariance_from_json(st.at("covariance"));
    } else {
      throw ParseError("sweep: unknown state kind '" + kind + "'");
    }

    if (!j.contains("grid") || !j["grid"].is_array()) throw ParseError("sweep: missing 'grid' array");
    for (const auto& a : j["grid"]) {
      GridAxis axis;
      axis.name = a.at("name").get<std::string>();
      axis.start = a.at("start").get<double>();
      axis.stop = a.at("stop").get<double>();
      axis.count = a.at("count").get<int>();
      const auto scale = a.value("scale", std::string("linear"));
      if (scale != "linear" && scale != "log") throw ParseError("sweep: scale must be linear or log");
      axis.log_scale = scale == "log";
      spec.grid.push_back(axis);
    }
    if (j.contains("outputs")) spec.outputs = j["outputs"].get<std::vector<std::string>>();
    if (j.contains("times")) spec.times = j["times"].get<std::vector<double>>();
    if (j.contains("horizon")) spec.horizon = j["horizon"].get<double>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("sweep: ") + e.what());
  }
  spec.validate();
  return spec;
}

std::vector<SweepRow> evaluate_sweep(const SweepSpec& spec) {
  spec.validate();
  const auto points = grid_points(spec);
  std::vector<SweepRow> rows(points.size());
  const long count = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) rows[static_cast<std::size_t>(i)] = evaluate_point(spec, points[static_cast<std::size_t>(i)]);
  sort_rows(rows);
  return rows;
}

std::vector<SweepRow> evaluate_sweep_serial(const SweepSpec& spec) {
  spec.validate();
  std::vector<SweepRow> rows;
  for (const auto& p : grid_points(spec)) rows.push_back(evaluate_point(spec, p));
  sort_rows(rows);
  return rows;
}

std::vector<std::string> sweep_header(const SweepSpec& spec) {
  std::vector<std::string> header;
  for (const auto& axis : spec.grid) header.push_back(axis.name);
  for (const auto& out : spec.outputs) {
    if (out == "min_eigenvalue") {
      for (double t : spec.times) header.push_back("min_eig@" + format_real(t));
    } else {
      header.push_back(out);
    }
  }
  return header;
}

std::string sweep_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  const auto header = sweep_header(spec);
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (const auto& row : rows) {
    bool first = true;
    for (double c : row.coords) {
      out << (first ? "" : ",") << format_real(c);
      first = false;
    }
    for (const auto& cell : row.cells) out << ',' << cell;
    out << '\n';
  }
  return out.str();
}

}  // namespace gauss
