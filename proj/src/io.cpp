#include "maxplus/io.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace maxplus::io {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;
using scheduling::Feasibility;
using scheduling::ScheduleResult;

double round12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

const char* feasibility_token(Feasibility f) {
  switch (f) {
    case Feasibility::exact:
      return "exact";
    case Feasibility::approximate:
      return "approximate";
    case Feasibility::family:
      return "family";
  }
  return "?";
}

Feasibility feasibility_from_token(const std::string& s) {
  if (s == "exact") return Feasibility::exact;
  if (s == "approximate") return Feasibility::approximate;
  if (s == "family") return Feasibility::family;
  throw ParseError("result.feasibility: unknown value '" + s + "'");
}

ordered_json optional_scalar(const std::optional<TropScalar>& s) {
  return s ? scalar_to_json(*s) : ordered_json(nullptr);
}

std::optional<TropScalar> optional_scalar_from(const json& j, const std::string& field) {
  if (!j.contains(field) || j.at(field).is_null()) return std::nullopt;
  return scalar_from_json(j.at(field), field);
}

std::string format_vector(const TropVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += scalar_to_display(v[i]);
  }
  return out + ")";
}

}  // namespace

std::string scalar_to_display(TropScalar s) {
  if (s.is_zero()) return "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", s.value());
  return buf;
}

ordered_json scalar_to_json(TropScalar s) {
  if (s.is_zero()) return nullptr;
  return round12(s.value());
}

TropScalar scalar_from_json(const json& j, const std::string& field) {
  if (j.is_null()) return TropScalar::zero();
  if (!j.is_number()) throw ValidationError(field + ": expected number or null");
  return TropScalar(j.get<double>());
}

ordered_json vector_to_json(const TropVector& v) {
  ordered_json out = ordered_json::array();
  for (const auto& e : v) out.push_back(scalar_to_json(e));
  return out;
}

TropVector vector_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty())
    throw ValidationError(field + ": expected a non-empty array");
  TropVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    v[i] = scalar_from_json(j[i], field + "[" + std::to_string(i) + "]");
  return v;
}

ordered_json matrix_to_json(const TropMatrix& m) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
  return out;
}

TropMatrix matrix_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty())
    throw ValidationError(field + ": expected a non-empty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) throw ValidationError(field + "[0]: expected a non-empty row");
  TropMatrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string row_field = field + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != cols)
      throw ValidationError(row_field + ": rows must all have length " +
                            std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c)
      m(i, c) = scalar_from_json(j[i][c], row_field + "[" + std::to_string(c) + "]");
  }
  return m;
}

ProblemFile parse_problem(const json& doc) {
  if (!doc.is_object()) throw ValidationError("document: expected a JSON object");
  ProblemFile out;

  if (doc.contains("version")) {
    if (!doc.at("version").is_string())
      throw ValidationError("version: expected a string");
    out.version = doc.at("version").get<std::string>();
    if (out.version != "1")
      throw ValidationError("version: unsupported value '" + out.version + "'");
  }

  if (!doc.contains("problem") || !doc.at("problem").is_object())
    throw ValidationError("problem: missing object");
  const json& p = doc.at("problem");

  auto& prob = out.problem;
  if (p.contains("sf")) prob.sf = matrix_from_json(p.at("sf"), "problem.sf");
  if (p.contains("ss")) prob.ss = matrix_from_json(p.at("ss"), "problem.ss");
  if (p.contains("due")) prob.due = vector_from_json(p.at("due"), "problem.due");
  if (p.contains("early")) prob.early = vector_from_json(p.at("early"), "problem.early");

  if (p.contains("objective")) {
    if (!p.at("objective").is_string())
      throw ValidationError("problem.objective: expected a string");
    const auto obj = scheduling::objective_from_string(p.at("objective").get<std::string>());
    if (!obj)
      throw ValidationError("problem.objective: unknown value '" +
                            p.at("objective").get<std::string>() + "'");
    prob.objective = *obj;
    out.declared_objective = *obj;
  }

  if (prob.sf)
    prob.n_activities = prob.sf->rows();
  else if (prob.ss)
    prob.n_activities = prob.ss->rows();

  if (doc.contains("options")) {
    const json& o = doc.at("options");
    if (!o.is_object()) throw ValidationError("options: expected an object");
    if (o.contains("tolerance")) {
      if (!o.at("tolerance").is_number() || o.at("tolerance").get<double>() < 0)
        throw ValidationError("options.tolerance: expected a nonnegative number");
      out.options.tolerance = o.at("tolerance").get<double>();
    }
    if (o.contains("output")) {
      const std::string mode = o.at("output").is_string()
                                   ? o.at("output").get<std::string>()
                                   : std::string();
      if (mode == "human")
        out.options.output = OutputMode::human;
      else if (mode == "machine")
        out.options.output = OutputMode::machine;
      else
        throw ValidationError("options.output: expected \"human\" or \"machine\"");
    }
  }
  return out;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return parse_problem(doc);
}

ordered_json result_to_json(const ScheduleResult& r) {
  ordered_json out;
  out["feasibility"] = feasibility_token(r.feasibility);
  out["initiation"] = vector_to_json(r.initiation);
  out["completion"] = r.completion ? vector_to_json(*r.completion) : ordered_json(nullptr);

  ordered_json diag;
  diag["delta"] = optional_scalar(r.diagnostics.delta);
  diag["big_trace"] = optional_scalar(r.diagnostics.big_trace);
  diag["lambda"] = optional_scalar(r.diagnostics.lambda);
  out["diagnostics"] = diag;

  if (r.band) {
    ordered_json band;
    band["x0"] = vector_to_json(r.band->quasi);
    band["x1"] = vector_to_json(r.band->under);
    band["x2"] = vector_to_json(r.band->over);
    band["y0"] = vector_to_json(r.band->quasi_image);
    band["y1"] = vector_to_json(r.band->under_image);
    band["y2"] = vector_to_json(r.band->over_image);
    out["band"] = band;
  } else {
    out["band"] = nullptr;
  }

  out["particular"] = r.particular ? vector_to_json(*r.particular) : ordered_json(nullptr);
  out["generators"] = r.generators ? matrix_to_json(*r.generators) : ordered_json(nullptr);
  return out;
}

ScheduleResult result_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("result: expected a JSON object");
  ScheduleResult r;
  r.feasibility = feasibility_from_token(j.at("feasibility").get<std::string>());
  r.initiation = vector_from_json(j.at("initiation"), "result.initiation");
  if (j.contains("completion") && !j.at("completion").is_null())
    r.completion = vector_from_json(j.at("completion"), "result.completion");
  if (j.contains("diagnostics")) {
    const json& d = j.at("diagnostics");
    r.diagnostics.delta = optional_scalar_from(d, "delta");
    r.diagnostics.big_trace = optional_scalar_from(d, "big_trace");
    r.diagnostics.lambda = optional_scalar_from(d, "lambda");
  }
  if (j.contains("band") && !j.at("band").is_null()) {
    const json& b = j.at("band");
    r.band = scheduling::ApproximateBand{
        vector_from_json(b.at("x0"), "band.x0"), vector_from_json(b.at("x1"), "band.x1"),
        vector_from_json(b.at("x2"), "band.x2"), vector_from_json(b.at("y0"), "band.y0"),
        vector_from_json(b.at("y1"), "band.y1"), vector_from_json(b.at("y2"), "band.y2")};
  }
  if (j.contains("particular") && !j.at("particular").is_null())
    r.particular = vector_from_json(j.at("particular"), "result.particular");
  if (j.contains("generators") && !j.at("generators").is_null())
    r.generators = matrix_from_json(j.at("generators"), "result.generators");
  return r;
}

std::string emit(const ScheduleResult& r, OutputMode mode) {
  if (mode == OutputMode::machine) return result_to_json(r).dump() + "\n";

  std::ostringstream out;
  out << "feasibility: " << feasibility_token(r.feasibility) << "\n";
  if (r.diagnostics.delta)
    out << "delta: " << scalar_to_display(*r.diagnostics.delta) << "\n";
  if (r.diagnostics.big_trace)
    out << "big-trace: " << scalar_to_display(*r.diagnostics.big_trace) << "\n";
  if (r.diagnostics.lambda)
    out << "lambda: " << scalar_to_display(*r.diagnostics.lambda) << "\n";

  out << "x = " << format_vector(r.initiation) << "\n";
  if (r.completion) out << "y = " << format_vector(*r.completion) << "\n";

  if (r.band) {
    out << "quasi: x0 = " << format_vector(r.band->quasi)
        << "  y0 = " << format_vector(r.band->quasi_image) << "\n";
    out << "under: x1 = " << format_vector(r.band->under)
        << "  y1 = " << format_vector(r.band->under_image) << "\n";
    out << "over:  x2 = " << format_vector(r.band->over)
        << "  y2 = " << format_vector(r.band->over_image) << "\n";
    out << "due-date band: y1 <= d' <= y2, minimum deviation at d' = y0\n";
  }

  if (r.feasibility == Feasibility::family) {
    if (r.particular) out << "particular = " << format_vector(*r.particular) << "\n";
    if (r.generators && r.generators->cols() > 0) {
      out << "generators:\n";
      for (std::size_t i = 0; i < r.generators->rows(); ++i)
        out << "  " << format_vector(r.generators->row(i)) << "\n";
    } else {
      out << "family: none\n";
    }
  }

  // Per-activity table; flow = finish - start where both are finite.
  std::vector<std::array<std::string, 4>> rows;
  rows.push_back({"activity", "start", "finish", "flow"});
  for (std::size_t i = 0; i < r.initiation.size(); ++i) {
    std::array<std::string, 4> row;
    row[0] = std::to_string(i + 1);
    row[1] = scalar_to_display(r.initiation[i]);
    if (r.completion) {
      const TropScalar f = (*r.completion)[i];
      row[2] = scalar_to_display(f);
      row[3] = (f.is_zero() || r.initiation[i].is_zero())
                   ? "-"
                   : scalar_to_display(TropScalar(f.value() - r.initiation[i].value()));
    } else {
      row[2] = "-";
      row[3] = "-";
    }
    rows.push_back(row);
  }
  std::array<std::size_t, 4> width{};
  for (const auto& row : rows)
    for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], row[c].size());
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < 4; ++c) {
      out << (c ? "  " : "");
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace maxplus::io
