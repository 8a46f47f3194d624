#pragma once

#include <string>

#include <json.hpp>

#include "maxplus/scheduling.hpp"

namespace maxplus::io {

enum class OutputMode { human, machine };

struct Options {
  double tolerance = kDefaultTolerance;
  OutputMode output = OutputMode::human;
};

/// A parsed problem document: {"version", "problem": {...}, "options": {...}}.
struct ProblemFile {
  std::string version = "1";
  scheduling::ProjectProblem problem;
  std::optional<scheduling::Objective> declared_objective;
  Options options;
};

/// In files the semiring zero is the JSON literal null; finite scalars are
/// JSON numbers rounded to at most 12 significant digits.
nlohmann::ordered_json scalar_to_json(TropScalar s);
TropScalar scalar_from_json(const nlohmann::json& j, const std::string& field);

nlohmann::ordered_json vector_to_json(const TropVector& v);
TropVector vector_from_json(const nlohmann::json& j, const std::string& field);

nlohmann::ordered_json matrix_to_json(const TropMatrix& m);
TropMatrix matrix_from_json(const nlohmann::json& j, const std::string& field);

/// Throws ParseError on malformed JSON, ValidationError naming the field
/// on a well-formed but invalid document.
ProblemFile parse_problem(const nlohmann::json& doc);
ProblemFile load_problem(const std::string& path);

nlohmann::ordered_json result_to_json(const scheduling::ScheduleResult& r);
scheduling::ScheduleResult result_from_json(const nlohmann::json& j);

/// Machine mode: the result document, newline-terminated, byte-stable.
/// Human mode: a readable summary plus the per-activity table.
std::string emit(const scheduling::ScheduleResult& r, OutputMode mode);

/// "-inf" for the zero, trimmed decimal otherwise (CLI display form).
std::string scalar_to_display(TropScalar s);

}  // namespace maxplus::io
