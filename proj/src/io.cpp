// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "divmax/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace divmax {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& message) {
  throw SolverError(ErrorCode::kParseError, message);
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) parse_fail("expected a JSON object");
  const auto it = obj.find(key);
  if (it == obj.end()) parse_fail(std::string("missing field \"") + key + "\"");
  return *it;
}

double as_number(const json& value, const char* what) {
  if (!value.is_number()) parse_fail(std::string(what) + " must be a number");
  return value.get<double>();
}

int as_int(const json& value, const char* what) {
  if (!value.is_number_integer()) {
    parse_fail(std::string(what) + " must be an integer");
  }
  return value.get<int>();
}

std::string as_string(const json& value, const char* what) {
  if (!value.is_string()) parse_fail(std::string(what) + " must be a string");
  return value.get<std::string>();
}

Vector as_vector(const json& value, const char* what) {
  if (!value.is_array()) parse_fail(std::string(what) + " must be an array");
  Vector out(static_cast<Eigen::Index>(value.size()));
  Eigen::Index i = 0;
  for (const json& entry : value) out[i++] = as_number(entry, what);
  return out;
}

std::vector<std::vector<int>> as_int_lists(const json& value,
                                           const char* what) {
  if (!value.is_array()) {
    parse_fail(std::string(what) + " must be an array of arrays");
  }
  std::vector<std::vector<int>> out;
  out.reserve(value.size());
  for (const json& row : value) {
    if (!row.is_array()) {
      parse_fail(std::string(what) + " must be an array of arrays");
    }
    std::vector<int> entries;
    entries.reserve(row.size());
    for (const json& entry : row) entries.push_back(as_int(entry, what));
    out.push_back(std::move(entries));
  }
  return out;
}

Matrix parse_distances(const json& value) {
  if (!value.is_array() || value.empty()) {
    parse_fail("\"distances\" must be a non-empty array of rows");
  }
  const auto n = static_cast<Eigen::Index>(value.size());
  Matrix dist(n, n);
  Eigen::Index i = 0;
  for (const json& row : value) {
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      parse_fail("\"distances\" row " + std::to_string(i) + " must have " +
                 std::to_string(n) + " entries");
    }
    Eigen::Index j = 0;
    for (const json& entry : row) dist(i, j++) = as_number(entry, "distance");
    ++i;
  }
  return dist;
}

SubmodularObjective parse_objective(const json& value) {
  const std::string type = as_string(field(value, "type"), "objective type");
  if (type == "modular") {
    return SubmodularObjective::modular(
        as_vector(field(value, "weights"), "\"weights\""));
  }
  if (type == "coverage") {
    return SubmodularObjective::coverage(
        as_vector(field(value, "topic_weights"), "\"topic_weights\""),
        as_int_lists(field(value, "covers"), "\"covers\""));
  }
  parse_fail("unknown objective type \"" + type + "\"");
}

ConstraintSpec parse_constraint(const json& value) {
  const std::string type = as_string(field(value, "type"), "constraint type");
  if (type == "uniform") {
    return uniform_constraint(as_int(field(value, "p"), "\"p\""));
  }
  if (type == "partition") {
    auto parts = as_int_lists(field(value, "parts"), "\"parts\"");
    const json& caps_json = field(value, "capacities");
    if (!caps_json.is_array()) parse_fail("\"capacities\" must be an array");
    std::vector<int> capacities;
    capacities.reserve(caps_json.size());
    for (const json& entry : caps_json) {
      capacities.push_back(as_int(entry, "capacity"));
    }
    return partition_constraint(std::move(parts), std::move(capacities));
  }
  parse_fail("unknown constraint type \"" + type + "\"");
}

json objective_to_json(const SubmodularObjective& objective) {
  json out;
  out["type"] = to_string(objective.kind());
  if (objective.kind() == ObjectiveKind::kModular) {
    out["weights"] = std::vector<double>(
        objective.weights().data(),
        objective.weights().data() + objective.weights().size());
  } else {
    out["topic_weights"] = std::vector<double>(
        objective.topic_weights().data(),
        objective.topic_weights().data() + objective.topic_weights().size());
    out["covers"] = objective.covers();
  }
  return out;
}

json constraint_to_json(const ConstraintSpec& constraint) {
  json out;
  out["type"] = to_string(constraint.kind);
  if (constraint.kind == ConstraintKind::kUniform) {
    out["p"] = constraint.p;
  } else {
    out["parts"] = constraint.parts;
    out["capacities"] = constraint.capacities;
  }
  return out;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Instance parse_instance(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    parse_fail(e.what());
  }
  if (!doc.is_object()) parse_fail("instance must be a JSON object");

  Matrix dist = parse_distances(field(doc, "distances"));
  SubmodularObjective objective = parse_objective(field(doc, "objective"));
  const double lambda = as_number(field(doc, "lambda"), "\"lambda\"");
  ConstraintSpec constraint = parse_constraint(field(doc, "constraint"));

  std::vector<std::string> labels;
  if (const auto it = doc.find("labels"); it != doc.end()) {
    if (!it->is_array()) parse_fail("\"labels\" must be an array of strings");
    labels.reserve(it->size());
    for (const json& entry : *it) {
      if (!entry.is_string()) {
        parse_fail("\"labels\" must be an array of strings");
      }
      labels.push_back(entry.get<std::string>());
    }
  }

  return make_instance(validate_semimetric(dist), std::move(objective), lambda,
                       std::move(constraint), std::move(labels));
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

std::string instance_to_json(const Instance& inst) {
  json doc;
  doc["labels"] = inst.labels;
  doc["distances"] = matrix_to_json(inst.metric.dist);
  doc["lambda"] = inst.lambda;
  doc["objective"] = objective_to_json(inst.objective);
  doc["constraint"] = constraint_to_json(inst.constraint);
  return doc.dump(2) + "\n";
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw SolverError(ErrorCode::kPreconditionViolated, "cannot write " + path);
  }
  out << instance_to_json(inst);
}

std::string report_to_json(const SolveReport& report, const Instance& inst) {
  json doc;
  doc["algorithm"] = report.algorithm;
  doc["selected"] = report.selected.members();
  std::vector<std::string> labels;
  labels.reserve(report.selected.members().size());
  for (const int e : report.selected) {
    labels.push_back(inst.labels[static_cast<std::size_t>(e)]);
  }
  doc["selected_labels"] = labels;
  doc["f_value"] = report.f_value;
  doc["distance_sum"] = report.distance_sum;
  doc["objective_value"] = report.objective_value;
  doc["iterations"] = report.iterations;
  doc["alpha"] = report.alpha;
  // The guarantee the algorithm carries: 1/(2α) for greedy, 1/(2α²) for
  // local search, 1 for the exhaustive oracle.
  if (report.algorithm == "greedy") {
    doc["bound"] = 1.0 / (2.0 * report.alpha);
  } else if (report.algorithm == "local_search") {
    doc["bound"] = 1.0 / (2.0 * report.alpha * report.alpha);
  } else {
    doc["bound"] = 1.0;
  }
  doc["truncated"] = report.truncated;
  json trace = json::array();
  for (const TraceStep& step : report.trace) {
    trace.push_back(json{{"added", step.added},
                         {"removed", step.removed},
                         {"value", step.value}});
  }
  doc["trace"] = std::move(trace);
  return doc.dump(2) + "\n";
}

std::string ratio_report_to_json(const RatioReport& report,
                                 const std::string& algorithm, double alpha) {
  json doc;
  doc["algorithm"] = algorithm;
  doc["alpha"] = alpha;
  doc["exact_value"] = report.exact_value;
  doc["heuristic_value"] = report.heuristic_value;
  doc["ratio"] = report.ratio;
  doc["bound"] = report.bound;
  doc["satisfied"] = report.satisfied;
  return doc.dump() + "\n";  // one line per report, JSON-lines friendly
}

std::string bound_check_to_json(const BoundCheck& check) {
  json doc;
  doc["name"] = check.name;
  doc["lhs"] = check.lhs;
  doc["rhs"] = check.rhs;
  doc["margin"] = check.margin;
  doc["holds"] = check.holds;
  doc["skipped"] = check.skipped;
  doc["note"] = check.note;
  return doc.dump() + "\n";  // one line per check, JSON-lines friendly
}

}  // namespace divmax
