#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tspdisk/objective.hpp"
#include "tspdisk/selection.hpp"

namespace tspdisk {

/// One linear row: sum of coef * var {<=,>=,=} rhs.
struct IlpRow {
  std::string name;
  std::vector<std::pair<long long, int>> terms;  // (coefficient, var index)
  char sense = '=';                              // '<', '>', or '='
  long long rhs = 0;
};

/// The 0/1 program for C1, C2, C3 and C5 over a candidate complex.
/// C4 (tree) is deliberately not present as rows; consumers must enforce
/// it separately and validate_external audits it.
struct IlpModel {
  int n = 0;
  std::vector<std::string> var_names;
  std::map<std::string, int> var_index;
  std::vector<std::pair<long long, int>> objective;  // maximize
  std::vector<IlpRow> rows;
};

std::string var_name_x(const Tri& t);
std::string var_name_y(const Edge& e);
std::string var_name_z(const Tri& t, const Edge& e);

IlpModel build_ilp(const Instance& inst, const Complex& cx);

/// LP text: MAXIMIZE / SUBJECT TO / BINARY sections, deterministic row
/// order, header comment documenting the C4 gap.
std::string emit_lp(const Instance& inst, const Complex& cx);

struct RowEvaluation {
  bool all_satisfied = true;
  std::vector<std::string> violated_rows;
  long long objective_value = 0;
};

/// Checks every row of the model under a complete 0/1 assignment.
RowEvaluation evaluate_rows(const IlpModel& model,
                            const std::map<std::string, int>& assignment);

/// The model assignment corresponding to a Selection.
std::map<std::string, int> assignment_from_selection(const Selection& sel);

struct ValidationResult {
  Verdict verdict;
  std::optional<Tour> tour;
  ObjectiveBreakdown objective;
};

/// Reconstructs a (possibly non-canonical) Selection from an external
/// solver assignment, runs the full admissibility check including C4,
/// and decodes/evaluates on success.
ValidationResult validate_external(const std::map<std::string, int>& assignment,
                                   const Instance& inst, const Complex& cx);

/// "varname value" lines, or a JSON object mapping names to 0/1.
std::map<std::string, int> parse_assignment(const std::string& text);

std::string validation_to_json(const ValidationResult& r);

}  // namespace tspdisk
