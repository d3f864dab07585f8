#include "tspdisk/ilp.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

namespace tspdisk {

std::string var_name_x(const Tri& t) {
  return "x_" + std::to_string(t.a) + "_" + std::to_string(t.b) + "_" +
         std::to_string(t.c);
}

std::string var_name_y(const Edge& e) {
  return "y_" + std::to_string(e.u) + "_" + std::to_string(e.v);
}

std::string var_name_z(const Tri& t, const Edge& e) {
  return "z_" + std::to_string(t.a) + "_" + std::to_string(t.b) + "_" +
         std::to_string(t.c) + "__" + std::to_string(e.u) + "_" +
         std::to_string(e.v);
}

IlpModel build_ilp(const Instance& inst, const Complex& cx) {
  if (cx.n() != inst.n()) throw Error("complex and instance disagree on n");
  const int n = cx.n();
  IlpModel model;
  model.n = n;
  auto add_var = [&](const std::string& name) {
    model.var_index[name] = static_cast<int>(model.var_names.size());
    model.var_names.push_back(name);
    return model.var_index[name];
  };

  std::vector<int> xvar(cx.num_candidates());
  std::vector<int> yvar(cx.num_edges());
  std::vector<std::array<int, 3>> zvar(cx.num_candidates());
  for (int p = 0; p < cx.num_candidates(); ++p)
    xvar[p] = add_var(var_name_x(cx.candidate(p)));
  for (int r = 0; r < cx.num_edges(); ++r)
    yvar[r] = add_var(var_name_y(edge_unrank(r)));
  for (int p = 0; p < cx.num_candidates(); ++p) {
    const auto& ranks = cx.candidate_edge_ranks(p);
    for (int s = 0; s < 3; ++s)
      zvar[p][s] = add_var(var_name_z(cx.candidate(p), edge_unrank(ranks[s])));
  }

  // objective: sum z L_e - sum 2 L_e y
  for (int p = 0; p < cx.num_candidates(); ++p) {
    const auto& ranks = cx.candidate_edge_ranks(p);
    for (int s = 0; s < 3; ++s)
      model.objective.push_back({edge_length(inst, edge_unrank(ranks[s])), zvar[p][s]});
  }
  for (int r = 0; r < cx.num_edges(); ++r)
    model.objective.push_back({-2 * edge_length(inst, edge_unrank(r)), yvar[r]});

  // C1: z <= y, z <= x, sum_e z = 3x per triangle
  for (int p = 0; p < cx.num_candidates(); ++p) {
    const Tri& t = cx.candidate(p);
    const auto& ranks = cx.candidate_edge_ranks(p);
    for (int s = 0; s < 3; ++s) {
      const Edge e = edge_unrank(ranks[s]);
      model.rows.push_back({"c1_zy_" + var_name_z(t, e).substr(2),
                            {{1, zvar[p][s]}, {-1, yvar[ranks[s]]}},
                            '<',
                            0});
      model.rows.push_back({"c1_zx_" + var_name_z(t, e).substr(2),
                            {{1, zvar[p][s]}, {-1, xvar[p]}},
                            '<',
                            0});
    }
    IlpRow deg{"c1_deg_" + var_name_x(t).substr(2), {}, '=', 0};
    for (int s = 0; s < 3; ++s) deg.terms.push_back({1, zvar[p][s]});
    deg.terms.push_back({-3, xvar[p]});
    model.rows.push_back(std::move(deg));
  }

  // C2: y_e <= sum z <= 2 y_e per edge
  for (int r = 0; r < cx.num_edges(); ++r) {
    const Edge e = edge_unrank(r);
    IlpRow lo{"c2_lo_" + var_name_y(e).substr(2), {}, '>', 0};
    IlpRow hi{"c2_hi_" + var_name_y(e).substr(2), {}, '<', 0};
    for (int p : cx.tris_of_edge(r)) {
      const auto& ranks = cx.candidate_edge_ranks(p);
      for (int s = 0; s < 3; ++s)
        if (ranks[s] == r) {
          lo.terms.push_back({1, zvar[p][s]});
          hi.terms.push_back({1, zvar[p][s]});
        }
    }
    lo.terms.push_back({-1, yvar[r]});
    hi.terms.push_back({-2, yvar[r]});
    model.rows.push_back(std::move(lo));
    model.rows.push_back(std::move(hi));
  }

  // C3: global disk cardinalities
  {
    IlpRow tris{"c3_triangles", {}, '=', n - 2};
    for (int p = 0; p < cx.num_candidates(); ++p) tris.terms.push_back({1, xvar[p]});
    model.rows.push_back(std::move(tris));
    IlpRow edges{"c3_edges", {}, '=', 2 * n - 3};
    for (int r = 0; r < cx.num_edges(); ++r) edges.terms.push_back({1, yvar[r]});
    model.rows.push_back(std::move(edges));
  }

  // C5 linearized: sum_{t in U(v)} x + sum_{e at v} y - sum_{(t,e): v in e} z = 1
  for (int v = 0; v < n; ++v) {
    IlpRow row{"c5_star_" + std::to_string(v), {}, '=', 1};
    for (int p : cx.group(v)) row.terms.push_back({1, xvar[p]});
    for (int u = 0; u < n; ++u)
      if (u != v) row.terms.push_back({1, yvar[edge_rank(Edge(u, v))]});
    for (int p : cx.group(v)) {
      const auto& ranks = cx.candidate_edge_ranks(p);
      for (int s = 0; s < 3; ++s)
        if (edge_unrank(ranks[s]).contains(v)) row.terms.push_back({-1, zvar[p][s]});
    }
    model.rows.push_back(std::move(row));
  }

  return model;
}

namespace {

void write_terms(std::ostream& out, const IlpModel& model,
                 const std::vector<std::pair<long long, int>>& terms) {
  bool first = true;
  for (const auto& [coef, var] : terms) {
    if (coef >= 0)
      out << (first ? "" : " + ");
    else
      out << (first ? "- " : " - ");
    const long long mag = coef < 0 ? -coef : coef;
    if (mag != 1) out << mag << " ";
    out << model.var_names[var];
    first = false;
  }
}

}  // namespace

std::string emit_lp(const Instance& inst, const Complex& cx) {
  const IlpModel model = build_ilp(inst, cx);
  const int n = model.n;
  std::ostringstream out;
  out << "\\ cGSTP model over " << cx.num_candidates() << " candidate triangles, n=" << n << "\n";
  out << "\\ C4 (the active subgraph must be a tree) is NOT encoded as rows;\n";
  out << "\\ enforce it on the consumer side (e.g. lazy connectivity cuts) and\n";
  out << "\\ audit solutions with the validate subcommand. With C1-C3 holding,\n";
  out << "\\ the active subgraph has 3n-5 nodes and 3n-6 arcs, so connectivity\n";
  out << "\\ alone already implies the tree property.\n";
  out << "MAXIMIZE\n obj: ";
  write_terms(out, model, model.objective);
  out << "\nSUBJECT TO\n";
  for (const IlpRow& row : model.rows) {
    out << " " << row.name << ": ";
    write_terms(out, model, row.terms);
    out << (row.sense == '<' ? " <= " : row.sense == '>' ? " >= " : " = ")
        << row.rhs << "\n";
  }
  out << "BINARY\n";
  for (const auto& name : model.var_names) out << " " << name << "\n";
  out << "END\n";
  return out.str();
}

RowEvaluation evaluate_rows(const IlpModel& model,
                            const std::map<std::string, int>& assignment) {
  std::vector<int> values(model.var_names.size());
  for (std::size_t i = 0; i < model.var_names.size(); ++i) {
    const auto it = assignment.find(model.var_names[i]);
    if (it == assignment.end())
      throw Error("assignment missing variable " + model.var_names[i]);
    if (it->second != 0 && it->second != 1)
      throw Error("non-binary value for " + model.var_names[i]);
    values[i] = it->second;
  }
  RowEvaluation eval;
  for (const auto& [coef, var] : model.objective)
    eval.objective_value += coef * values[var];
  for (const IlpRow& row : model.rows) {
    long long lhs = 0;
    for (const auto& [coef, var] : row.terms) lhs += coef * values[var];
    const bool ok = row.sense == '<'   ? lhs <= row.rhs
                    : row.sense == '>' ? lhs >= row.rhs
                                       : lhs == row.rhs;
    if (!ok) {
      eval.all_satisfied = false;
      eval.violated_rows.push_back(row.name);
    }
  }
  return eval;
}

std::map<std::string, int> assignment_from_selection(const Selection& sel) {
  const Complex& cx = *sel.cx;
  std::map<std::string, int> out;
  for (int p = 0; p < cx.num_candidates(); ++p)
    out[var_name_x(cx.candidate(p))] = sel.x[p] ? 1 : 0;
  for (int r = 0; r < cx.num_edges(); ++r)
    out[var_name_y(edge_unrank(r))] = sel.y[r] ? 1 : 0;
  for (int p = 0; p < cx.num_candidates(); ++p) {
    const auto& ranks = cx.candidate_edge_ranks(p);
    for (int s = 0; s < 3; ++s)
      out[var_name_z(cx.candidate(p), edge_unrank(ranks[s]))] = sel.z[p][s] ? 1 : 0;
  }
  return out;
}

ValidationResult validate_external(const std::map<std::string, int>& assignment,
                                   const Instance& inst, const Complex& cx) {
  Selection sel = empty_selection(cx);
  auto lookup = [&](const std::string& name) {
    const auto it = assignment.find(name);
    if (it == assignment.end()) throw Error("assignment missing variable " + name);
    if (it->second != 0 && it->second != 1)
      throw Error("non-binary value for " + name);
    return static_cast<std::uint8_t>(it->second);
  };
  for (int p = 0; p < cx.num_candidates(); ++p) {
    sel.x[p] = lookup(var_name_x(cx.candidate(p)));
    const auto& ranks = cx.candidate_edge_ranks(p);
    for (int s = 0; s < 3; ++s)
      sel.z[p][s] = lookup(var_name_z(cx.candidate(p), edge_unrank(ranks[s])));
  }
  for (int r = 0; r < cx.num_edges(); ++r)
    sel.y[r] = lookup(var_name_y(edge_unrank(r)));

  ValidationResult result;
  result.verdict = check_admissible(sel);
  result.objective = net_weight(sel, inst);
  if (result.verdict.admissible) result.tour = decode_tour(sel);
  return result;
}

std::map<std::string, int> parse_assignment(const std::string& text) {
  std::map<std::string, int> out;
  auto to_binary = [](double v, const std::string& name) {
    if (std::abs(v) < 1e-6) return 0;
    if (std::abs(v - 1.0) < 1e-6) return 1;
    throw Error("non-binary value for " + name + ": " + std::to_string(v));
  };
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    const auto j = nlohmann::json::parse(text);
    for (auto it = j.begin(); it != j.end(); ++it)
      out[it.key()] = to_binary(it.value().get<double>(), it.key());
    return out;
  }
  std::istringstream in(text);
  std::string name;
  double value;
  while (in >> name >> value) out[name] = to_binary(value, name);
  return out;
}

std::string validation_to_json(const ValidationResult& r) {
  nlohmann::json j;
  j["verdict"] = nlohmann::json::parse(verdict_to_json(r.verdict));
  j["tour"] = r.tour ? nlohmann::json(r.tour->order) : nlohmann::json();
  j["objective"] = nlohmann::json::parse(objective_to_json(r.objective));
  return j.dump(2);
}

}  // namespace tspdisk
