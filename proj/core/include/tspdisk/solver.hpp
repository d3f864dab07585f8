#pragma once

#include <map>
#include <optional>
#include <string>

#include "tspdisk/objective.hpp"
#include "tspdisk/selection.hpp"

namespace tspdisk {

struct SolveOptions {
  bool use_bound = true;
  std::optional<long long> node_limit;
};

enum class SolveStatus { optimal, infeasible, node_limit_reached };
const char* solve_status_name(SolveStatus s);

struct SolveReport {
  SolveStatus status = SolveStatus::infeasible;
  std::vector<Tri> best_K;
  Tour best_tour;
  long long objective = 0;   // W(B') at the optimum
  Length tour_length = 0;
  long long nodes_explored = 0;
  std::map<std::string, long long> prunes;
};

/// Exact maximization of the net weight over admissible selections with
/// K inside the candidate set. Branch and bound growing an edge-connected
/// triangle set: each node resolves the cheapest open selected edge, either
/// covering it with one more triangle or fixing it on the boundary, with
/// incidence-count pruning throughout and C5 checked at full-size leaves.
/// Deterministic: roots expand in ascending-perimeter order and equal
/// objectives resolve to the lexicographically smallest K.
SolveReport solve_exact(const Instance& inst, const Complex& cx,
                        const SolveOptions& opts = {});

std::string report_to_json(const SolveReport& r);

}  // namespace tspdisk
