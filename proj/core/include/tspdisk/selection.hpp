#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tspdisk/complex.hpp"
#include "tspdisk/tour.hpp"

namespace tspdisk {

enum class Constraint { C1, C2, C3a, C3b, C4, C5 };
const char* constraint_name(Constraint c);

struct Violation {
  Constraint constraint;
  std::string witness;
};

struct Verdict {
  bool admissible = false;
  std::vector<Violation> violations;
  bool violates(Constraint c) const;
};

/// A 0/1 assignment (x, y, z) over a complex. Canonical selections are
/// induced from a triangle set K; arbitrary assignments are accepted so
/// external solver output can be audited.
struct Selection {
  const Complex* cx = nullptr;
  std::vector<std::uint8_t> x;                 // per candidate position
  std::vector<std::uint8_t> y;                 // per edge colex rank
  std::vector<std::array<std::uint8_t, 3>> z;  // per candidate, edge-rank order

  std::vector<int> selected_positions() const;
  std::vector<Tri> selected_triangles() const;
  int num_selected_triangles() const;
  int num_selected_edges() const;
  /// Selected incidence count of an edge (sum of z over its triangles).
  int incidence_count(int edge_rank) const;
};

Selection empty_selection(const Complex& cx);

/// The canonical selection of K: all of K's incidences and touched edges.
/// C1 holds by construction.
Selection induce_selection(const Complex& cx, const std::vector<Tri>& K);

/// Evaluates C1 through C5 and records every violation.
Verdict check_admissible(const Selection& sel);

/// Edges with exactly one selected incidence.
std::vector<Edge> boundary(const Selection& sel);

struct SoundnessError : Error {
  using Error::Error;
};

/// Walks the boundary into a canonical Hamiltonian tour. Throws
/// SoundnessError when the boundary is not a single simple Hamiltonian
/// cycle; on admissible input this must never happen.
Tour decode_tour(const Selection& sel);

/// chi(H_v) = |V(H_v)| - |E(H_v)| for the vertex star of v.
int vertex_star_euler(const Selection& sel, int v);

std::string selection_to_json(const Selection& sel);
Selection selection_from_json(const std::string& text, const Complex& cx);
std::string verdict_to_json(const Verdict& v);

}  // namespace tspdisk
