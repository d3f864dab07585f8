#pragma once

#include <array>
#include <string>
#include <vector>

#include "tspdisk/instance.hpp"

namespace tspdisk {

/// Unordered city pair, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
    if (a == b || a < 0) throw Error("invalid edge endpoints");
  }
  bool contains(int city) const { return city == u || city == v; }
  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

/// City triple, stored with a < b < c.
struct Tri {
  int a = 0;
  int b = 1;
  int c = 2;
  Tri() = default;
  Tri(int x, int y, int z);
  bool contains(int city) const { return city == a || city == b || city == c; }
  bool operator==(const Tri&) const = default;
  auto operator<=>(const Tri&) const = default;
};

/// Colexicographic rank of a pair: independent of n, dense in [0, C(n,2)).
int edge_rank(const Edge& e);
Edge edge_unrank(int rank);

/// Colexicographic rank of a triple, dense in [0, C(n,3)).
long long tri_rank(const Tri& t);

/// The three 2-subsets of a triangle, in ascending edge order.
std::array<Edge, 3> triangle_edges(const Tri& t);

std::string edge_str(const Edge& e);
std::string tri_str(const Tri& t);

Length edge_length(const Instance& inst, const Edge& e);

/// The bipartite triangle/edge incidence structure restricted to a
/// candidate triangle set. Immutable after construction.
class Complex {
 public:
  Complex(int n, std::vector<Tri> candidates);

  int n() const { return n_; }
  int num_edges() const { return n_ * (n_ - 1) / 2; }
  int num_candidates() const { return static_cast<int>(tris_.size()); }

  /// Candidates sorted by colex rank; positions index all per-candidate data.
  const std::vector<Tri>& candidates() const { return tris_; }
  const Tri& candidate(int pos) const { return tris_[pos]; }

  /// Position of a triangle among the candidates, or -1 if absent.
  int candidate_index(const Tri& t) const;

  /// Colex ranks of the candidate's three edges, ascending.
  const std::array<int, 3>& candidate_edge_ranks(int pos) const {
    return edge_ranks_[pos];
  }

  /// Candidate positions of triangles containing the edge.
  const std::vector<int>& tris_of_edge(int edge_rank) const {
    return edge_to_tris_[edge_rank];
  }

  /// The group U(v): candidate positions of triangles containing city v.
  const std::vector<int>& group(int city) const { return groups_[city]; }

 private:
  int n_;
  std::vector<Tri> tris_;
  std::vector<std::array<int, 3>> edge_ranks_;
  std::vector<std::vector<int>> edge_to_tris_;
  std::vector<std::vector<int>> groups_;
  std::vector<int> rank_to_pos_;
};

Complex full_complex(int n);
Complex restricted_complex(int n, std::vector<Tri> triangles);

/// All triangles whose circumcircle strictly contains no other point.
/// Exact integer predicate; cocircular degeneracies are an error.
std::vector<Tri> delaunay_candidates(const Instance& inst);

/// Candidate list file: one "i j k" triple per line, 0-based.
std::vector<Tri> parse_triangle_list(const std::string& text);
std::string format_triangle_list(const std::vector<Tri>& tris);

}  // namespace tspdisk
