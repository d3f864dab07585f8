#include "tspdisk/selection.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace tspdisk {

const char* constraint_name(Constraint c) {
  switch (c) {
    case Constraint::C1: return "C1";
    case Constraint::C2: return "C2";
    case Constraint::C3a: return "C3a";
    case Constraint::C3b: return "C3b";
    case Constraint::C4: return "C4";
    case Constraint::C5: return "C5";
  }
  return "?";
}

bool Verdict::violates(Constraint c) const {
  return std::any_of(violations.begin(), violations.end(),
                     [c](const Violation& v) { return v.constraint == c; });
}

std::vector<int> Selection::selected_positions() const {
  std::vector<int> out;
  for (int p = 0; p < static_cast<int>(x.size()); ++p)
    if (x[p]) out.push_back(p);
  return out;
}

std::vector<Tri> Selection::selected_triangles() const {
  std::vector<Tri> out;
  for (int p : selected_positions()) out.push_back(cx->candidate(p));
  return out;
}

int Selection::num_selected_triangles() const {
  return static_cast<int>(std::count(x.begin(), x.end(), 1));
}

int Selection::num_selected_edges() const {
  return static_cast<int>(std::count(y.begin(), y.end(), 1));
}

int Selection::incidence_count(int edge_rank) const {
  int count = 0;
  for (int p : cx->tris_of_edge(edge_rank)) {
    const auto& ranks = cx->candidate_edge_ranks(p);
    for (int s = 0; s < 3; ++s)
      if (ranks[s] == edge_rank && z[p][s]) ++count;
  }
  return count;
}

Selection empty_selection(const Complex& cx) {
  Selection sel;
  sel.cx = &cx;
  sel.x.assign(cx.num_candidates(), 0);
  sel.y.assign(cx.num_edges(), 0);
  sel.z.assign(cx.num_candidates(), {0, 0, 0});
  return sel;
}

Selection induce_selection(const Complex& cx, const std::vector<Tri>& K) {
  Selection sel = empty_selection(cx);
  for (const Tri& t : K) {
    const int pos = cx.candidate_index(t);
    if (pos < 0) throw Error("triangle " + tri_str(t) + " is not a candidate");
    sel.x[pos] = 1;
    sel.z[pos] = {1, 1, 1};
    for (int r : cx.candidate_edge_ranks(pos)) sel.y[r] = 1;
  }
  return sel;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  // returns false when a and b were already connected
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

Verdict check_admissible(const Selection& sel) {
  const Complex& cx = *sel.cx;
  const int n = cx.n();
  Verdict verdict;
  auto violate = [&](Constraint c, std::string witness) {
    verdict.violations.push_back({c, std::move(witness)});
  };

  // C1: z <= x, z <= y, and sum of z over a selected triangle's edges = 3x
  for (int p = 0; p < cx.num_candidates(); ++p) {
    const auto& ranks = cx.candidate_edge_ranks(p);
    int zsum = 0;
    for (int s = 0; s < 3; ++s) {
      if (!sel.z[p][s]) continue;
      ++zsum;
      if (!sel.x[p])
        violate(Constraint::C1, "incidence of unselected triangle " +
                                    tri_str(cx.candidate(p)));
      if (!sel.y[ranks[s]])
        violate(Constraint::C1, "incidence on unselected edge " +
                                    edge_str(edge_unrank(ranks[s])));
    }
    if (zsum != 3 * (sel.x[p] ? 1 : 0))
      violate(Constraint::C1, "triangle " + tri_str(cx.candidate(p)) + " has " +
                                  std::to_string(zsum) + " incidences");
  }

  // C2: every selected edge carries 1 or 2 selected incidences
  for (int r = 0; r < cx.num_edges(); ++r) {
    const int count = sel.incidence_count(r);
    if (sel.y[r]) {
      if (count < 1 || count > 2)
        violate(Constraint::C2, "edge " + edge_str(edge_unrank(r)) + " has " +
                                    std::to_string(count) + " selected incidences");
    }
  }

  // C3: disk cardinalities
  const int tri_count = sel.num_selected_triangles();
  const int edge_count = sel.num_selected_edges();
  if (tri_count != n - 2)
    violate(Constraint::C3a, std::to_string(tri_count) + " triangles, need " +
                                 std::to_string(n - 2));
  if (edge_count != 2 * n - 3)
    violate(Constraint::C3b, std::to_string(edge_count) + " edges, need " +
                                 std::to_string(2 * n - 3));

  // C4: the active bipartite subgraph must be a tree. Union-find detects
  // cycles directly; the arc/node count identity cross-checks.
  {
    // node ids: candidate p -> p, edge rank r -> num_candidates + r
    UnionFind uf(cx.num_candidates() + cx.num_edges());
    int nodes = tri_count + edge_count;
    int arcs = 0;
    bool cycle = false;
    for (int p = 0; p < cx.num_candidates(); ++p) {
      if (!sel.x[p]) continue;
      const auto& ranks = cx.candidate_edge_ranks(p);
      for (int s = 0; s < 3; ++s) {
        if (!sel.z[p][s] || !sel.y[ranks[s]]) continue;
        ++arcs;
        if (!uf.unite(p, cx.num_candidates() + ranks[s])) cycle = true;
      }
    }
    int components = 0;
    std::vector<std::vector<int>> comp_tris;
    std::vector<int> root_of(cx.num_candidates() + cx.num_edges(), -1);
    for (int p = 0; p < cx.num_candidates(); ++p) {
      if (!sel.x[p]) continue;
      const int root = uf.find(p);
      if (root_of[root] < 0) {
        root_of[root] = components++;
        comp_tris.emplace_back();
      }
      comp_tris[root_of[root]].push_back(p);
    }
    for (int r = 0; r < cx.num_edges(); ++r) {
      if (!sel.y[r]) continue;
      const int root = uf.find(cx.num_candidates() + r);
      if (root_of[root] < 0) {
        root_of[root] = components++;
        comp_tris.emplace_back();
      }
    }
    if (nodes == 0) {
      violate(Constraint::C4, "empty selection");
    } else {
      if (components > 1) {
        std::ostringstream w;
        w << components << " components:";
        for (const auto& comp : comp_tris) {
          w << " [";
          for (std::size_t i = 0; i < comp.size(); ++i) {
            if (i) w << " ";
            w << tri_str(cx.candidate(comp[i]));
          }
          w << "]";
        }
        violate(Constraint::C4, w.str());
      }
      if (cycle || arcs != nodes - components)
        violate(Constraint::C4, "cycle in active subgraph (nodes=" +
                                    std::to_string(nodes) + ", arcs=" +
                                    std::to_string(arcs) + ")");
    }
  }

  // C5: vertex star Euler characteristic
  for (int v = 0; v < n; ++v) {
    const int chi = vertex_star_euler(sel, v);
    if (chi != 1)
      violate(Constraint::C5, "city " + std::to_string(v) + " has chi=" +
                                  std::to_string(chi));
  }

  verdict.admissible = verdict.violations.empty();
  return verdict;
}

std::vector<Edge> boundary(const Selection& sel) {
  const Complex& cx = *sel.cx;
  std::vector<Edge> out;
  for (int r = 0; r < cx.num_edges(); ++r)
    if (sel.incidence_count(r) == 1) out.push_back(edge_unrank(r));
  return out;
}

Tour decode_tour(const Selection& sel) {
  const int n = sel.cx->n();
  const auto bnd = boundary(sel);
  if (static_cast<int>(bnd.size()) != n)
    throw SoundnessError("boundary has " + std::to_string(bnd.size()) +
                         " edges, expected " + std::to_string(n));
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : bnd) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (int v = 0; v < n; ++v)
    if (adj[v].size() != 2)
      throw SoundnessError("city " + std::to_string(v) + " has boundary degree " +
                           std::to_string(adj[v].size()));
  Tour t;
  t.order.reserve(n);
  std::vector<char> seen(n, 0);
  int prev = -1;
  int cur = 0;
  for (int step = 0; step < n; ++step) {
    if (seen[cur])  // the boundary splits into several short cycles
      throw SoundnessError("boundary is not a single cycle");
    seen[cur] = 1;
    t.order.push_back(cur);
    const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
  }
  if (cur != 0) throw SoundnessError("boundary walk did not close");
  return canonical_tour(t);
}

int vertex_star_euler(const Selection& sel, int v) {
  const Complex& cx = *sel.cx;
  if (v < 0 || v >= cx.n()) throw Error("city index out of range");
  int nodes = 0;
  int arcs = 0;
  for (int p : cx.group(v)) {
    if (sel.x[p]) ++nodes;
    const auto& ranks = cx.candidate_edge_ranks(p);
    for (int s = 0; s < 3; ++s) {
      if (!sel.z[p][s] || !sel.x[p] || !sel.y[ranks[s]]) continue;
      if (edge_unrank(ranks[s]).contains(v)) ++arcs;
    }
  }
  for (int u = 0; u < cx.n(); ++u) {
    if (u == v) continue;
    if (sel.y[edge_rank(Edge(u, v))]) ++nodes;
  }
  return nodes - arcs;
}

std::string selection_to_json(const Selection& sel) {
  nlohmann::json j;
  auto arr = nlohmann::json::array();
  for (const Tri& t : sel.selected_triangles()) arr.push_back({t.a, t.b, t.c});
  j["K"] = arr;
  j["canonical"] = true;
  return j.dump(2);
}

Selection selection_from_json(const std::string& text, const Complex& cx) {
  const auto j = nlohmann::json::parse(text);
  if (j.contains("canonical") && !j["canonical"].get<bool>())
    throw Error("only canonical selections are supported in JSON form");
  std::vector<Tri> K;
  for (const auto& t : j.at("K"))
    K.emplace_back(t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>());
  return induce_selection(cx, K);
}

std::string verdict_to_json(const Verdict& v) {
  nlohmann::json j;
  j["admissible"] = v.admissible;
  auto arr = nlohmann::json::array();
  for (const auto& viol : v.violations)
    arr.push_back({{"constraint", constraint_name(viol.constraint)},
                   {"witness", viol.witness}});
  j["violations"] = arr;
  return j.dump(2);
}

}  // namespace tspdisk
