#include "tspdisk/solver.hpp"

#include <algorithm>
#include <limits>

#include "json.hpp"
#include "tspdisk/encode.hpp"

namespace tspdisk {

const char* solve_status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::node_limit_reached: return "node_limit_reached";
  }
  return "?";
}

namespace {

constexpr Length kNoIncumbent = std::numeric_limits<Length>::max();

// Exact branch-and-bound over admissible selections. The search grows an
// edge-connected triangle set and branches on the cheapest selected edge
// that is neither internal nor declared boundary yet: either it stays on
// the boundary (excluding every remaining triangle over it) or exactly
// one of those triangles covers it. The options are mutually exclusive
// under C2, so every admissible selection is reached exactly once.
class Search {
 public:
  Search(const Instance& inst, const Complex& cx, const SolveOptions& opts)
      : inst_(inst), cx_(cx), opts_(opts), n_(cx.n()), target_(n_ - 2) {
    const int m = cx_.num_candidates();
    // fixed branching order: ascending perimeter, ties by colex rank
    order_.resize(m);
    for (int p = 0; p < m; ++p) order_[p] = p;
    std::vector<Length> perim(m);
    for (int p = 0; p < m; ++p) {
      perim[p] = 0;
      for (int r : cx_.candidate_edge_ranks(p))
        perim[p] += edge_length(inst_, edge_unrank(r));
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return perim[a] < perim[b]; });
    oidx_of_.assign(m, 0);
    for (int i = 0; i < m; ++i) oidx_of_[order_[i]] = i;

    tris_by_order_.resize(cx_.num_edges());
    for (int r = 0; r < cx_.num_edges(); ++r) {
      tris_by_order_[r] = cx_.tris_of_edge(r);
      std::sort(tris_by_order_[r].begin(), tris_by_order_[r].end(),
                [&](int a, int b) { return oidx_of_[a] < oidx_of_[b]; });
    }

    heur_tour_ = heuristic_tour();
    in_s_.assign(m, 0);
    dead_.assign(m, 0);
    resolved_.assign(cx_.num_edges(), 0);
    edge_count_.assign(cx_.num_edges(), 0);
    edge_first_.assign(cx_.num_edges(), -1);
    tris_at_.assign(n_, 0);
    edges_at_.assign(n_, 0);

    if (opts_.use_bound) {
      support_.assign(cx_.num_edges(), 0);
      for (int p = 0; p < m; ++p)
        for (int r : cx_.candidate_edge_ranks(p)) ++support_[r];
      cand_edges_at_.resize(n_);
      for (int r = 0; r < cx_.num_edges(); ++r) {
        if (!support_[r]) continue;
        const Edge e = edge_unrank(r);
        const Length l = edge_length(inst_, e);
        cand_edges_at_[e.u].push_back({l, r});
        cand_edges_at_[e.v].push_back({l, r});
      }
      lb_at_.assign(n_, 0);
      bad_at_.assign(n_, 0);
      for (int v = 0; v < n_; ++v) {
        std::sort(cand_edges_at_[v].begin(), cand_edges_at_[v].end());
        touch_vertex(v, false);
      }
      uf_.resize(n_);
      held_karp_ascent();
      lb_feasible_ = bad_count_ == 0;
    }
  }

  SolveReport run() {
    SolveReport report;
    report.prunes = {{"C2", 0}, {"C3a", 0}, {"C3b", 0},
                     {"C4", 0}, {"C5", 0},  {"bound", 0}};
    prunes_ = &report.prunes;

    bool structurally_infeasible = false;
    for (int v = 0; v < n_; ++v)
      if (cx_.group(v).empty()) structurally_infeasible = true;
    if (opts_.use_bound && !lb_feasible_) structurally_infeasible = true;

    if (!structurally_infeasible) {
      seed_incumbent();
      const int m = cx_.num_candidates();
      for (int root = 0; root < m && !stopped_; ++root) {
        if (m - root < target_) {
          ++(*prunes_)["C3a"];
          break;
        }
        const int p = order_[root];
        if (try_include(p)) {
          dfs();
          undo_include();
        }
        kill_triangle(p);  // every later subtree starts past this root
      }
    }

    report.nodes_explored = nodes_;
    if (best_len_ == kNoIncumbent) {
      report.status = stopped_ ? SolveStatus::node_limit_reached
                               : SolveStatus::infeasible;
      return report;
    }
    report.status = stopped_ ? SolveStatus::node_limit_reached
                             : SolveStatus::optimal;
    for (int p : best_s_) report.best_K.push_back(cx_.candidate(p));
    const Selection sel = induce_selection(cx_, report.best_K);
    const Verdict v = check_admissible(sel);
    if (!v.admissible)
      throw Error("solver produced an inadmissible incumbent");
    report.best_tour = decode_tour(sel);
    report.objective = net_weight(sel, inst_).net;
    report.tour_length = tour_length(report.best_tour, inst_);
    return report;
  }

 private:
  struct VSnap {
    int v;
    Length lb;
    std::uint8_t bad;
  };

  struct Undo {
    int pos;
    std::array<int, 3> prev_count;
    int prev_edges_selected;
    int prev_internal;
    Length prev_boundary_len;
    std::size_t sel_mark, dead_mark, vsnap_mark;
    bool support_dec = false;
  };

  // Recomputes the per-vertex boundary bound. An edge can still end up on
  // the boundary iff it is selected once, or unselected with a remaining
  // live triangle over it; a selected edge with no live triangle left, or
  // one declared boundary, lies on the boundary of every completion
  // (forced). A vertex needing more than two forced edges, or left with
  // fewer than two usable ones, admits no completion: the state is dead.
  void touch_vertex(int v, bool snapshot = true) {
    if (snapshot) vsnap_trail_.push_back({v, lb_at_[v], bad_at_[v]});
    Length lb = 0;
    int forced = 0;
    Length fill[2];
    int nfill = 0;
    bool bad = false;
    for (const auto& [l, r] : cand_edges_at_[v]) {
      if (edge_count_[r] >= 2) continue;  // internal for good
      if (edge_count_[r] == 1) {
        if (support_[r] == 0 || resolved_[r]) {
          lb += l;  // forced boundary edge
          if (++forced > 2) {
            bad = true;
            break;
          }
          continue;
        }
      } else if (support_[r] == 0) {
        continue;  // no triangle can ever select it
      }
      if (nfill < 2) fill[nfill++] = l;
    }
    if (!bad) {
      if (nfill < 2 - forced) {
        bad = true;
      } else {
        for (int i = 0; i < 2 - forced; ++i) lb += fill[i];
      }
    }
    if (bad) {
      if (!bad_at_[v]) {
        bad_at_[v] = 1;
        ++bad_count_;
      }
    } else {
      if (bad_at_[v]) {
        bad_at_[v] = 0;
        --bad_count_;
      }
      lb_sum_ += lb - lb_at_[v];
      lb_at_[v] = lb;
    }
  }

  void pop_vsnaps_to(std::size_t mark) {
    while (vsnap_trail_.size() > mark) {
      const VSnap& s = vsnap_trail_.back();
      if (bad_at_[s.v] != s.bad) {
        bad_count_ += s.bad ? 1 : -1;
        bad_at_[s.v] = s.bad;
      }
      lb_sum_ += s.lb - lb_at_[s.v];
      lb_at_[s.v] = s.lb;
      vsnap_trail_.pop_back();
    }
  }

  // One more reason t cannot enter the selection (root passed, an edge of
  // t saturated, or an edge of t declared boundary); reasons stack.
  void kill_triangle(int t) {
    dead_trail_.push_back(t);
    if (dead_[t]++ == 0 && opts_.use_bound) {
      for (int r : cx_.candidate_edge_ranks(t)) --support_[r];
      const Tri tr = cx_.candidate(t);
      touch_vertex(tr.a);
      touch_vertex(tr.b);
      touch_vertex(tr.c);
    }
  }

  void pop_dead_to(std::size_t mark) {
    while (dead_trail_.size() > mark) {
      const int t = dead_trail_.back();
      dead_trail_.pop_back();
      if (--dead_[t] == 0 && opts_.use_bound)
        for (int r : cx_.candidate_edge_ranks(t)) ++support_[r];
    }
  }

  int uf_find(int x) {
    while (uf_[x] != x) x = uf_[x] = uf_[uf_[x]];
    return x;
  }

  // Root subgradient ascent (Held-Karp): vertex potentials pi maximizing
  // the 1-tree value under L'(e) = L(e) + pi_u + pi_v over the candidate
  // edges. The potentials are then frozen; for any Hamiltonian cycle H,
  // len(H) = sum_{e in H} L'(e) - 2*sum(pi), so a constrained 1-tree in
  // L' minus that offset lower-bounds every completion's boundary length.
  void held_karp_ascent() {
    struct Raw {
      Length l;
      int u, v, r;
    };
    std::vector<Raw> raw;
    for (int r = 0; r < cx_.num_edges(); ++r)
      if (support_[r]) {
        const Edge e = edge_unrank(r);
        raw.push_back({edge_length(inst_, e), e.u, e.v, r});
      }
    std::vector<double> pi(n_, 0.0), best_pi(n_, 0.0);
    double best_w = -1e300;
    const double ub = static_cast<double>(tour_length(heur_tour_, inst_));
    std::vector<std::pair<double, int>> es(raw.size());
    std::vector<int> deg(n_);
    for (int iter = 0; iter < 120; ++iter) {
      for (std::size_t i = 0; i < raw.size(); ++i)
        es[i] = {raw[i].l + pi[raw[i].u] + pi[raw[i].v],
                 static_cast<int>(i)};
      std::sort(es.begin(), es.end());
      for (int v = 0; v < n_; ++v) uf_[v] = v;
      std::fill(deg.begin(), deg.end(), 0);
      double w = 0.0;
      int joins = 0;
      for (const auto& [lp, i] : es) {
        const Raw& e = raw[i];
        if (e.u == 0 || e.v == 0) continue;
        const int a = uf_find(e.u), b = uf_find(e.v);
        if (a == b) continue;
        uf_[a] = b;
        w += lp;
        ++joins;
        ++deg[e.u];
        ++deg[e.v];
      }
      if (joins < n_ - 2) break;  // candidates cannot span; pi stays as is
      int at0 = 0;
      for (const auto& [lp, i] : es) {
        const Raw& e = raw[i];
        if (e.u != 0 && e.v != 0) continue;
        w += lp;
        ++deg[e.u];
        ++deg[e.v];
        if (++at0 == 2) break;
      }
      if (at0 < 2) break;
      for (int v = 0; v < n_; ++v) w -= 2.0 * pi[v];
      if (w > best_w) {
        best_w = w;
        best_pi = pi;
      }
      double norm2 = 0.0;
      for (int v = 0; v < n_; ++v) {
        const double g = deg[v] - 2;
        norm2 += g * g;
      }
      if (norm2 == 0.0) break;  // the 1-tree is itself a tour
      const double step = (ub - w) / norm2;
      if (step <= 0.0) break;
      for (int v = 0; v < n_; ++v) pi[v] += step * (deg[v] - 2);
    }
    pi_offset_ = 0.0;
    for (int v = 0; v < n_; ++v) pi_offset_ += 2.0 * best_pi[v];
    for (const Raw& e : raw) {
      const double lp = e.l + best_pi[e.u] + best_pi[e.v];
      if (e.u == 0 || e.v == 0)
        edges0_.push_back({lp, e.r});
      else
        edgesNZ_.push_back({lp, e.r});
    }
    std::sort(edges0_.begin(), edges0_.end());
    std::sort(edgesNZ_.begin(), edgesNZ_.end());
  }

  bool is_forced(int r) const {
    return edge_count_[r] == 1 && (support_[r] == 0 || resolved_[r]);
  }

  // One-tree bound on the final boundary cycle in the pi-weighted metric:
  // the cycle minus vertex 0 is a spanning path of the remaining vertices
  // using possible edges and containing every forced edge, bounded by the
  // matching constrained MST; vertex 0 contributes its two cycle edges.
  // Returns +inf when the state admits no completion at all.
  double one_tree_lb() {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    double total = 0.0;
    int got = 0;
    for (const auto& [lp, r] : edges0_)
      if (is_forced(r)) {
        total += lp;
        if (++got > 2) return kInf;
      }
    if (got < 2)
      for (const auto& [lp, r] : edges0_) {
        if (edge_count_[r] >= 2 || is_forced(r)) continue;
        if (edge_count_[r] == 0 && support_[r] == 0) continue;
        total += lp;
        if (++got == 2) break;
      }
    if (got < 2) return kInf;
    for (int v = 0; v < n_; ++v) uf_[v] = v;
    int joins = 0;
    // forced edges first: a cycle among them can never sit inside a path
    for (const auto& [lp, r] : edgesNZ_) {
      if (!is_forced(r)) continue;
      const Edge e = edge_unrank(r);
      const int a = uf_find(e.u), b = uf_find(e.v);
      if (a == b) return kInf;
      uf_[a] = b;
      ++joins;
      total += lp;
    }
    for (const auto& [lp, r] : edgesNZ_) {
      if (joins == n_ - 2) break;
      if (edge_count_[r] >= 2 || is_forced(r)) continue;
      if (edge_count_[r] == 0 && support_[r] == 0) continue;
      const Edge e = edge_unrank(r);
      const int a = uf_find(e.u), b = uf_find(e.v);
      if (a == b) continue;
      uf_[a] = b;
      ++joins;
      total += lp;
    }
    if (joins < n_ - 2) return kInf;  // disconnected off vertex 0
    return total - pi_offset_;
  }

  // true when the current state provably cannot beat (or tie) the incumbent
  bool bound_prunes() {
    if (bad_count_ > 0) return true;
    if (best_len_ == kNoIncumbent) return false;
    if ((lb_sum_ + 1) / 2 > best_len_) return true;
    // small slack keeps float error from ever cutting an exact tie
    return one_tree_lb() > static_cast<double>(best_len_) + 1e-6;
  }

  // Deterministic nearest-neighbour tour improved by first-improvement
  // 2-opt; used both as primal incumbent and as the subgradient target.
  Tour heuristic_tour() const {
    std::vector<int> order{0};
    std::vector<char> used(n_, 0);
    used[0] = 1;
    for (int step = 1; step < n_; ++step) {
      int best = -1;
      Length bl = 0;
      for (int v = 0; v < n_; ++v) {
        if (used[v]) continue;
        const Length l = edge_length(inst_, Edge(order.back(), v));
        if (best == -1 || l < bl) {
          best = v;
          bl = l;
        }
      }
      used[best] = 1;
      order.push_back(best);
    }
    auto edge_at = [&](int a, int b) {
      return edge_length(inst_, Edge(order[a], order[b]));
    };
    bool improved = n_ > 3;
    while (improved) {
      improved = false;
      for (int i = 0; i < n_ - 1 && !improved; ++i)
        for (int j = i + 1; j < n_ && !improved; ++j) {
          if (i == 0 && j == n_ - 1) continue;  // reflection, no change
          const int k = (j + 1) % n_;
          const Length delta = edge_at(i, j) + edge_at(i + 1, k) -
                               edge_at(i, i + 1) - edge_at(j, k);
          if (delta < 0) {
            std::reverse(order.begin() + i + 1, order.begin() + j + 1);
            improved = true;
          }
        }
    }
    return Tour{order};
  }

  // The heuristic tour becomes the incumbent only when its fan lies inside
  // the candidate set, so pruning (strict) can never cut a true optimum.
  void seed_incumbent() {
    try {
      const Selection sel = fan_encode_any_apex(heur_tour_, cx_);
      std::vector<int> pos;
      for (const Tri& t : sel.selected_triangles())
        pos.push_back(cx_.candidate_index(t));
      std::sort(pos.begin(), pos.end());
      best_len_ = tour_length(heur_tour_, inst_);
      best_s_ = std::move(pos);
    } catch (const Error&) {
      // no fan of the heuristic tour in this candidate set; start cold
    }
  }

  // Adds candidate p to the partial set, maintaining incidence counts,
  // saturation kills, and bounds. Returns false (fully undone, prune
  // counted) when the state cannot extend to an admissible selection or
  // cannot beat the incumbent.
  bool try_include(int p) {
    if (opts_.node_limit && nodes_ >= *opts_.node_limit) {
      stopped_ = true;
      return false;
    }
    ++nodes_;
    Undo u;
    u.pos = p;
    u.prev_edges_selected = edges_selected_;
    u.prev_internal = internal_;
    u.prev_boundary_len = boundary_len_;
    u.sel_mark = sel_edges_.size();
    u.dead_mark = dead_trail_.size();
    u.vsnap_mark = vsnap_trail_.size();
    const auto& ranks = cx_.candidate_edge_ranks(p);
    for (int s = 0; s < 3; ++s) u.prev_count[s] = edge_count_[ranks[s]];

    const char* prune = nullptr;
    for (int s = 0; s < 3 && !prune; ++s) {
      const int r = ranks[s];
      const Edge e = edge_unrank(r);
      const Length l = edge_length(inst_, e);
      if (edge_count_[r] == 2 || (edge_count_[r] == 1 && resolved_[r])) {
        prune = "C2";
        break;
      }
      ++edge_count_[r];
      if (edge_count_[r] == 1) {
        ++edges_selected_;
        boundary_len_ += l;
        ++edges_at_[e.u];
        ++edges_at_[e.v];
        sel_edges_.push_back(r);
        if (edges_selected_ > 2 * n_ - 3) prune = "C3b";
      } else {  // became internal: nobody else may cover it (C2)
        ++internal_;
        boundary_len_ -= l;
        if (internal_ > n_ - 3) prune = "C3b";
        if (!prune)
          for (int t2 : cx_.tris_of_edge(r))
            if (t2 != p && !in_s_[t2]) kill_triangle(t2);
      }
    }
    if (!prune && opts_.use_bound) {
      u.support_dec = true;
      for (int s = 0; s < 3; ++s) --support_[ranks[s]];
      const Tri t = cx_.candidate(p);
      touch_vertex(t.a);
      touch_vertex(t.b);
      touch_vertex(t.c);
      // strict comparisons so equal-objective selections are still reached
      if (bound_prunes()) prune = "bound";
    }
    if (prune) {
      if (u.support_dec)
        for (int s = 0; s < 3; ++s) ++support_[ranks[s]];
      pop_vsnaps_to(u.vsnap_mark);
      pop_dead_to(u.dead_mark);
      sel_edges_.resize(u.sel_mark);
      // roll back the partially applied edge updates
      for (int s = 0; s < 3; ++s) {
        const int r = ranks[s];
        const Edge e = edge_unrank(r);
        if (edge_count_[r] > u.prev_count[s]) {
          if (edge_count_[r] == 1) {
            --edges_at_[e.u];
            --edges_at_[e.v];
          }
          --edge_count_[r];
        }
      }
      edges_selected_ = u.prev_edges_selected;
      internal_ = u.prev_internal;
      boundary_len_ = u.prev_boundary_len;
      ++(*prunes_)[prune];
      return false;
    }
    in_s_[p] = 1;
    s_.push_back(p);
    ++tris_at_[cx_.candidate(p).a];
    ++tris_at_[cx_.candidate(p).b];
    ++tris_at_[cx_.candidate(p).c];
    undo_.push_back(u);
    return true;
  }

  void undo_include() {
    const Undo& u = undo_.back();
    const int p = u.pos;
    const auto& ranks = cx_.candidate_edge_ranks(p);
    if (u.support_dec)
      for (int s = 0; s < 3; ++s) ++support_[ranks[s]];
    pop_vsnaps_to(u.vsnap_mark);
    pop_dead_to(u.dead_mark);
    sel_edges_.resize(u.sel_mark);
    for (int s = 0; s < 3; ++s) {
      const int r = ranks[s];
      const Edge e = edge_unrank(r);
      if (edge_count_[r] == 1) {
        --edges_at_[e.u];
        --edges_at_[e.v];
      }
      --edge_count_[r];
    }
    edges_selected_ = u.prev_edges_selected;
    internal_ = u.prev_internal;
    boundary_len_ = u.prev_boundary_len;
    --tris_at_[cx_.candidate(p).a];
    --tris_at_[cx_.candidate(p).b];
    --tris_at_[cx_.candidate(p).c];
    in_s_[p] = 0;
    s_.pop_back();
    undo_.pop_back();
  }

  // Branch on the cheapest unresolved selected edge: one option per live
  // triangle that could cover it, plus "it stays on the boundary".
  void dfs() {
    if (stopped_) return;
    if (static_cast<int>(s_.size()) == target_) {
      leaf();
      return;
    }
    int pick = -1;
    Length pick_len = 0;
    for (int r : sel_edges_) {
      if (edge_count_[r] != 1 || resolved_[r]) continue;
      const Length l = edge_length(inst_, edge_unrank(r));
      if (pick < 0 || l < pick_len || (l == pick_len && r < pick)) {
        pick = r;
        pick_len = l;
      }
    }
    if (pick < 0) {
      ++(*prunes_)["C3a"];  // closed disk, but with too few triangles
      return;
    }
    for (int t : tris_by_order_[pick]) {
      if (stopped_) return;
      if (in_s_[t] || dead_[t]) continue;
      if (try_include(t)) {
        dfs();
        undo_include();
      }
    }
    if (stopped_) return;
    // last option: the edge stays on the boundary for good
    const std::size_t dmark = dead_trail_.size();
    const std::size_t vmark = vsnap_trail_.size();
    resolved_[pick] = 1;
    for (int t : cx_.tris_of_edge(pick))
      if (!in_s_[t]) kill_triangle(t);
    bool dead_state = false;
    if (opts_.use_bound) {
      const Edge e = edge_unrank(pick);
      touch_vertex(e.u);
      touch_vertex(e.v);
      dead_state = bound_prunes();
      if (dead_state) ++(*prunes_)["bound"];
    }
    if (!dead_state) dfs();
    pop_vsnaps_to(vmark);
    pop_dead_to(dmark);
    resolved_[pick] = 0;
  }

  // Union-find over the selected triangles through their shared edges;
  // with the cardinalities already pinned, connectivity is exactly C4.
  bool connected_selection() {
    const int k = static_cast<int>(s_.size());
    uf_sel_.resize(k);
    for (int i = 0; i < k; ++i) uf_sel_[i] = i;
    auto find = [&](int x) {
      while (uf_sel_[x] != x) x = uf_sel_[x] = uf_sel_[uf_sel_[x]];
      return x;
    };
    int comps = k;
    for (int i = 0; i < k; ++i)
      for (int r : cx_.candidate_edge_ranks(s_[i])) {
        if (edge_first_[r] < 0) {
          edge_first_[r] = i;
        } else {
          const int a = find(i), b = find(edge_first_[r]);
          if (a != b) {
            uf_sel_[a] = b;
            --comps;
          }
        }
      }
    for (int i = 0; i < k; ++i)
      for (int r : cx_.candidate_edge_ranks(s_[i])) edge_first_[r] = -1;
    return comps == 1;
  }

  void leaf() {
    // C1-C3 hold by construction; the Euler condition and connectivity
    // (C4) remain, checked only for candidates that could become incumbent
    if (edges_selected_ != 2 * n_ - 3) {
      ++(*prunes_)["C3b"];
      return;
    }
    const Length len = boundary_len_;
    if (best_len_ != kNoIncumbent && len > best_len_) return;
    std::vector<int> sorted_s = s_;
    std::sort(sorted_s.begin(), sorted_s.end());
    if (len == best_len_ && !(sorted_s < best_s_)) return;
    for (int v = 0; v < n_; ++v)
      if (edges_at_[v] - tris_at_[v] != 1) {
        ++(*prunes_)["C5"];
        return;
      }
    if (!connected_selection()) {
      ++(*prunes_)["C4"];
      return;
    }
    best_len_ = len;
    best_s_ = std::move(sorted_s);
  }

  const Instance& inst_;
  const Complex& cx_;
  SolveOptions opts_;
  int n_;
  int target_;

  std::vector<int> order_;
  std::vector<int> oidx_of_;
  std::vector<std::vector<int>> tris_by_order_;

  std::vector<std::uint8_t> in_s_;
  std::vector<int> dead_;
  std::vector<int> dead_trail_;
  std::vector<std::uint8_t> resolved_;
  std::vector<int> s_;
  std::vector<int> sel_edges_;
  std::vector<Undo> undo_;
  std::vector<int> edge_count_;
  std::vector<int> edge_first_;
  std::vector<int> uf_sel_;
  std::vector<int> tris_at_;
  std::vector<int> edges_at_;
  int edges_selected_ = 0;
  int internal_ = 0;
  Length boundary_len_ = 0;

  std::vector<std::vector<std::pair<Length, int>>> cand_edges_at_;
  std::vector<int> support_;
  std::vector<std::pair<double, int>> edges0_, edgesNZ_;
  double pi_offset_ = 0.0;
  Tour heur_tour_;
  std::vector<int> uf_;
  std::vector<Length> lb_at_;
  std::vector<std::uint8_t> bad_at_;
  std::vector<VSnap> vsnap_trail_;
  int bad_count_ = 0;
  long long lb_sum_ = 0;
  bool lb_feasible_ = true;

  long long nodes_ = 0;
  bool stopped_ = false;
  Length best_len_ = kNoIncumbent;
  std::vector<int> best_s_;
  std::map<std::string, long long>* prunes_ = nullptr;
};

}  // namespace

SolveReport solve_exact(const Instance& inst, const Complex& cx,
                        const SolveOptions& opts) {
  if (cx.n() != inst.n()) throw Error("complex and instance disagree on n");
  Search search(inst, cx, opts);
  return search.run();
}

std::string report_to_json(const SolveReport& r) {
  nlohmann::json j;
  j["status"] = solve_status_name(r.status);
  auto karr = nlohmann::json::array();
  for (const Tri& t : r.best_K) karr.push_back({t.a, t.b, t.c});
  j["best_K"] = karr;
  j["best_tour"] = r.best_tour.order;
  j["objective"] = r.objective;
  j["tour_length"] = r.tour_length;
  j["nodes_explored"] = r.nodes_explored;
  j["prunes"] = r.prunes;
  return j.dump(2);
}

}  // namespace tspdisk
