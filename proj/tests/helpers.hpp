#pragma once

#include <functional>
#include <map>
#include <vector>

#include "tspdisk/complex.hpp"
#include "tspdisk/instance.hpp"

namespace testutil {

// 3-4-5 right triangle scaled by 10: lengths 30, 40, 50.
inline tspdisk::Instance instance_345() {
  std::vector<tspdisk::Point> pts{{0, 0}, {30, 0}, {0, 40}};
  std::vector<tspdisk::Length> tri{30, 40, 50};
  return tspdisk::Instance(3, tri, pts);
}

// Unit square scaled by 10: sides 10, diagonals 14.
inline tspdisk::Instance square10() {
  std::vector<tspdisk::Point> pts{{0, 0}, {0, 10}, {10, 10}, {10, 0}};
  std::vector<tspdisk::Length> tri{10, 14, 10, 10, 14, 10};
  return tspdisk::Instance(4, tri, pts);
}

template <class F>
void for_each_subset(int m, int k, F&& f) {
  std::vector<int> idx(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      f(idx);
      return;
    }
    for (int i = start; i <= m - (k - depth); ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

// Edge incidence counts straight from the triangle list; independent of
// the selection machinery.
inline std::map<tspdisk::Edge, int> brute_edge_counts(
    const std::vector<tspdisk::Tri>& K) {
  std::map<tspdisk::Edge, int> counts;
  for (const auto& t : K)
    for (const auto& e : tspdisk::triangle_edges(t)) ++counts[e];
  return counts;
}

inline bool brute_c2_ok(const std::vector<tspdisk::Tri>& K) {
  for (const auto& [e, c] : brute_edge_counts(K))
    if (c > 2) return false;
  return true;
}

inline std::vector<tspdisk::Edge> brute_boundary(
    const std::vector<tspdisk::Tri>& K) {
  std::vector<tspdisk::Edge> out;
  for (const auto& [e, c] : brute_edge_counts(K))
    if (c == 1) out.push_back(e);
  return out;
}

inline long long brute_boundary_length(const std::vector<tspdisk::Tri>& K,
                                       const tspdisk::Instance& inst) {
  long long total = 0;
  for (const auto& e : brute_boundary(K)) total += tspdisk::edge_length(inst, e);
  return total;
}

}  // namespace testutil
