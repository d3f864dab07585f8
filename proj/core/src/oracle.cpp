#include "tspdisk/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace tspdisk {

OracleResult tsp_oracle_bruteforce(const Instance& inst) {
  const int n = inst.n();
  if (n < 3 || n > 10)
    throw Error("brute-force oracle supports 3 <= n <= 10, got " + std::to_string(n));
  std::vector<int> perm(n - 1);
  std::iota(perm.begin(), perm.end(), 1);
  OracleResult best;
  best.length = std::numeric_limits<Length>::max();
  do {
    if (perm.front() > perm.back()) continue;  // reflection quotient
    Length len = inst.length(0, perm.front()) + inst.length(perm.back(), 0);
    for (int i = 0; i + 1 < n - 1; ++i) len += inst.length(perm[i], perm[i + 1]);
    if (len < best.length) {
      best.length = len;
      best.tour.order.assign(1, 0);
      best.tour.order.insert(best.tour.order.end(), perm.begin(), perm.end());
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  best.tour = canonical_tour(best.tour);
  return best;
}

OracleResult tsp_oracle_held_karp(const Instance& inst) {
  const int n = inst.n();
  if (n < 3 || n > 16)
    throw Error("Held-Karp oracle supports 3 <= n <= 16, got " + std::to_string(n));
  const int m = n - 1;  // cities 1..n-1
  const std::size_t full = std::size_t{1} << m;
  const Length inf = std::numeric_limits<Length>::max() / 4;
  // dp[mask][j]: shortest path 0 -> city j+1 visiting exactly mask
  std::vector<std::vector<Length>> dp(full, std::vector<Length>(m, inf));
  std::vector<std::vector<int>> parent(full, std::vector<int>(m, -1));
  for (int j = 0; j < m; ++j)
    dp[std::size_t{1} << j][j] = inst.length(0, j + 1);
  for (std::size_t mask = 1; mask < full; ++mask) {
    for (int j = 0; j < m; ++j) {
      if (!(mask >> j & 1) || dp[mask][j] >= inf) continue;
      const Length base = dp[mask][j];
      for (int k = 0; k < m; ++k) {
        if (mask >> k & 1) continue;
        const std::size_t next = mask | (std::size_t{1} << k);
        const Length cand = base + inst.length(j + 1, k + 1);
        if (cand < dp[next][k]) {
          dp[next][k] = cand;
          parent[next][k] = j;
        }
      }
    }
  }
  Length best = inf;
  int best_end = -1;
  for (int j = 0; j < m; ++j) {
    const Length total = dp[full - 1][j] + inst.length(j + 1, 0);
    if (total < best) {
      best = total;
      best_end = j;
    }
  }
  OracleResult out;
  out.length = best;
  std::vector<int> rev;
  std::size_t mask = full - 1;
  int j = best_end;
  while (j >= 0) {
    rev.push_back(j + 1);
    const int p = parent[mask][j];
    mask &= ~(std::size_t{1} << j);
    j = p;
  }
  out.tour.order.push_back(0);
  out.tour.order.insert(out.tour.order.end(), rev.rbegin(), rev.rend());
  out.tour = canonical_tour(out.tour);
  return out;
}

}  // namespace tspdisk
