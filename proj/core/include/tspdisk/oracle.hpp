#pragma once

#include "tspdisk/tour.hpp"

namespace tspdisk {

struct OracleResult {
  Tour tour;
  Length length = 0;
};

/// Exhaustive (n-1)!/2 enumeration with city 0 fixed and reflections
/// quotiented; ties resolved to the lexicographically smallest canonical
/// tour. Supports 3 <= n <= 10.
OracleResult tsp_oracle_bruteforce(const Instance& inst);

/// Held-Karp subset dynamic program, O(2^n n^2). Supports 3 <= n <= 16.
/// Deterministic reconstruction (smallest index on ties).
OracleResult tsp_oracle_held_karp(const Instance& inst);

}  // namespace tspdisk
