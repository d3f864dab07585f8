#pragma once

#include <string>
#include <vector>

#include "tspdisk/instance.hpp"

namespace tspdisk {

/// A Hamiltonian cycle as a cyclic city sequence.
struct Tour {
  std::vector<int> order;
  bool operator==(const Tour&) const = default;
};

/// Rotates to start at city 0 and orients so the second city is the
/// smaller of city 0's two neighbors. Idempotent.
Tour canonical_tour(const Tour& t);

/// Throws if the order is not a permutation of [0, n).
void validate_tour(const Tour& t, int n);

/// Cycle length including the closing edge.
Length tour_length(const Tour& t, const Instance& inst);

/// Single line of space-separated 0-based city indices.
Tour parse_tour(const std::string& text);
std::string format_tour(const Tour& t);

}  // namespace tspdisk
