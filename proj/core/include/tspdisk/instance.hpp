#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tspdisk {

using Length = long long;

/// Base error type for all domain failures.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Point {
  long long x = 0;
  long long y = 0;
  bool operator==(const Point&) const = default;
};

/// TSPLIB EUC_2D distance: nearest integer, halves round up.
Length euc2d_length(const Point& a, const Point& b);

/// A complete symmetric instance with positive integer edge lengths.
/// Immutable after construction.
class Instance {
 public:
  /// upper_tri is row-major upper triangular: (0,1),(0,2),...,(n-2,n-1).
  Instance(int n, std::vector<Length> upper_tri,
           std::optional<std::vector<Point>> coords = std::nullopt);

  int n() const { return n_; }
  bool has_coords() const { return coords_.has_value(); }
  const std::vector<Point>& coords() const;

  /// Symmetric lookup; i != j, both in [0, n).
  Length length(int i, int j) const;

  const std::vector<Length>& upper_tri() const { return lengths_; }

  bool operator==(const Instance& o) const {
    return n_ == o.n_ && lengths_ == o.lengths_ && coords_ == o.coords_;
  }

 private:
  int n_;
  std::vector<Length> lengths_;
  std::optional<std::vector<Point>> coords_;
};

/// Parses the supported TSPLIB subset: TYPE TSP, EDGE_WEIGHT_TYPE in
/// {EUC_2D, EXPLICIT/FULL_MATRIX, EXPLICIT/UPPER_ROW}.
Instance parse_tsplib(const std::string& text);

std::string serialize_tsplib(const Instance& inst,
                             const std::string& name = "instance");

/// n integer points uniform in [0, coord_range]^2, duplicates resampled,
/// zero-rounded lengths lifted to 1. Deterministic for a fixed seed.
Instance random_euclidean(int n, std::uint64_t seed, long long coord_range);

std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);

}  // namespace tspdisk
