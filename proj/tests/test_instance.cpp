#include "doctest.h"
#include "helpers.hpp"
#include "tspdisk/instance.hpp"

using namespace tspdisk;

TEST_CASE("EUC_2D parse: 3-4-5 right triangle") {
  const std::string text =
      "NAME : tri\n"
      "TYPE : TSP\n"
      "DIMENSION : 3\n"
      "EDGE_WEIGHT_TYPE : EUC_2D\n"
      "NODE_COORD_SECTION\n"
      "1 0 0\n"
      "2 30 0\n"
      "3 0 40\n"
      "EOF\n";
  const Instance inst = parse_tsplib(text);
  CHECK(inst.n() == 3);
  CHECK(inst.length(0, 1) == 30);
  CHECK(inst.length(0, 2) == 40);
  CHECK(inst.length(1, 2) == 50);
}

TEST_CASE("EUC_2D parse: unit square scaled by 10") {
  const std::string text =
      "NAME : sq\nTYPE : TSP\nDIMENSION : 4\nEDGE_WEIGHT_TYPE : EUC_2D\n"
      "NODE_COORD_SECTION\n1 0 0\n2 0 10\n3 10 10\n4 10 0\nEOF\n";
  const Instance inst = parse_tsplib(text);
  CHECK(inst.length(0, 1) == 10);
  CHECK(inst.length(1, 2) == 10);
  CHECK(inst.length(2, 3) == 10);
  CHECK(inst.length(0, 3) == 10);
  // nint(10 * sqrt(2)) = 14
  CHECK(inst.length(0, 2) == 14);
  CHECK(inst.length(1, 3) == 14);
}

TEST_CASE("explicit full matrix with a zero off-diagonal entry is rejected") {
  const std::string text =
      "TYPE : TSP\nDIMENSION : 3\nEDGE_WEIGHT_TYPE : EXPLICIT\n"
      "EDGE_WEIGHT_FORMAT : FULL_MATRIX\nEDGE_WEIGHT_SECTION\n"
      "0 0 2\n0 0 3\n2 3 0\nEOF\n";
  CHECK_THROWS_WITH_AS(parse_tsplib(text),
                       doctest::Contains("non-positive length"), Error);
}

TEST_CASE("unsupported weight type and small dimension are rejected") {
  CHECK_THROWS_AS(parse_tsplib("TYPE : TSP\nDIMENSION : 5\n"
                               "EDGE_WEIGHT_TYPE : GEO\nEOF\n"),
                  Error);
  CHECK_THROWS_AS(parse_tsplib("TYPE : TSP\nDIMENSION : 2\n"
                               "EDGE_WEIGHT_TYPE : EUC_2D\n"
                               "NODE_COORD_SECTION\n1 0 0\n2 3 4\nEOF\n"),
                  Error);
}

TEST_CASE("upper-row explicit weights") {
  const std::string text =
      "TYPE : TSP\nDIMENSION : 3\nEDGE_WEIGHT_TYPE : EXPLICIT\n"
      "EDGE_WEIGHT_FORMAT : UPPER_ROW\nEDGE_WEIGHT_SECTION\n30 40 50\nEOF\n";
  const Instance inst = parse_tsplib(text);
  CHECK(inst.length(0, 1) == 30);
  CHECK(inst.length(2, 1) == 50);
}

TEST_CASE("serialize then parse is the identity") {
  for (auto seed : {1u, 2u, 7u}) {
    const Instance inst = random_euclidean(6, seed, 100);
    CHECK(parse_tsplib(serialize_tsplib(inst)) == inst);
  }
  // matrix route, no coordinates
  const Instance m(3, {30, 40, 50});
  CHECK(parse_tsplib(serialize_tsplib(m)) == m);
}

TEST_CASE("random_euclidean determinism and basic shape") {
  const Instance a = random_euclidean(3, 42, 100);
  const Instance b = random_euclidean(3, 42, 100);
  CHECK(a == b);
  CHECK(a.coords().size() == 3);
  CHECK(a.coords()[0] != a.coords()[1]);
  CHECK_THROWS_AS(random_euclidean(8, 1, 4), Error);
}

TEST_CASE("edge lengths are symmetric and at least 1") {
  const Instance inst = random_euclidean(9, 3, 50);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) {
      if (i == j) continue;
      CHECK(inst.length(i, j) == inst.length(j, i));
      CHECK(inst.length(i, j) >= 1);
    }
  CHECK_THROWS_AS(inst.length(0, 9), Error);
}

TEST_CASE("JSON round trip") {
  const Instance inst = random_euclidean(5, 11, 200);
  CHECK(instance_from_json(instance_to_json(inst)) == inst);
  const Instance m(3, {1, 2, 2});
  CHECK(instance_from_json(instance_to_json(m)) == m);
}
