#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "tspdisk/complex.hpp"

using namespace tspdisk;

TEST_CASE("edge and triangle colex ranks are dense bijections") {
  int r = 0;
  for (int v = 1; v < 12; ++v)
    for (int u = 0; u < v; ++u) {
      CHECK(edge_rank(Edge(u, v)) == r);
      CHECK(edge_unrank(r) == Edge(u, v));
      ++r;
    }
  long long tr = 0;
  for (int c = 2; c < 9; ++c)
    for (int b = 1; b < c; ++b)
      for (int a = 0; a < b; ++a) CHECK(tri_rank(Tri(a, b, c)) == tr++);
}

TEST_CASE("triangle_edges returns the three 2-subsets") {
  auto es = triangle_edges(Tri(0, 1, 2));
  CHECK(es == std::array<Edge, 3>{Edge(0, 1), Edge(0, 2), Edge(1, 2)});
  es = triangle_edges(Tri(2, 5, 7));
  CHECK(es == std::array<Edge, 3>{Edge(2, 5), Edge(2, 7), Edge(5, 7)});
}

TEST_CASE("full complex counts") {
  const Complex c3 = full_complex(3);
  CHECK(c3.num_candidates() == 1);
  CHECK(c3.num_edges() == 3);
  for (int r = 0; r < 3; ++r) CHECK(c3.tris_of_edge(r).size() == 1);

  const Complex c5 = full_complex(5);
  CHECK(c5.num_candidates() == 10);
  CHECK(c5.num_edges() == 10);
  for (int r = 0; r < c5.num_edges(); ++r)
    CHECK(c5.tris_of_edge(r).size() == 3);  // n - 2

  CHECK(full_complex(10).num_candidates() == 120);
  CHECK_THROWS_AS(full_complex(2), Error);
}

TEST_CASE("group and incidence symmetry in the full complex") {
  const Complex cx = full_complex(6);
  for (int v = 0; v < 6; ++v) {
    CHECK(static_cast<int>(cx.group(v).size()) == 10);  // C(5,2)
    for (int p = 0; p < cx.num_candidates(); ++p) {
      const bool in_group =
          std::find(cx.group(v).begin(), cx.group(v).end(), p) != cx.group(v).end();
      CHECK(in_group == cx.candidate(p).contains(v));
    }
  }
  for (int p = 0; p < cx.num_candidates(); ++p)
    for (int r : cx.candidate_edge_ranks(p)) {
      const auto& back = cx.tris_of_edge(r);
      CHECK(std::find(back.begin(), back.end(), p) != back.end());
    }
}

TEST_CASE("restricted complex") {
  const Complex cx = restricted_complex(4, {Tri(0, 1, 2), Tri(0, 2, 3)});
  CHECK(cx.num_candidates() == 2);
  CHECK(cx.tris_of_edge(edge_rank(Edge(0, 2))).size() == 2);
  CHECK(restricted_complex(4, {}).num_candidates() == 0);
  CHECK_THROWS_AS(restricted_complex(4, {Tri(0, 1, 4)}), Error);
  // duplicates collapse
  CHECK(restricted_complex(4, {Tri(0, 1, 2), Tri(2, 1, 0)}).num_candidates() == 1);
}

TEST_CASE("delaunay: three non-collinear points give the single triangle") {
  const auto tris = delaunay_candidates(testutil::instance_345());
  REQUIRE(tris.size() == 1);
  CHECK(tris[0] == Tri(0, 1, 2));
}

TEST_CASE("delaunay: cocircular square is an explicit error") {
  CHECK_THROWS_WITH_AS(delaunay_candidates(testutil::square10()),
                       doctest::Contains("cocircular"), Error);
}

TEST_CASE("delaunay: four points in general position give two triangles") {
  std::vector<Point> pts{{0, 0}, {10, 0}, {10, 10}, {3, 4}};
  std::vector<Length> tri;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) tri.push_back(euc2d_length(pts[i], pts[j]));
  const Instance inst(4, tri, pts);
  auto got = delaunay_candidates(inst);

  // brute-force float check over all 4 triples
  auto inside = [&](int i, int j, int k, int m) {
    const double ax = pts[i].x, ay = pts[i].y, bx = pts[j].x, by = pts[j].y,
                 cx = pts[k].x, cy = pts[k].y;
    const double d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
    const double ux = ((ax * ax + ay * ay) * (by - cy) +
                       (bx * bx + by * by) * (cy - ay) +
                       (cx * cx + cy * cy) * (ay - by)) / d;
    const double uy = ((ax * ax + ay * ay) * (cx - bx) +
                       (bx * bx + by * by) * (ax - cx) +
                       (cx * cx + cy * cy) * (bx - ax)) / d;
    const double r2 = (ax - ux) * (ax - ux) + (ay - uy) * (ay - uy);
    const double q2 = (pts[m].x - ux) * (pts[m].x - ux) +
                      (pts[m].y - uy) * (pts[m].y - uy);
    return q2 < r2 - 1e-9;
  };
  std::vector<Tri> expected;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k) {
        bool empty = true;
        for (int m = 0; m < 4; ++m)
          if (m != i && m != j && m != k && inside(i, j, k, m)) empty = false;
        if (empty) expected.push_back(Tri(i, j, k));
      }
  CHECK(got == expected);
  CHECK(got.size() == 2);
}

TEST_CASE("delaunay requires coordinates") {
  CHECK_THROWS_AS(delaunay_candidates(Instance(3, {1, 1, 1})), Error);
}

TEST_CASE("triangle list file round trip") {
  std::vector<Tri> tris{Tri(0, 1, 2), Tri(1, 3, 5)};
  CHECK(parse_triangle_list(format_triangle_list(tris)) == tris);
  CHECK_THROWS_AS(parse_triangle_list("0 1\n"), Error);
}
