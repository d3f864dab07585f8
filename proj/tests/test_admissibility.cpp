#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "tspdisk/selection.hpp"

using namespace tspdisk;
using testutil::for_each_subset;

TEST_CASE("induce_selection: single triangle at n=3") {
  const Complex cx = full_complex(3);
  const Selection sel = induce_selection(cx, {Tri(0, 1, 2)});
  CHECK(sel.num_selected_triangles() == 1);
  CHECK(sel.num_selected_edges() == 3);
  int incidences = 0;
  for (const auto& zs : sel.z) incidences += zs[0] + zs[1] + zs[2];
  CHECK(incidences == 3);
}

TEST_CASE("induce_selection: two-triangle fan shares an edge") {
  const Complex cx = full_complex(4);
  const Selection sel = induce_selection(cx, {Tri(0, 1, 2), Tri(0, 2, 3)});
  CHECK(sel.num_selected_edges() == 5);
  int incidences = 0;
  for (const auto& zs : sel.z) incidences += zs[0] + zs[1] + zs[2];
  CHECK(incidences == 6);
  CHECK(sel.incidence_count(edge_rank(Edge(0, 2))) == 2);
}

TEST_CASE("induce_selection rejects non-candidates") {
  const Complex cx = restricted_complex(4, {Tri(0, 1, 2)});
  CHECK_THROWS_AS(induce_selection(cx, {Tri(0, 2, 3)}), Error);
}

TEST_CASE("n=3 single triangle is admissible") {
  const Complex cx = full_complex(3);
  const Selection sel = induce_selection(cx, {Tri(0, 1, 2)});
  const Verdict v = check_admissible(sel);
  CHECK(v.admissible);
  for (int city = 0; city < 3; ++city) CHECK(vertex_star_euler(sel, city) == 1);
}

TEST_CASE("n=4 fan is admissible") {
  const Complex cx = full_complex(4);
  const Verdict v =
      check_admissible(induce_selection(cx, {Tri(0, 1, 2), Tri(0, 2, 3)}));
  CHECK(v.admissible);
}

TEST_CASE("three triangles on one edge violate C2 with that edge as witness") {
  const Complex cx = full_complex(5);
  const Selection sel =
      induce_selection(cx, {Tri(0, 1, 2), Tri(0, 1, 3), Tri(0, 1, 4)});
  const Verdict v = check_admissible(sel);
  CHECK_FALSE(v.admissible);
  CHECK(v.violates(Constraint::C2));
  bool witness_found = false;
  for (const auto& viol : v.violations)
    if (viol.constraint == Constraint::C2 &&
        viol.witness.find("{0,1}") != std::string::npos)
      witness_found = true;
  CHECK(witness_found);
}

TEST_CASE("bowtie: two triangles meeting only at a vertex have chi = 2") {
  const Complex cx = full_complex(5);
  const Selection sel = induce_selection(cx, {Tri(0, 1, 2), Tri(0, 3, 4)});
  CHECK(vertex_star_euler(sel, 0) == 2);
  const Verdict v = check_admissible(sel);
  CHECK(v.violates(Constraint::C5));
  CHECK(v.violates(Constraint::C4));  // two components
}

TEST_CASE("vertex with nothing selected has chi = 0") {
  const Complex cx = full_complex(5);
  const Selection sel = induce_selection(cx, {Tri(0, 1, 2)});
  CHECK(vertex_star_euler(sel, 4) == 0);
  CHECK_THROWS_AS(vertex_star_euler(sel, 5), Error);
}

TEST_CASE("empty selection fails the cardinality constraints") {
  const Complex cx = full_complex(4);
  const Verdict v = check_admissible(induce_selection(cx, {}));
  CHECK_FALSE(v.admissible);
  CHECK(v.violates(Constraint::C3a));
  CHECK(v.violates(Constraint::C3b));
  CHECK(v.violates(Constraint::C5));
}

TEST_CASE("boundary of the n=4 fan excludes the shared diagonal") {
  const Complex cx = full_complex(4);
  const Selection sel = induce_selection(cx, {Tri(0, 1, 2), Tri(0, 2, 3)});
  const auto bnd = boundary(sel);
  CHECK(bnd == std::vector<Edge>{Edge(0, 1), Edge(1, 2), Edge(0, 3), Edge(2, 3)});
}

TEST_CASE("decode_tour on the n=4 fan and the n=3 triangle") {
  {
    const Complex cx = full_complex(4);
    const Tour t = decode_tour(induce_selection(cx, {Tri(0, 1, 2), Tri(0, 2, 3)}));
    CHECK(t.order == std::vector<int>{0, 1, 2, 3});
  }
  {
    const Complex cx = full_complex(3);
    const Tour t = decode_tour(induce_selection(cx, {Tri(0, 1, 2)}));
    CHECK(t.order == std::vector<int>{0, 1, 2});
  }
}

TEST_CASE("exhaustive n=5: admissibility agrees with decode-ability (Lemma 2)") {
  const int n = 5;
  const Complex cx = full_complex(n);
  int admissible_count = 0;
  for_each_subset(cx.num_candidates(), n - 2, [&](const std::vector<int>& idx) {
    std::vector<Tri> K;
    for (int i : idx) K.push_back(cx.candidate(i));
    const Selection sel = induce_selection(cx, K);
    const Verdict v = check_admissible(sel);
    bool decoded = false;
    Tour tour;
    try {
      tour = decode_tour(sel);
      decoded = true;
    } catch (const SoundnessError&) {
    }
    if (v.admissible) {
      ++admissible_count;
      REQUIRE(decoded);
      validate_tour(tour, n);
      // structural counts of an abstract disk
      CHECK(boundary(sel).size() == static_cast<std::size_t>(n));
      CHECK(sel.num_selected_edges() == 2 * n - 3);
      for (int city = 0; city < n; ++city)
        CHECK(vertex_star_euler(sel, city) == 1);
    } else {
      CHECK_FALSE(v.violations.empty());
    }
  });
  // (n-1)!/2 tours, Catalan(n-2) fans each: 12 * 5
  CHECK(admissible_count == 60);
}

TEST_CASE("forest refinement: C4 makes chi(H_v)=1 equal single-path links") {
  // with the global tree constraint intact, every admissible star is one
  // component; the bowtie above shows chi counting components otherwise
  const Complex cx = full_complex(6);
  const Selection sel = induce_selection(
      cx, {Tri(0, 1, 2), Tri(0, 2, 3), Tri(0, 3, 4), Tri(0, 4, 5)});
  REQUIRE(check_admissible(sel).admissible);
  for (int v = 0; v < 6; ++v) CHECK(vertex_star_euler(sel, v) == 1);
}

TEST_CASE("selection JSON round trip recomputes the canonical form") {
  const Complex cx = full_complex(4);
  const Selection sel = induce_selection(cx, {Tri(0, 1, 2), Tri(0, 2, 3)});
  const Selection back = selection_from_json(selection_to_json(sel), cx);
  CHECK(back.x == sel.x);
  CHECK(back.y == sel.y);
  CHECK(back.z == sel.z);
}

TEST_CASE("group coverage: admissible selections touch every group") {
  const int n = 5;
  const Complex cx = full_complex(n);
  for_each_subset(cx.num_candidates(), n - 2, [&](const std::vector<int>& idx) {
    std::vector<Tri> K;
    for (int i : idx) K.push_back(cx.candidate(i));
    const Selection sel = induce_selection(cx, K);
    if (!check_admissible(sel).admissible) return;
    for (int v = 0; v < n; ++v) {
      bool touched = false;
      for (int p : cx.group(v))
        if (sel.x[p]) touched = true;
      CHECK(touched);
    }
  });
}
