#include "tspdisk/complex.hpp"

#include <algorithm>
#include <sstream>

namespace tspdisk {

Tri::Tri(int x, int y, int z) {
  int v[3] = {x, y, z};
  std::sort(v, v + 3);
  a = v[0];
  b = v[1];
  c = v[2];
  if (a < 0 || a == b || b == c) throw Error("invalid triangle " + tri_str(*this));
}

int edge_rank(const Edge& e) { return e.v * (e.v - 1) / 2 + e.u; }

Edge edge_unrank(int rank) {
  int v = 1;
  while ((v + 1) * v / 2 <= rank) ++v;
  return Edge(rank - v * (v - 1) / 2, v);
}

long long tri_rank(const Tri& t) {
  const long long c3 = static_cast<long long>(t.c) * (t.c - 1) * (t.c - 2) / 6;
  return c3 + static_cast<long long>(t.b) * (t.b - 1) / 2 + t.a;
}

std::array<Edge, 3> triangle_edges(const Tri& t) {
  return {Edge(t.a, t.b), Edge(t.a, t.c), Edge(t.b, t.c)};
}

std::string edge_str(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

std::string tri_str(const Tri& t) {
  return "(" + std::to_string(t.a) + "," + std::to_string(t.b) + "," +
         std::to_string(t.c) + ")";
}

Length edge_length(const Instance& inst, const Edge& e) {
  return inst.length(e.u, e.v);
}

Complex::Complex(int n, std::vector<Tri> candidates) : n_(n) {
  if (n_ < 3) throw Error("complex needs n >= 3");
  for (const Tri& t : candidates)
    if (t.c >= n_) throw Error("triangle " + tri_str(t) + " out of range for n=" + std::to_string(n_));
  std::sort(candidates.begin(), candidates.end(),
            [](const Tri& x, const Tri& y) { return tri_rank(x) < tri_rank(y); });
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  tris_ = std::move(candidates);

  const long long total = static_cast<long long>(n_) * (n_ - 1) * (n_ - 2) / 6;
  rank_to_pos_.assign(static_cast<std::size_t>(total), -1);
  edge_to_tris_.assign(num_edges(), {});
  groups_.assign(n_, {});
  edge_ranks_.reserve(tris_.size());
  for (int pos = 0; pos < static_cast<int>(tris_.size()); ++pos) {
    const Tri& t = tris_[pos];
    rank_to_pos_[tri_rank(t)] = pos;
    const auto es = triangle_edges(t);
    std::array<int, 3> ranks{edge_rank(es[0]), edge_rank(es[1]), edge_rank(es[2])};
    std::sort(ranks.begin(), ranks.end());
    edge_ranks_.push_back(ranks);
    for (int r : ranks) edge_to_tris_[r].push_back(pos);
    groups_[t.a].push_back(pos);
    groups_[t.b].push_back(pos);
    groups_[t.c].push_back(pos);
  }
}

int Complex::candidate_index(const Tri& t) const {
  const long long r = tri_rank(t);
  if (r < 0 || r >= static_cast<long long>(rank_to_pos_.size())) return -1;
  return rank_to_pos_[r];
}

Complex full_complex(int n) {
  if (n < 3) throw Error("full_complex needs n >= 3");
  std::vector<Tri> tris;
  tris.reserve(static_cast<std::size_t>(n) * (n - 1) * (n - 2) / 6);
  for (int c = 2; c < n; ++c)
    for (int b = 1; b < c; ++b)
      for (int a = 0; a < b; ++a) tris.emplace_back(a, b, c);
  return Complex(n, std::move(tris));
}

Complex restricted_complex(int n, std::vector<Tri> triangles) {
  return Complex(n, std::move(triangles));
}

namespace {

using i128 = __int128;

i128 orient2d(const Point& a, const Point& b, const Point& c) {
  return static_cast<i128>(b.x - a.x) * (c.y - a.y) -
         static_cast<i128>(b.y - a.y) * (c.x - a.x);
}

// Sign of the incircle determinant for (a,b,c) counterclockwise; positive
// when d lies strictly inside the circumcircle.
i128 incircle(const Point& a, const Point& b, const Point& c, const Point& d) {
  const i128 adx = a.x - d.x, ady = a.y - d.y;
  const i128 bdx = b.x - d.x, bdy = b.y - d.y;
  const i128 cdx = c.x - d.x, cdy = c.y - d.y;
  const i128 ad2 = adx * adx + ady * ady;
  const i128 bd2 = bdx * bdx + bdy * bdy;
  const i128 cd2 = cdx * cdx + cdy * cdy;
  return adx * (bdy * cd2 - cdy * bd2) - ady * (bdx * cd2 - cdx * bd2) +
         ad2 * (bdx * cdy - cdx * bdy);
}

}  // namespace

std::vector<Tri> delaunay_candidates(const Instance& inst) {
  if (!inst.has_coords()) throw Error("delaunay_candidates needs coordinates");
  const auto& pts = inst.coords();
  const int n = inst.n();
  std::vector<Tri> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        i128 o = orient2d(pts[i], pts[j], pts[k]);
        if (o == 0) continue;  // degenerate triangle
        // orient counterclockwise for the incircle sign convention
        const Point& p0 = pts[i];
        const Point& p1 = o > 0 ? pts[j] : pts[k];
        const Point& p2 = o > 0 ? pts[k] : pts[j];
        bool empty = true;
        for (int m = 0; m < n && empty; ++m) {
          if (m == i || m == j || m == k) continue;
          const i128 s = incircle(p0, p1, p2, pts[m]);
          if (s == 0)
            throw Error("cocircular degeneracy: cities " + std::to_string(i) +
                        "," + std::to_string(j) + "," + std::to_string(k) +
                        "," + std::to_string(m) + " lie on one circle");
          if (s > 0) empty = false;
        }
        if (empty) out.emplace_back(i, j, k);
      }
  return out;
}

std::vector<Tri> parse_triangle_list(const std::string& text) {
  std::vector<Tri> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    int a, b, c;
    if (!(ls >> a >> b >> c)) throw Error("malformed triangle line: " + line);
    out.emplace_back(a, b, c);
  }
  return out;
}

std::string format_triangle_list(const std::vector<Tri>& tris) {
  std::ostringstream out;
  for (const Tri& t : tris) out << t.a << " " << t.b << " " << t.c << "\n";
  return out.str();
}

}  // namespace tspdisk
