#include "tspdisk/instance.hpp"

#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

namespace tspdisk {

namespace {

std::size_t upper_tri_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  return static_cast<std::size_t>(i) * (2 * n - i - 1) / 2 + (j - i - 1);
}

}  // namespace

Length euc2d_length(const Point& a, const Point& b) {
  const double dx = static_cast<double>(a.x - b.x);
  const double dy = static_cast<double>(a.y - b.y);
  return static_cast<Length>(std::floor(std::sqrt(dx * dx + dy * dy) + 0.5));
}

Instance::Instance(int n, std::vector<Length> upper_tri,
                   std::optional<std::vector<Point>> coords)
    : n_(n), lengths_(std::move(upper_tri)), coords_(std::move(coords)) {
  if (n_ < 3) throw Error("instance needs at least 3 cities, got " + std::to_string(n_));
  const std::size_t expect = static_cast<std::size_t>(n_) * (n_ - 1) / 2;
  if (lengths_.size() != expect)
    throw Error("length vector has " + std::to_string(lengths_.size()) +
                " entries, expected " + std::to_string(expect));
  for (Length l : lengths_)
    if (l <= 0) throw Error("non-positive length " + std::to_string(l));
  if (coords_ && coords_->size() != static_cast<std::size_t>(n_))
    throw Error("coordinate count does not match n");
}

const std::vector<Point>& Instance::coords() const {
  if (!coords_) throw Error("instance has no coordinates");
  return *coords_;
}

Length Instance::length(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    throw Error("city index out of range");
  if (i == j) throw Error("edge endpoints must differ");
  return lengths_[upper_tri_index(n_, i, j)];
}

namespace {

struct TsplibHeader {
  std::string type;
  std::string edge_weight_type;
  std::string edge_weight_format;
  int dimension = -1;
};

long long require_integral(double v, const std::string& what) {
  const double r = std::floor(v + 0.5);
  if (std::abs(v - r) > 1e-9)
    throw Error("non-integer " + what + ": " + std::to_string(v));
  return static_cast<long long>(r);
}

}  // namespace

Instance parse_tsplib(const std::string& text) {
  TsplibHeader hdr;
  std::optional<std::vector<Point>> coords;
  std::vector<double> weights;
  bool saw_weight_section = false;

  std::istringstream in(text);
  std::string line;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return std::string();
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
  };

  enum class Section { none, coords, weights } section = Section::none;
  int coord_lines = 0;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    if (line == "EOF") break;

    const auto colon = line.find(':');
    std::string key = trim(colon == std::string::npos ? line : line.substr(0, colon));
    std::string value = colon == std::string::npos ? "" : trim(line.substr(colon + 1));

    if (key == "NAME" || key == "COMMENT") {
      continue;
    } else if (key == "TYPE") {
      hdr.type = value;
      if (value != "TSP") throw Error("unsupported TYPE: " + value);
    } else if (key == "DIMENSION") {
      hdr.dimension = std::stoi(value);
    } else if (key == "EDGE_WEIGHT_TYPE") {
      hdr.edge_weight_type = value;
    } else if (key == "EDGE_WEIGHT_FORMAT") {
      hdr.edge_weight_format = value;
    } else if (key == "DISPLAY_DATA_TYPE") {
      continue;
    } else if (key == "NODE_COORD_SECTION") {
      if (hdr.dimension < 3) throw Error("DIMENSION < 3");
      coords.emplace(hdr.dimension);
      section = Section::coords;
    } else if (key == "EDGE_WEIGHT_SECTION") {
      if (hdr.dimension < 3) throw Error("DIMENSION < 3");
      section = Section::weights;
      saw_weight_section = true;
    } else if (section == Section::coords) {
      std::istringstream ls(line);
      int idx;
      double x, y;
      if (!(ls >> idx >> x >> y)) throw Error("malformed coordinate line: " + line);
      if (idx < 1 || idx > hdr.dimension) throw Error("coordinate index out of range");
      (*coords)[idx - 1] = Point{require_integral(x, "coordinate"),
                                 require_integral(y, "coordinate")};
      ++coord_lines;
    } else if (section == Section::weights) {
      std::istringstream ls(line);
      double w;
      while (ls >> w) weights.push_back(w);
    } else {
      throw Error("unexpected line outside any section: " + line);
    }
  }

  const int n = hdr.dimension;
  if (n < 3) throw Error("DIMENSION < 3");

  if (hdr.edge_weight_type == "EUC_2D") {
    if (!coords || coord_lines != n) throw Error("malformed NODE_COORD_SECTION");
    std::vector<Length> tri;
    tri.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const Length l = euc2d_length((*coords)[i], (*coords)[j]);
        if (l <= 0) throw Error("non-positive length between cities " +
                                std::to_string(i) + " and " + std::to_string(j));
        tri.push_back(l);
      }
    return Instance(n, std::move(tri), std::move(coords));
  }

  if (hdr.edge_weight_type == "EXPLICIT") {
    if (!saw_weight_section) throw Error("missing EDGE_WEIGHT_SECTION");
    std::vector<Length> tri(static_cast<std::size_t>(n) * (n - 1) / 2, 0);
    if (hdr.edge_weight_format == "FULL_MATRIX") {
      if (weights.size() != static_cast<std::size_t>(n) * n)
        throw Error("FULL_MATRIX entry count mismatch");
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          const long long w = require_integral(weights[static_cast<std::size_t>(i) * n + j], "weight");
          const long long wt = require_integral(weights[static_cast<std::size_t>(j) * n + i], "weight");
          if (w != wt) throw Error("asymmetric explicit matrix");
          if (i < j) {
            if (w <= 0) throw Error("non-positive length");
            tri[upper_tri_index(n, i, j)] = w;
          }
        }
    } else if (hdr.edge_weight_format == "UPPER_ROW") {
      if (weights.size() != tri.size()) throw Error("UPPER_ROW entry count mismatch");
      for (std::size_t k = 0; k < tri.size(); ++k) {
        const long long w = require_integral(weights[k], "weight");
        if (w <= 0) throw Error("non-positive length");
        tri[k] = w;
      }
    } else {
      throw Error("unsupported EDGE_WEIGHT_FORMAT: " + hdr.edge_weight_format);
    }
    return Instance(n, std::move(tri));
  }

  throw Error("unsupported EDGE_WEIGHT_TYPE: " + hdr.edge_weight_type);
}

std::string serialize_tsplib(const Instance& inst, const std::string& name) {
  std::ostringstream out;
  out << "NAME : " << name << "\n";
  out << "TYPE : TSP\n";
  out << "DIMENSION : " << inst.n() << "\n";
  if (inst.has_coords()) {
    out << "EDGE_WEIGHT_TYPE : EUC_2D\n";
    out << "NODE_COORD_SECTION\n";
    for (int i = 0; i < inst.n(); ++i)
      out << i + 1 << " " << inst.coords()[i].x << " " << inst.coords()[i].y << "\n";
  } else {
    out << "EDGE_WEIGHT_TYPE : EXPLICIT\n";
    out << "EDGE_WEIGHT_FORMAT : UPPER_ROW\n";
    out << "EDGE_WEIGHT_SECTION\n";
    for (Length l : inst.upper_tri()) out << l << "\n";
  }
  out << "EOF\n";
  return out.str();
}

Instance random_euclidean(int n, std::uint64_t seed, long long coord_range) {
  if (n < 3) throw Error("n must be at least 3");
  if (coord_range < n) throw Error("coord_range must be at least n");
  std::mt19937_64 rng(seed);
  // modulo draw keeps results identical across standard libraries
  auto draw = [&]() -> long long {
    return static_cast<long long>(rng() % static_cast<std::uint64_t>(coord_range + 1));
  };
  std::vector<Point> pts;
  std::set<std::pair<long long, long long>> seen;
  while (static_cast<int>(pts.size()) < n) {
    Point p{draw(), draw()};
    if (seen.insert({p.x, p.y}).second) pts.push_back(p);
  }
  std::vector<Length> tri;
  tri.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Length l = euc2d_length(pts[i], pts[j]);
      if (l == 0) l = 1;
      tri.push_back(l);
    }
  return Instance(n, std::move(tri), std::move(pts));
}

std::string instance_to_json(const Instance& inst) {
  nlohmann::json j;
  j["n"] = inst.n();
  if (inst.has_coords()) {
    auto arr = nlohmann::json::array();
    for (const auto& p : inst.coords()) arr.push_back({p.x, p.y});
    j["coords"] = arr;
  } else {
    j["coords"] = nullptr;
  }
  j["lengths"] = inst.upper_tri();
  return j.dump(2);
}

Instance instance_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  const int n = j.at("n").get<int>();
  auto lengths = j.at("lengths").get<std::vector<Length>>();
  std::optional<std::vector<Point>> coords;
  if (j.contains("coords") && !j["coords"].is_null()) {
    coords.emplace();
    for (const auto& p : j["coords"])
      coords->push_back(Point{p.at(0).get<long long>(), p.at(1).get<long long>()});
  }
  return Instance(n, std::move(lengths), std::move(coords));
}

}  // namespace tspdisk
