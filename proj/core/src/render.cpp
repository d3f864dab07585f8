#include "tspdisk/render.hpp"

#include <algorithm>
#include <sstream>

namespace tspdisk {

std::string render_svg(const Instance& inst, const Selection* sel) {
  if (!inst.has_coords()) throw Error("render needs a coordinate instance");
  const auto& pts = inst.coords();
  long long min_x = pts[0].x, max_x = pts[0].x;
  long long min_y = pts[0].y, max_y = pts[0].y;
  for (const auto& p : pts) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const long long span = std::max<long long>({max_x - min_x, max_y - min_y, 1});
  const double scale = 500.0 / static_cast<double>(span);
  const double margin = 30.0;
  auto px = [&](const Point& p) { return margin + scale * (p.x - min_x); };
  // flip y so larger coordinates draw upward
  auto py = [&](const Point& p) { return margin + scale * (max_y - p.y); };

  std::ostringstream out;
  const double w = margin * 2 + scale * (max_x - min_x);
  const double h = margin * 2 + scale * (max_y - min_y);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << " "
      << h << "\">\n";

  if (sel) {
    for (const Tri& t : sel->selected_triangles()) {
      out << "<polygon points=\"" << px(pts[t.a]) << "," << py(pts[t.a]) << " "
          << px(pts[t.b]) << "," << py(pts[t.b]) << " " << px(pts[t.c]) << ","
          << py(pts[t.c])
          << "\" fill=\"#f5c779\" fill-opacity=\"0.45\" stroke=\"#c78f3c\" "
             "stroke-width=\"0.8\"/>\n";
    }
    for (const Edge& e : boundary(*sel)) {
      out << "<line x1=\"" << px(pts[e.u]) << "\" y1=\"" << py(pts[e.u])
          << "\" x2=\"" << px(pts[e.v]) << "\" y2=\"" << py(pts[e.v])
          << "\" stroke=\"#c0392b\" stroke-width=\"2.5\"/>\n";
    }
  }
  for (int i = 0; i < inst.n(); ++i) {
    out << "<circle cx=\"" << px(pts[i]) << "\" cy=\"" << py(pts[i])
        << "\" r=\"4\" fill=\"#2c3e50\"/>\n";
    out << "<text x=\"" << px(pts[i]) + 6 << "\" y=\"" << py(pts[i]) - 6
        << "\" font-size=\"12\" fill=\"#2c3e50\">" << i << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace tspdisk
