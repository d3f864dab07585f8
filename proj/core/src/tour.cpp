#include "tspdisk/tour.hpp"

#include <algorithm>
#include <sstream>

namespace tspdisk {

void validate_tour(const Tour& t, int n) {
  if (static_cast<int>(t.order.size()) != n)
    throw Error("tour has " + std::to_string(t.order.size()) +
                " cities, expected " + std::to_string(n));
  std::vector<char> seen(n, 0);
  for (int c : t.order) {
    if (c < 0 || c >= n) throw Error("tour city out of range: " + std::to_string(c));
    if (seen[c]) throw Error("repeated city in tour: " + std::to_string(c));
    seen[c] = 1;
  }
}

Tour canonical_tour(const Tour& t) {
  const int n = static_cast<int>(t.order.size());
  validate_tour(t, n);
  const auto it = std::find(t.order.begin(), t.order.end(), 0);
  Tour out;
  out.order.reserve(n);
  const int start = static_cast<int>(it - t.order.begin());
  for (int i = 0; i < n; ++i) out.order.push_back(t.order[(start + i) % n]);
  if (n > 2 && out.order.back() < out.order[1])
    std::reverse(out.order.begin() + 1, out.order.end());
  return out;
}

Length tour_length(const Tour& t, const Instance& inst) {
  validate_tour(t, inst.n());
  Length total = 0;
  const int n = inst.n();
  for (int i = 0; i < n; ++i)
    total += inst.length(t.order[i], t.order[(i + 1) % n]);
  return total;
}

Tour parse_tour(const std::string& text) {
  Tour t;
  std::istringstream in(text);
  int c;
  while (in >> c) t.order.push_back(c);
  if (t.order.empty()) throw Error("empty tour");
  return t;
}

std::string format_tour(const Tour& t) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.order.size(); ++i) {
    if (i) out << " ";
    out << t.order[i];
  }
  return out.str();
}

}  // namespace tspdisk
