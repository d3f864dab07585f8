#include "tspdisk/encode.hpp"

namespace tspdisk {

Selection fan_encode(const Tour& tour, int apex_position, const Complex& cx) {
  const int n = cx.n();
  validate_tour(tour, n);
  if (apex_position < 0 || apex_position >= n)
    throw Error("apex position out of range");
  std::vector<int> seq(n);
  for (int i = 0; i < n; ++i) seq[i] = tour.order[(apex_position + i) % n];
  std::vector<Tri> K;
  K.reserve(n - 2);
  for (int i = 1; i + 1 < n; ++i) {
    Tri t(seq[0], seq[i], seq[i + 1]);
    if (cx.candidate_index(t) < 0)
      throw Error("fan triangle " + tri_str(t) + " is not in the complex");
    K.push_back(t);
  }
  return induce_selection(cx, K);
}

Selection fan_encode_any_apex(const Tour& tour, const Complex& cx) {
  std::string last_error;
  for (int apex = 0; apex < cx.n(); ++apex) {
    try {
      return fan_encode(tour, apex, cx);
    } catch (const Error& e) {
      last_error = e.what();
    }
  }
  throw Error("no apex yields a fan inside the complex (last: " + last_error + ")");
}

}  // namespace tspdisk
