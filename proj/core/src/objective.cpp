#include "tspdisk/objective.hpp"

#include "json.hpp"

namespace tspdisk {

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error("objective arithmetic overflow");
  return r;
}

}  // namespace

ObjectiveBreakdown net_weight(const Selection& sel, const Instance& inst) {
  const Complex& cx = *sel.cx;
  if (cx.n() != inst.n()) throw Error("selection and instance disagree on n");
  ObjectiveBreakdown b;
  for (int p = 0; p < cx.num_candidates(); ++p) {
    const auto& ranks = cx.candidate_edge_ranks(p);
    for (int s = 0; s < 3; ++s)
      if (sel.z[p][s])
        b.profit_sum = checked_add(b.profit_sum,
                                   edge_length(inst, edge_unrank(ranks[s])));
  }
  for (int r = 0; r < cx.num_edges(); ++r)
    if (sel.y[r])
      b.cost_sum = checked_add(b.cost_sum, 2 * edge_length(inst, edge_unrank(r)));
  b.net = checked_add(b.profit_sum, -b.cost_sum);
  for (const Edge& e : boundary(sel))
    b.boundary_length = checked_add(b.boundary_length, edge_length(inst, e));
  return b;
}

IdentityStatus check_boundary_identity(const Selection& sel, const Instance& inst) {
  const Verdict v = check_admissible(sel);
  if (v.violates(Constraint::C1) || v.violates(Constraint::C2))
    return IdentityStatus::precondition_violated;
  const ObjectiveBreakdown b = net_weight(sel, inst);
  return -b.net == b.boundary_length ? IdentityStatus::holds
                                     : IdentityStatus::fails;
}

std::string objective_to_json(const ObjectiveBreakdown& b) {
  nlohmann::json j;
  j["profit_sum"] = b.profit_sum;
  j["cost_sum"] = b.cost_sum;
  j["net"] = b.net;
  j["boundary_length"] = b.boundary_length;
  return j.dump(2);
}

}  // namespace tspdisk
