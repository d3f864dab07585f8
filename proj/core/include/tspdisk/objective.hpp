#pragma once

#include <string>

#include "tspdisk/selection.hpp"

namespace tspdisk {

struct ObjectiveBreakdown {
  long long profit_sum = 0;     // sum of z * L_e
  long long cost_sum = 0;       // sum of y * 2 L_e
  long long net = 0;            // profit_sum - cost_sum
  long long boundary_length = 0;
  bool operator==(const ObjectiveBreakdown&) const = default;
};

/// Exact integer evaluation of the net weight and the boundary length.
ObjectiveBreakdown net_weight(const Selection& sel, const Instance& inst);

enum class IdentityStatus { holds, fails, precondition_violated };

/// Checks -net == boundary length. Requires C1 and C2; a violated
/// precondition is reported as its own status, not as a failed identity.
IdentityStatus check_boundary_identity(const Selection& sel, const Instance& inst);

std::string objective_to_json(const ObjectiveBreakdown& b);

}  // namespace tspdisk
