// Small exact linear programs over the rationals.
#pragma once

#include <optional>
#include <vector>

#include "horofan/cancel.hpp"
#include "horofan/intlin.hpp"

namespace horofan {

struct LPSolution {
  Rational value;
  RatVector x;
};

/// maximize c.x subject to A x <= b, x >= 0, where b >= 0 (so x = 0 is
/// feasible). Returns std::nullopt when the objective is unbounded.
/// Dense tableau simplex with Bland's rule.
std::optional<LPSolution> maximize(const std::vector<RatVector>& A, const RatVector& b, const RatVector& c,
                                   const CancelToken* cancel = nullptr);

}  // namespace horofan
