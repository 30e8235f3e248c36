#pragma once
#include <optional>
#include <vector>
#include "tropws/numeric.hpp"

namespace tropws {

enum class Rel { LE, GE, EQ };

struct LinearConstraint {
    std::vector<Rat> a;
    Rel rel;
    Rat b;
};

// Exact rational feasibility: two-phase dense simplex with Bland's rule
// over free variables. Returns a point satisfying every constraint, or
// nothing. The returned point is re-checked against the constraints
// before being handed out.
std::optional<std::vector<Rat>> lp_feasible_point(
    const std::vector<LinearConstraint>& cons, size_t nvars);

using IMat = std::vector<std::vector<Int>>;

// ∃ w with eqs·w = 0, ineqs·w >= 0 and strict·w >= 1 (dir=+1) or <= -1
// (dir=-1)? Homogeneous systems are scale invariant, so >=1 stands in
// for strict positivity.
std::optional<std::vector<Rat>> cone_point_where(
    const IMat& ineqs, const IMat& eqs,
    const std::vector<Int>& strict_row, int dir);

} // namespace tropws
