#pragma once

#include <vector>

namespace dircut {

enum class SimplexStatus { Optimal, Infeasible, Unbounded };

struct SimplexResult {
    SimplexStatus status = SimplexStatus::Infeasible;
    double objective = 0.0;
    std::vector<double> x;      // primal values, one per variable
    std::vector<double> duals;  // one multiplier per constraint row
    int pivots = 0;             // pivot count across both phases
};

// Minimize cost.x subject to rows[i].x >= rhs[i] and x >= 0, via a two-phase
// dense tableau simplex. Deterministic: Bland's lowest-index entering rule plus
// a lexicographic ratio test, so reruns pivot identically and never cycle.
// Duals are the multipliers of the >= rows (nonnegative at optimality).
SimplexResult simplex_minimize(const std::vector<std::vector<double>>& rows,
                               const std::vector<double>& rhs, const std::vector<double>& cost);

}  // namespace dircut
