#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "dircut/graph.hpp"

namespace dircut {

// One covering row of the relaxation: a directed path whose edge lengths must
// sum to at least 1. Edge ids appear in path order.
struct PathConstraint {
    std::vector<EdgeId> edges;
    bool operator==(const PathConstraint&) const = default;
};

struct FractionalSolution {
    EdgeLengths lengths;
    double objective = 0.0;  // V*, equals weights . lengths
    std::vector<PathConstraint> constraints;
    int iterations = 0;  // cutting-plane rounds (one added row each)
    std::vector<double> objective_trace;  // V* after each round, for diagnostics
};

// Structured LP-layer failure: subsolver breakdown, certificate mismatch, or
// the cutting-plane iteration cap.
class LpError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Most-violated covering constraint under x, or nullopt when none is violated
// by more than tol. mmw separates every ordered pair of distinct vertices
// inside a common group; mcut separates each (s_i, t_i) forward only. Among
// violated paths the shortest wins, ties by lexicographic vertex sequence
// (then edge ids, for parallel edges).
std::optional<PathConstraint> separation_oracle(const Instance& inst, const EdgeLengths& x,
                                                double tol);

// Optimal basic solution of min weights.x s.t. each path sum >= 1, x >= 0.
// Verifies the simplex certificate (feasibility + complementary slackness,
// residuals <= 1e-7) and throws LpError when anything is off.
EdgeLengths solve_lp_subproblem(const std::vector<double>& weights,
                                const std::vector<PathConstraint>& constraints);

// Cutting-plane loop: start from x = 0 and no rows, repeatedly add the
// separation oracle's pick and re-solve until no constraint is violated.
// max_iterations 0 selects the default cap of 10 * |V|^2 * k; exceeding the
// cap throws LpError naming it.
FractionalSolution solve_relaxation(const Instance& inst, double tol = 1e-6,
                                    int max_iterations = 0);

}  // namespace dircut
