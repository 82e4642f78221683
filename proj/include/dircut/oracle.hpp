#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dircut/graph.hpp"
#include "dircut/lp.hpp"
#include "dircut/rounding.hpp"

namespace dircut {

// A forbidden path that survives the cut: proof that F is not valid.
struct Witness {
    VertexId from = -1;
    VertexId to = -1;
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
};

struct VerifyResult {
    bool ok = false;
    std::optional<Witness> witness;
};

// Removes F and checks every demand: no directed path in either direction
// between two terminals of a common group (mmw), no forward s_i->t_i path
// (mcut). Demands are scanned in instance order; the first surviving
// connection becomes the witness.
VerifyResult verify_cut(const Instance& inst, const std::vector<EdgeId>& f);

struct ExactCut {
    double weight = 0.0;
    std::vector<EdgeId> edges;  // sorted ids
};

inline constexpr int kExactEdgeCap = 24;

// Minimum-weight valid cut by best-first search over edge subsets ordered by
// (total weight, cardinality, lexicographic ids). nullopt when the instance
// has more than edge_budget edges.
std::optional<ExactCut> exact_min_cut(const Instance& inst, int edge_budget = kExactEdgeCap);

struct ParamCheck {
    double alpha = 0.0;
    double beta = 0.0;
    double constraint = 0.0;  // ln((beta+1)/beta)
    double slack = 0.0;       // alpha/2 - constraint
    double objective = 0.0;   // alpha*(1+beta)
    bool feasible = false;    // slack >= 0
};

// Evaluates the region-growing parameter program at (alpha, beta).
ParamCheck check_params(double alpha, double beta);

// Tight alpha = 2 ln((beta+1)/beta) for each grid beta; returns the grid
// point with the smallest objective. The objective decreases toward 2 as
// beta grows and never attains it.
ParamCheck param_search(const std::vector<double>& beta_grid);

struct Report {
    std::string id = "-";
    ProblemKind kind = ProblemKind::MultiMultiway;
    int k = 0;
    double vstar = 0.0;
    double alg_weight = 0.0;
    bool valid = false;
    std::optional<double> opt;
    double ratio_alg_vstar = 1.0;
    std::optional<double> ratio_alg_opt;
    std::optional<double> ratio_vstar_opt;
    double bound = 0.0;  // alpha*(1+beta)*k
    double alpha = 0.0;
    double beta = 0.0;
    // Phase wall times, milliseconds; filled by the caller, excluded from JSON
    // so identical inputs keep byte-identical reports.
    double lp_ms = 0.0;
    double round_ms = 0.0;
    double exact_ms = 0.0;
};

// Assembles the report; ratios with a zero denominator (already-disconnected
// instances) are defined as 1.0, and OPT ratios are absent without an exact
// result.
Report make_report(const Instance& inst, const FractionalSolution& sol, const CutResult& cut,
                   const std::optional<ExactCut>& exact, double alpha, double beta);

}  // namespace dircut
