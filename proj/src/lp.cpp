#include "dircut/lp.hpp"

#include <cmath>
#include <string>

#include "dircut/simplex.hpp"

namespace dircut {

namespace {

constexpr double kCertTol = 1e-7;  // subsolver certificate tolerance

// Demand pairs whose forward distance the LP must push to >= 1.
std::vector<std::pair<VertexId, VertexId>> demand_pairs(const Instance& inst) {
    std::vector<std::pair<VertexId, VertexId>> demands;
    if (inst.kind == ProblemKind::MultiMultiway) {
        for (const std::vector<VertexId>& group : inst.groups)
            for (VertexId u : group)
                for (VertexId v : group)
                    if (u != v) demands.emplace_back(u, v);
    } else {
        demands = inst.pairs;
    }
    return demands;
}

// Midpoint of two optimal vertices, found by solving the same subproblem
// under mirrored variable orders. Covering LPs here routinely have tied
// optima, and an extreme vertex can put all its length on one orientation of
// an antiparallel pair, which collapses ball distances to zero and starves
// the region-growing volume. The midpoint keeps the objective and feasibility
// while spreading length across ties; the outer loop re-separates it.
EdgeLengths solve_balanced(const std::vector<double>& weights,
                           const std::vector<PathConstraint>& constraints) {
    EdgeLengths fwd = solve_lp_subproblem(weights, constraints);
    const size_t n = weights.size();
    if (n == 0) return fwd;
    std::vector<double> wrev(weights.rbegin(), weights.rend());
    std::vector<PathConstraint> crev;
    crev.reserve(constraints.size());
    for (const PathConstraint& c : constraints) {
        PathConstraint mirrored;
        mirrored.edges.reserve(c.edges.size());
        for (EdgeId id : c.edges) mirrored.edges.push_back(static_cast<EdgeId>(n - 1) - id);
        crev.push_back(std::move(mirrored));
    }
    EdgeLengths rev = solve_lp_subproblem(wrev, crev);
    for (size_t j = 0; j < n; ++j) fwd[j] = 0.5 * (fwd[j] + rev[n - 1 - j]);
    return fwd;
}

}  // namespace

std::optional<PathConstraint> separation_oracle(const Instance& inst, const EdgeLengths& x,
                                                double tol) {
    std::optional<PathResult> best;
    for (auto [u, v] : demand_pairs(inst)) {
        std::optional<PathResult> p =
            shortest_dist(inst.graph, x, u, v, DistMode::DirectedForward);
        if (!p || p->length >= 1.0 - tol) continue;
        if (!best || p->length < best->length ||
            (p->length == best->length &&
             (p->vertices < best->vertices ||
              (p->vertices == best->vertices && p->edges < best->edges))))
            best = std::move(p);
    }
    if (!best) return std::nullopt;
    return PathConstraint{std::move(best->edges)};
}

EdgeLengths solve_lp_subproblem(const std::vector<double>& weights,
                                const std::vector<PathConstraint>& constraints) {
    const size_t n = weights.size();
    std::vector<std::vector<double>> rows;
    rows.reserve(constraints.size());
    for (const PathConstraint& c : constraints) {
        std::vector<double> row(n, 0.0);
        for (EdgeId id : c.edges) {
            if (id < 0 || static_cast<size_t>(id) >= n)
                throw LpError("constraint references edge id " + std::to_string(id) +
                              " outside the weight vector");
            row[static_cast<size_t>(id)] = 1.0;
        }
        rows.push_back(std::move(row));
    }
    std::vector<double> rhs(constraints.size(), 1.0);

    SimplexResult res = simplex_minimize(rows, rhs, weights);
    if (res.status == SimplexStatus::Infeasible)
        throw LpError("LP subproblem reported infeasible (covering rows cannot be)");
    if (res.status == SimplexStatus::Unbounded)
        throw LpError("LP subproblem reported unbounded (positive weights forbid it)");

    // Certify the claimed optimum: primal/dual feasibility and complementary
    // slackness, all within kCertTol.
    for (size_t j = 0; j < n; ++j)
        if (res.x[j] < -kCertTol) throw LpError("negative edge length from subsolver");
    std::vector<double> col_slack(n, 0.0);  // c_j - (A^T y)_j
    for (size_t j = 0; j < n; ++j) col_slack[j] = weights[j];
    for (size_t i = 0; i < rows.size(); ++i) {
        if (res.duals[i] < -kCertTol) throw LpError("negative dual from subsolver");
        double lhs = 0.0;
        for (EdgeId id : constraints[i].edges) lhs += res.x[static_cast<size_t>(id)];
        if (lhs < 1.0 - kCertTol) throw LpError("subsolver violated a covering row");
        if (res.duals[i] * (lhs - 1.0) > kCertTol)
            throw LpError("complementary slackness residual exceeded on a row");
        for (EdgeId id : constraints[i].edges)
            col_slack[static_cast<size_t>(id)] -= res.duals[i];
    }
    for (size_t j = 0; j < n; ++j) {
        if (col_slack[j] < -kCertTol) throw LpError("dual infeasibility from subsolver");
        if (res.x[j] * col_slack[j] > kCertTol)
            throw LpError("complementary slackness residual exceeded on a column");
    }

    for (double& v : res.x)
        if (v < 0.0) v = 0.0;
    return std::move(res.x);
}

FractionalSolution solve_relaxation(const Instance& inst, double tol, int max_iterations) {
    const Graph& g = inst.graph;
    std::vector<double> weights(static_cast<size_t>(g.num_edges()));
    for (EdgeId id = 0; id < g.num_edges(); ++id)
        weights[static_cast<size_t>(id)] = g.edge(id).weight;

    const int cap = max_iterations > 0
                        ? max_iterations
                        : 10 * g.num_vertices() * g.num_vertices() * std::max(1, inst.k());

    FractionalSolution sol;
    sol.lengths.assign(weights.size(), 0.0);
    while (true) {
        std::optional<PathConstraint> cut = separation_oracle(inst, sol.lengths, tol);
        if (!cut) break;
        for (const PathConstraint& seen : sol.constraints)
            if (seen == *cut)
                throw LpError("separation oracle repeated a constraint (tolerance livelock)");
        if (sol.iterations + 1 > cap)
            throw LpError("cutting-plane iteration cap (" + std::to_string(cap) + ") exceeded");
        sol.constraints.push_back(std::move(*cut));
        sol.lengths = solve_balanced(weights, sol.constraints);
        sol.objective = 0.0;
        for (size_t j = 0; j < weights.size(); ++j)
            sol.objective += weights[j] * sol.lengths[j];
        ++sol.iterations;
        sol.objective_trace.push_back(sol.objective);
    }
    return sol;
}

}  // namespace dircut
