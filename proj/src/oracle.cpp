#include "dircut/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace dircut {

namespace {

// Demands as ordered (from, to) connectivity questions, in instance order:
// every in-group ordered pair for mmw, each (s_i, t_i) for mcut.
std::vector<std::pair<VertexId, VertexId>> demand_pairs(const Instance& inst) {
    std::vector<std::pair<VertexId, VertexId>> out;
    if (inst.kind == ProblemKind::MultiMultiway) {
        for (const auto& group : inst.groups)
            for (size_t a = 0; a < group.size(); ++a)
                for (size_t b = 0; b < group.size(); ++b)
                    if (a != b) out.emplace_back(group[a], group[b]);
    } else {
        out = inst.pairs;
    }
    return out;
}

bool cut_is_valid(const Instance& inst, const Graph& residual) {
    for (auto [from, to] : demand_pairs(inst))
        if (reachable(residual, from, to)) return false;
    return true;
}

}  // namespace

VerifyResult verify_cut(const Instance& inst, const std::vector<EdgeId>& f) {
    const int m = inst.graph.num_edges();
    for (EdgeId e : f)
        if (e < 0 || e >= m) throw std::invalid_argument("edge id out of range in cut");
    Graph residual = inst.graph.remove_edges(f);
    for (auto [from, to] : demand_pairs(inst)) {
        if (auto path = bfs_path(residual, from, to)) {
            Witness w;
            w.from = from;
            w.to = to;
            w.vertices = std::move(path->vertices);
            w.edges = std::move(path->edges);
            return {false, std::move(w)};
        }
    }
    return {true, std::nullopt};
}

std::optional<ExactCut> exact_min_cut(const Instance& inst, int edge_budget) {
    const int m = inst.graph.num_edges();
    if (m > edge_budget) return std::nullopt;

    // Best-first search over edge subsets. Each subset is generated exactly
    // once, by extending its parent with an id larger than the parent's
    // maximum, so sets stay sorted and sums accumulate in id order. Weights
    // are positive, so a child never outranks its parent and the first valid
    // subset popped is the minimum by (weight, cardinality, lex ids).
    struct Node {
        double weight;
        std::vector<EdgeId> edges;
    };
    auto worse = [](const Node& a, const Node& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        if (a.edges.size() != b.edges.size()) return a.edges.size() > b.edges.size();
        return a.edges > b.edges;
    };
    std::priority_queue<Node, std::vector<Node>, decltype(worse)> frontier(worse);
    frontier.push({0.0, {}});
    while (!frontier.empty()) {
        Node cur = frontier.top();
        frontier.pop();
        if (cut_is_valid(inst, inst.graph.remove_edges(cur.edges)))
            return ExactCut{cur.weight, cur.edges};
        EdgeId next = cur.edges.empty() ? 0 : cur.edges.back() + 1;
        for (EdgeId j = next; j < m; ++j) {
            Node child{cur.weight + inst.graph.edge(j).weight, cur.edges};
            child.edges.push_back(j);
            frontier.push(std::move(child));
        }
    }
    // Removing every edge always disconnects all demands, so the queue cannot
    // drain before a valid subset pops.
    throw std::logic_error("exact search exhausted without a valid cut");
}

ParamCheck check_params(double alpha, double beta) {
    if (alpha <= 0.0) throw std::invalid_argument("alpha must be positive");
    if (beta <= 0.0) throw std::invalid_argument("beta must be positive");
    ParamCheck c;
    c.alpha = alpha;
    c.beta = beta;
    c.constraint = std::log1p(1.0 / beta);
    c.slack = alpha / 2.0 - c.constraint;
    c.objective = alpha * (1.0 + beta);
    c.feasible = c.slack >= 0.0;
    return c;
}

ParamCheck param_search(const std::vector<double>& beta_grid) {
    if (beta_grid.empty()) throw std::invalid_argument("empty beta grid");
    std::optional<ParamCheck> best;
    for (double beta : beta_grid) {
        if (beta <= 0.0) throw std::invalid_argument("beta must be positive");
        // Tightest feasible alpha for this beta; slack lands on exactly zero.
        ParamCheck c = check_params(2.0 * std::log1p(1.0 / beta), beta);
        if (!best || c.objective < best->objective) best = c;
    }
    return *best;
}

Report make_report(const Instance& inst, const FractionalSolution& sol, const CutResult& cut,
                   const std::optional<ExactCut>& exact, double alpha, double beta) {
    Report r;
    r.kind = inst.kind;
    r.k = inst.k();
    r.vstar = sol.objective;
    r.alg_weight = cut.total_weight;
    r.valid = cut.valid;
    r.ratio_alg_vstar = r.vstar > 0.0 ? r.alg_weight / r.vstar : 1.0;
    if (exact) {
        r.opt = exact->weight;
        r.ratio_alg_opt = exact->weight > 0.0 ? r.alg_weight / exact->weight : 1.0;
        r.ratio_vstar_opt = exact->weight > 0.0 ? r.vstar / exact->weight : 1.0;
    }
    r.bound = alpha * (1.0 + beta) * r.k;
    r.alpha = alpha;
    r.beta = beta;
    return r;
}

}  // namespace dircut
