#include "dircut/rounding.hpp"

#include <algorithm>
#include <string>

namespace dircut {

namespace {

// Ordered demand pairs: all in-group pairs for mmw, the instance pairs for
// mcut. Pair-level granularity (not group-level) so the removal gate can see
// every connection the final verifier will check.
std::vector<std::pair<VertexId, VertexId>> demand_list(const Instance& inst) {
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

bool any_connected(const Graph& g, const std::vector<std::pair<VertexId, VertexId>>& demands) {
    for (auto [u, v] : demands)
        if (reachable(g, u, v)) return true;
    return false;
}

// True when removing `victims` would hide a demand that is still connected:
// afterwards the pair is either gone or no longer joined, so later iterations
// could never cut it and F would fail against the original graph.
bool removal_safe(const Graph& residual,
                  const std::vector<std::pair<VertexId, VertexId>>& demands,
                  const std::vector<VertexId>& victims) {
    Graph after = residual.remove_vertices(victims);
    for (auto [u, v] : demands)
        if (reachable(residual, u, v) && !reachable(after, u, v)) return false;
    return true;
}

std::vector<VertexId> member_union(const std::vector<Region>& regions) {
    std::vector<VertexId> all;
    for (const Region& reg : regions) all.insert(all.end(), reg.members.begin(), reg.members.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

bool in_members(const Region& reg, VertexId v) {
    return std::binary_search(reg.members.begin(), reg.members.end(), v);
}

// Algorithm 1's if-branch: some ball holds two vertices of a common group
// with a residual path between them (either direction). Algorithm 2's
// if-branch: the ball holds both endpoints of a pair with a forward path.
bool ball_traps_live_pair(const Instance& inst, const Graph& residual,
                          const std::vector<Region>& regions) {
    if (inst.kind == ProblemKind::MultiMultiway) {
        for (const Region& reg : regions)
            for (const std::vector<VertexId>& group : inst.groups)
                for (VertexId u : group) {
                    if (!in_members(reg, u)) continue;
                    for (VertexId v : group)
                        if (v != u && in_members(reg, v) && reachable(residual, u, v))
                            return true;
                }
    } else {
        for (const Region& reg : regions)
            for (auto [s, t] : inst.pairs)
                if (in_members(reg, s) && in_members(reg, t) && reachable(residual, s, t))
                    return true;
    }
    return false;
}

struct Grow {
    std::vector<VertexId> centers;
    RadiusResult result;
};

// Center-set cascade for one mmw iteration. Balls around the whole group are
// the first choice, but the bidirectional distance lets a group ball swallow
// its zero-length reverse cone, and then no radius below 1/2 satisfies
// c <= alpha*v for any feasible lengths (the packing bound behind the radius
// guarantee only covers single forward balls). Fall back to one terminal at a
// time — islanding a lone center still cuts every pair through it — and
// finally to a forward ball around the source of a violated pair harvested on
// the outgoing side only, for which a radius below 1/2 always exists.
Grow grow_mmw(const Instance& inst, const Graph& residual, const FractionalSolution& sol,
              double alpha, double beta, int idx) {
    std::vector<VertexId> centers;
    for (VertexId v : inst.groups[static_cast<size_t>(idx)])
        if (residual.vertex_alive(v)) centers.push_back(v);
    if (std::optional<RadiusResult> rr =
            try_find_radius(residual, sol.lengths, centers, alpha, beta, sol.objective,
                            ProblemKind::MultiMultiway))
        return {centers, std::move(*rr)};
    if (centers.size() > 1)
        for (VertexId v : centers)
            if (std::optional<RadiusResult> rr =
                    try_find_radius(residual, sol.lengths, {v}, alpha, beta, sol.objective,
                                    ProblemKind::MultiMultiway))
                return {{v}, std::move(*rr)};
    for (VertexId u : centers) {
        bool source_of_live_pair = false;
        for (VertexId v : inst.groups[static_cast<size_t>(idx)])
            if (v != u && reachable(residual, u, v)) source_of_live_pair = true;
        if (!source_of_live_pair) continue;
        if (std::optional<RadiusResult> rr = try_find_radius(
                residual, sol.lengths, {u}, alpha, beta, sol.objective, ProblemKind::Multicut))
            return {{u}, std::move(*rr)};
    }
    // Unreachable for feasible lengths; surface the structured error.
    return {centers, find_radius(residual, sol.lengths, centers, alpha, beta, sol.objective,
                                 ProblemKind::MultiMultiway)};
}

CutResult round_core(const Instance& inst, const FractionalSolution& sol, double alpha,
                     double beta) {
    const Graph& g0 = inst.graph;
    const std::vector<std::pair<VertexId, VertexId>> demands = demand_list(inst);

    CutResult out;
    Graph residual = g0;
    std::vector<char> in_f(static_cast<size_t>(g0.num_edges()), 0);
    // Every grow permanently resolves at least one demand direction, so the
    // cap only guards against an internal livelock.
    int terminals = 0;
    for (const std::vector<VertexId>& grp : inst.groups) terminals += static_cast<int>(grp.size());
    const int cap = 2 * terminals + inst.k() + g0.num_vertices() + g0.num_edges() + 8;
    int passes = 0;

    while (std::optional<int> pick = iterate_order(inst, residual)) {
        if (++passes > cap)
            throw RadiusError("rounding loop stalled without progress (internal error)");
        const int idx = *pick;

        std::vector<VertexId> centers;
        RadiusResult rr;
        if (inst.kind == ProblemKind::MultiMultiway) {
            Grow grown = grow_mmw(inst, residual, sol, alpha, beta, idx);
            centers = std::move(grown.centers);
            rr = std::move(grown.result);
        } else {
            centers.push_back(inst.pairs[static_cast<size_t>(idx)].first);
            rr = find_radius(residual, sol.lengths, centers, alpha, beta, sol.objective,
                             inst.kind);
        }

        IterationRecord rec;
        rec.index = idx;
        rec.radius = rr.radius;
        rec.scan = std::move(rr.scan);
        for (const Region& reg : rr.regions) rec.fallback_used = rec.fallback_used || reg.fallback_used;

        for (const Region& reg : rr.regions)
            for (EdgeId e : reg.boundary)
                if (!in_f[static_cast<size_t>(e)]) {
                    in_f[static_cast<size_t>(e)] = 1;
                    rec.harvested.push_back(e);
                }
        std::sort(rec.harvested.begin(), rec.harvested.end());
        residual = residual.remove_edges(rec.harvested);

        const bool centers_only = ball_traps_live_pair(inst, residual, rr.regions);
        rec.removal = RemovalMode::None;
        if (!centers_only) {
            std::vector<VertexId> balls = member_union(rr.regions);
            if (removal_safe(residual, demands, balls)) {
                residual = residual.remove_vertices(balls);
                rec.removal = RemovalMode::WholeBalls;
            }
        }
        if (rec.removal == RemovalMode::None && removal_safe(residual, demands, centers)) {
            residual = residual.remove_vertices(centers);
            rec.removal = RemovalMode::CentersOnly;
        }
        out.trace.push_back(std::move(rec));
    }

    for (EdgeId e = 0; e < g0.num_edges(); ++e)
        if (in_f[static_cast<size_t>(e)]) {
            out.edges.push_back(e);
            out.total_weight += g0.edge(e).weight;
        }
    out.valid = !any_connected(g0.remove_edges(out.edges), demands);
    return out;
}

}  // namespace

const char* removal_name(RemovalMode m) {
    switch (m) {
        case RemovalMode::WholeBalls: return "whole-balls";
        case RemovalMode::CentersOnly: return "centers-only";
        case RemovalMode::None: return "none";
    }
    return "unknown";
}

std::optional<int> iterate_order(const Instance& inst, const Graph& residual) {
    if (inst.kind == ProblemKind::MultiMultiway) {
        for (size_t i = 0; i < inst.groups.size(); ++i)
            for (VertexId u : inst.groups[i])
                for (VertexId v : inst.groups[i])
                    if (u != v && reachable(residual, u, v)) return static_cast<int>(i);
    } else {
        for (size_t i = 0; i < inst.pairs.size(); ++i)
            if (reachable(residual, inst.pairs[i].first, inst.pairs[i].second))
                return static_cast<int>(i);
    }
    return std::nullopt;
}

CutResult round_multi_multiway(const Instance& inst, const FractionalSolution& sol, double alpha,
                               double beta) {
    if (inst.kind != ProblemKind::MultiMultiway)
        throw std::invalid_argument("round_multi_multiway needs an mmw instance");
    return round_core(inst, sol, alpha, beta);
}

CutResult round_multicut(const Instance& inst, const FractionalSolution& sol, double alpha,
                         double beta) {
    if (inst.kind != ProblemKind::Multicut)
        throw std::invalid_argument("round_multicut needs an mcut instance");
    return round_core(inst, sol, alpha, beta);
}

}  // namespace dircut
