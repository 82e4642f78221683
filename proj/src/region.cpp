#include "dircut/region.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dircut {

namespace {

constexpr double kMemberTol = 1e-9;  // closed-ball membership slack
constexpr double kRadiusCap = 0.5 - 1e-9;

// Membership uses the directed distance only. A vertex whose sole connection
// to the center is the undirected fallback stays outside: fallback members
// have no length-based packing argument behind them, and admitting them can
// inflate the boundary weight past alpha*volume for every radius below 1/2
// (e.g. a zero-length edge pointing into the ball from an otherwise
// unreachable vertex). Such vertices set fallback_used instead.
Region region_from_field(const Graph& g, const DistanceField& field, VertexId center, double r,
                         ProblemKind semantics) {
    Region reg;
    reg.center = center;
    reg.radius = r;
    reg.semantics = semantics;
    reg.dist = field.dist;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (!g.vertex_alive(v)) continue;
        if (field.dist[static_cast<size_t>(v)] <= r + kMemberTol) {
            if (field.via_fallback[static_cast<size_t>(v)])
                reg.fallback_used = true;
            else
                reg.members.push_back(v);
        }
    }
    reg.boundary = boundary(g, reg.members, semantics);
    return reg;
}

}  // namespace

std::vector<VertexId> ball(const Graph& g, const EdgeLengths& x, VertexId center, double r,
                           ProblemKind semantics) {
    DistanceField field = paper_dist_all(g, x, center, semantics);
    std::vector<VertexId> members;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (g.vertex_alive(v) && field.dist[static_cast<size_t>(v)] <= r + kMemberTol &&
            !field.via_fallback[static_cast<size_t>(v)])
            members.push_back(v);
    return members;
}

std::vector<EdgeId> boundary(const Graph& g, const std::vector<VertexId>& members,
                             ProblemKind semantics) {
    std::vector<char> inside(static_cast<size_t>(g.num_vertices()), 0);
    for (VertexId v : members) inside[static_cast<size_t>(v)] = 1;
    std::vector<EdgeId> out;
    for (EdgeId id = 0; id < g.num_edges(); ++id) {
        if (!g.edge_alive(id)) continue;
        const Edge& e = g.edge(id);
        const bool tail_in = inside[static_cast<size_t>(e.tail)];
        const bool head_in = inside[static_cast<size_t>(e.head)];
        const bool crossing = semantics == ProblemKind::Multicut ? (tail_in && !head_in)
                                                                 : (tail_in != head_in);
        if (crossing) out.push_back(id);
    }
    return out;
}

Region make_region(const Graph& g, const EdgeLengths& x, VertexId center, double r,
                   ProblemKind semantics) {
    return region_from_field(g, paper_dist_all(g, x, center, semantics), center, r, semantics);
}

double cut_weight(const Graph& g, const std::vector<Region>& regions) {
    double total = 0.0;
    for (const Region& reg : regions)
        for (EdgeId id : reg.boundary) total += g.edge(id).weight;
    return total;
}

double volume(const Graph& g, const EdgeLengths& x, const std::vector<Region>& regions, double r,
              double beta, double vstar) {
    double total = beta * vstar;
    for (const Region& reg : regions) {
        std::vector<char> inside(static_cast<size_t>(g.num_vertices()), 0);
        for (VertexId v : reg.members) inside[static_cast<size_t>(v)] = 1;
        for (EdgeId id = 0; id < g.num_edges(); ++id) {
            if (!g.edge_alive(id)) continue;
            const Edge& e = g.edge(id);
            const bool tail_in = inside[static_cast<size_t>(e.tail)];
            const bool head_in = inside[static_cast<size_t>(e.head)];
            if (tail_in && head_in) {
                total += e.weight * x[static_cast<size_t>(id)];
            } else if (tail_in) {
                total += e.weight * (r - reg.dist[static_cast<size_t>(e.tail)]);
            } else if (head_in && reg.semantics == ProblemKind::MultiMultiway) {
                total += e.weight * (r - reg.dist[static_cast<size_t>(e.head)]);
            }
        }
    }
    return total;
}

std::optional<RadiusResult> try_find_radius(const Graph& g, const EdgeLengths& x,
                                            const std::vector<VertexId>& centers, double alpha,
                                            double beta, double vstar, ProblemKind semantics) {
    std::vector<DistanceField> fields;
    fields.reserve(centers.size());
    for (VertexId c : centers) fields.push_back(paper_dist_all(g, x, c, semantics));

    // Distinct distances below 1/2 are the breakpoints; balls only change
    // there. Merge float-dust near-duplicates tighter than the membership
    // tolerance.
    std::vector<double> breaks = {0.0};
    for (const DistanceField& f : fields)
        for (size_t v = 0; v < f.dist.size(); ++v)
            if (f.dist[v] > 0.0 && f.dist[v] < 0.5 && !f.via_fallback[v])
                breaks.push_back(f.dist[v]);
    std::sort(breaks.begin(), breaks.end());
    std::vector<double> merged;
    for (double d : breaks)
        if (merged.empty() || d - merged.back() > kMemberTol) merged.push_back(d);
    breaks = std::move(merged);

    auto regions_at = [&](double r) {
        std::vector<Region> regions;
        regions.reserve(centers.size());
        for (size_t i = 0; i < centers.size(); ++i)
            regions.push_back(region_from_field(g, fields[i], centers[i], r, semantics));
        return regions;
    };

    RadiusScan scan;
    scan.alpha = alpha;
    scan.beta = beta;
    scan.vstar = vstar;
    scan.breakpoints = breaks;
    for (double d : breaks) {
        std::vector<Region> regions = regions_at(d);
        scan.interval_cut_weights.push_back(cut_weight(g, regions));
        scan.volumes.push_back(volume(g, x, regions, d, beta, vstar));
    }

    const size_t T = breaks.size();
    double chosen = -1.0;
    for (size_t t = 0; t < T; ++t) {
        const double c = scan.interval_cut_weights[t];
        const double v = scan.volumes[t];
        if (c <= alpha * v) {
            chosen = breaks[t];
            break;
        }
        // Affine interior solution of c = alpha * (v + c*(r - d_t)); c > 0
        // here since c > alpha*v >= 0.
        const double cand = breaks[t] + 1.0 / alpha - v / c;
        if (t + 1 < T) {
            if (cand < breaks[t + 1]) {
                chosen = cand;
                break;
            }
        } else if (cand <= kRadiusCap) {
            chosen = cand;
            break;
        }
    }
    if (chosen < 0.0) return std::nullopt;

    RadiusResult result;
    result.radius = chosen;
    scan.chosen_r = chosen;
    result.scan = std::move(scan);
    result.regions = regions_at(chosen);
    return result;
}

RadiusResult find_radius(const Graph& g, const EdgeLengths& x,
                         const std::vector<VertexId>& centers, double alpha, double beta,
                         double vstar, ProblemKind semantics) {
    std::optional<RadiusResult> res = try_find_radius(g, x, centers, alpha, beta, vstar, semantics);
    if (!res)
        throw RadiusError("no radius found below 1/2 (alpha=" + std::to_string(alpha) +
                          ", beta=" + std::to_string(beta) + ", vstar=" + std::to_string(vstar) +
                          "): precondition violated or lengths infeasible");
    return std::move(*res);
}

}  // namespace dircut
