#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "dircut/graph.hpp"

namespace dircut {

// One grown ball. dist holds this center's distance to every vertex (kInf
// where unreachable); members is sorted by vertex id and contains only
// directed-reachable vertices.
struct Region {
    VertexId center = -1;
    double radius = 0.0;
    ProblemKind semantics = ProblemKind::MultiMultiway;
    std::vector<VertexId> members;
    std::vector<EdgeId> boundary;
    std::vector<double> dist;
    bool fallback_used = false;  // an undirected-fallback vertex fell inside r and was excluded
};

// Full trace of one radius search: the distinct center distances
// d_0 = 0 < d_1 < ... < 1/2, the constant boundary weight on each interval
// [d_t, d_{t+1}), and the volume at each breakpoint.
struct RadiusScan {
    std::vector<double> breakpoints;
    std::vector<double> interval_cut_weights;
    std::vector<double> volumes;
    double chosen_r = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double vstar = 0.0;
};

struct RadiusResult {
    double radius = 0.0;
    RadiusScan scan;
    std::vector<Region> regions;  // one per center, grown to the chosen radius
};

// "no radius found": violated precondition or an implementation bug, never a
// normal outcome for feasible lengths and consistent (alpha, beta).
class RadiusError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Closed ball around center: directed-reachable vertices with distance
// <= r + 1e-9. Vertices inside the radius only via the undirected fallback
// are excluded from membership (they carry no length-based volume and would
// wreck the boundary-vs-volume guarantee); regions flag them instead.
std::vector<VertexId> ball(const Graph& g, const EdgeLengths& x, VertexId center, double r,
                           ProblemKind semantics);

// Edges crossing the member set: tail-in/head-out for mcut, exactly one
// endpoint inside (both orientations) for mmw. Sorted by edge id.
std::vector<EdgeId> boundary(const Graph& g, const std::vector<VertexId>& members,
                             ProblemKind semantics);

Region make_region(const Graph& g, const EdgeLengths& x, VertexId center, double r,
                   ProblemKind semantics);

// Total boundary weight; an edge on several balls' boundaries counts once per
// ball.
double cut_weight(const Graph& g, const std::vector<Region>& regions);

// beta*vstar (once per call) + per region: x-volume of edges inside the ball
// plus w(e)*(r - dist(inside endpoint)) for each crossing edge. r may exceed
// the regions' build radius so long as membership is unchanged, which is what
// the per-interval derivative checks rely on.
double volume(const Graph& g, const EdgeLengths& x, const std::vector<Region>& regions, double r,
              double beta, double vstar);

// Smallest r < 1/2 with cut_weight(r) <= alpha * volume(r). Walks the
// breakpoint intervals, on each solving the affine condition exactly; interior
// candidates are capped at 1/2 - 1e-9. Throws RadiusError when no interval
// admits a solution.
RadiusResult find_radius(const Graph& g, const EdgeLengths& x,
                         const std::vector<VertexId>& centers, double alpha, double beta,
                         double vstar, ProblemKind semantics);

// Same scan without the throw: nullopt when no radius below 1/2 exists. Lets
// the rounding loop probe alternative center sets before committing.
std::optional<RadiusResult> try_find_radius(const Graph& g, const EdgeLengths& x,
                                            const std::vector<VertexId>& centers, double alpha,
                                            double beta, double vstar, ProblemKind semantics);

}  // namespace dircut
