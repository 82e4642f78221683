#pragma once

#include <optional>
#include <vector>

#include "dircut/graph.hpp"
#include "dircut/lp.hpp"
#include "dircut/region.hpp"

namespace dircut {

// What an iteration removed after harvesting boundary edges. Removals are
// gated: if deleting the intended vertices would disconnect (or delete an
// endpoint of) a demand pair still connected in the residual graph, the mode
// is downgraded WholeBalls -> CentersOnly -> None. Without the gate a removal
// can mask a live pair and the returned F fails verification against the
// original instance.
enum class RemovalMode { WholeBalls, CentersOnly, None };

const char* removal_name(RemovalMode m);

struct IterationRecord {
    int index = -1;                 // group (mmw) or pair (mcut) index grown
    double radius = 0.0;
    std::vector<EdgeId> harvested;  // edges newly added to F, sorted by id
    RemovalMode removal = RemovalMode::WholeBalls;
    RadiusScan scan;
    bool fallback_used = false;     // some ball member was undirected-only
};

struct CutResult {
    std::vector<EdgeId> edges;      // F as original edge ids, sorted
    double total_weight = 0.0;
    std::vector<IterationRecord> trace;
    bool valid = false;             // F disconnects every demand in the original graph
};

// Lowest-index demand still violated in the residual graph: a group with two
// terminals joined by a directed path in either direction (mmw), or a pair
// with a forward path (mcut). nullopt when none.
std::optional<int> iterate_order(const Instance& inst, const Graph& residual);

CutResult round_multi_multiway(const Instance& inst, const FractionalSolution& sol,
                               double alpha, double beta);
CutResult round_multicut(const Instance& inst, const FractionalSolution& sol,
                         double alpha, double beta);

}  // namespace dircut
