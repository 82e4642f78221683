#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dircut/lp.hpp"
#include "test_util.hpp"

using namespace dircut;

namespace {

// All demand pairs whose forward distance the relaxation must push to >= 1.
std::vector<std::pair<VertexId, VertexId>> demands(const Instance& inst) {
    std::vector<std::pair<VertexId, VertexId>> out;
    if (inst.kind == ProblemKind::MultiMultiway) {
        for (const auto& group : inst.groups)
            for (VertexId u : group)
                for (VertexId v : group)
                    if (u != v) out.emplace_back(u, v);
    } else {
        out = inst.pairs;
    }
    return out;
}

void check_sound(const Instance& inst, const FractionalSolution& sol, double tol) {
    CHECK(separation_oracle(inst, sol.lengths, tol) == std::nullopt);
    for (auto [u, v] : demands(inst)) {
        auto p = shortest_dist(inst.graph, sol.lengths, u, v, DistMode::DirectedForward);
        if (p) CHECK(p->length >= 1.0 - tol);
    }
    double recomputed = 0.0;
    for (EdgeId id = 0; id < inst.graph.num_edges(); ++id)
        recomputed += inst.graph.edge(id).weight * sol.lengths[static_cast<size_t>(id)];
    CHECK(sol.objective == doctest::Approx(recomputed).epsilon(1e-9));
    for (size_t i = 1; i < sol.objective_trace.size(); ++i)
        CHECK(sol.objective_trace[i] >= sol.objective_trace[i - 1] - 1e-9);
    for (double v : sol.lengths) CHECK(v >= 0.0);
}

Instance random_mcut(std::mt19937_64& rng) {
    int n = 4 + static_cast<int>(rng() % 3);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && rng() % 100 < 45)
                edges.push_back({u, v, 1.0 + static_cast<double>(rng() % 9)});
    Instance inst;
    inst.kind = ProblemKind::Multicut;
    int k = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < k; ++i) {
        VertexId s = static_cast<VertexId>(rng() % static_cast<unsigned>(n));
        VertexId t = static_cast<VertexId>(rng() % static_cast<unsigned>(n));
        if (s == t) t = (t + 1) % n;
        inst.pairs.emplace_back(s, t);
    }
    inst.graph = Graph(n, std::move(edges));
    return inst;
}

}  // namespace

TEST_CASE("oracle flags the all-zero start and accepts the all-one point") {
    Instance inst = parse_instance("p mcut 2 1 1\ne 0 1 5\nt 0 1\n");
    auto cut = separation_oracle(inst, {0.0}, 1e-6);
    REQUIRE(cut.has_value());
    CHECK(cut->edges == std::vector<EdgeId>{0});
    CHECK(separation_oracle(inst, {1.0}, 1e-6) == std::nullopt);
    // Just inside tolerance counts as satisfied, just outside does not.
    CHECK(separation_oracle(inst, {1.0 - 1e-7}, 1e-6) == std::nullopt);
    CHECK(separation_oracle(inst, {0.99}, 1e-6).has_value());
}

TEST_CASE("oracle scans mcut pairs forward only") {
    Instance inst = parse_instance("p mcut 2 1 1\ne 0 1 1\nt 1 0\n");
    // No directed 1->0 path exists, so nothing to separate even at x = 0.
    CHECK(separation_oracle(inst, {0.0}, 1e-6) == std::nullopt);
}

TEST_CASE("oracle lexicographic pick on the doubled tree") {
    Instance inst = testutil::doubled_tree();
    EdgeLengths x(6, 0.0);
    auto cut = separation_oracle(inst, x, 1e-6);
    REQUIRE(cut.has_value());
    // All six leaf-to-leaf paths have length 0; vertex sequence 1,0,2 wins.
    CHECK(cut->edges == std::vector<EdgeId>{1, 2});
}

TEST_CASE("oracle prefers the most violated (shortest) path") {
    // Pair (0,3) has a long path via 1 and a short one via 2.
    Instance inst = parse_instance(
        "p mcut 4 4 1\ne 0 1 1\ne 1 3 1\ne 0 2 1\ne 2 3 1\nt 0 3\n");
    EdgeLengths x = {0.4, 0.4, 0.1, 0.1};
    auto cut = separation_oracle(inst, x, 1e-6);
    REQUIRE(cut.has_value());
    CHECK(cut->edges == std::vector<EdgeId>{2, 3});
}

TEST_CASE("solve_lp_subproblem matches hand-enumerated optima") {
    CHECK(solve_lp_subproblem({5.0}, {{{0}}}) == EdgeLengths{1.0});
    CHECK(solve_lp_subproblem({2.0, 3.0}, {{{0}}, {{1}}}) == EdgeLengths{1.0, 1.0});
    // Rows {e0,e1} and {e0,e2} with weights (1,10,10): cheapest cover is e0=1.
    EdgeLengths x = solve_lp_subproblem({1.0, 10.0, 10.0}, {{{0, 1}}, {{0, 2}}});
    CHECK(x == EdgeLengths{1.0, 0.0, 0.0});
    CHECK_THROWS_AS(solve_lp_subproblem({1.0}, {{{3}}}), LpError);
}

TEST_CASE("solve_relaxation on a single-edge pair") {
    Instance inst = parse_instance("p mcut 2 1 1\ne 0 1 5\nt 0 1\n");
    FractionalSolution sol = solve_relaxation(inst);
    CHECK(sol.objective == doctest::Approx(5.0));
    CHECK(sol.lengths == EdgeLengths{1.0});
    CHECK(sol.iterations == 1);
    REQUIRE(sol.constraints.size() == 1);
    CHECK(sol.constraints[0].edges == std::vector<EdgeId>{0});
    check_sound(inst, sol, 1e-6);
}

TEST_CASE("solve_relaxation on two separable pairs") {
    Instance inst = parse_instance("p mcut 4 2 2\ne 0 1 1\ne 2 3 1\nt 0 1\nt 2 3\n");
    FractionalSolution sol = solve_relaxation(inst);
    CHECK(sol.objective == doctest::Approx(2.0));
    CHECK(sol.iterations == 2);
    check_sound(inst, sol, 1e-6);
}

TEST_CASE("solve_relaxation pins the doubled-tree optimum at 3") {
    Instance inst = testutil::doubled_tree();
    FractionalSolution sol = solve_relaxation(inst);
    CHECK(sol.objective == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(sol.iterations <= 6);  // only six leaf-to-leaf paths exist
    check_sound(inst, sol, 1e-6);
}

TEST_CASE("solve_relaxation with nothing to separate") {
    Instance inst = parse_instance("p mcut 3 1 1\ne 0 1 1\nt 1 2\n");
    FractionalSolution sol = solve_relaxation(inst);
    CHECK(sol.objective == 0.0);
    CHECK(sol.iterations == 0);
    CHECK(sol.constraints.empty());
    CHECK(sol.lengths == EdgeLengths{0.0});
}

TEST_CASE("iteration cap is a structured failure naming the cap") {
    Instance inst = testutil::doubled_tree();
    try {
        solve_relaxation(inst, 1e-6, 1);
        CHECK(false);
    } catch (const LpError& e) {
        CHECK(std::string(e.what()).find("cap (1)") != std::string::npos);
    }
}

TEST_CASE("relaxation is sound, monotone and deterministic on random instances") {
    std::mt19937_64 rng(20240824);
    for (int trial = 0; trial < 40; ++trial) {
        Instance inst = random_mcut(rng);
        FractionalSolution a = solve_relaxation(inst);
        check_sound(inst, a, 1e-6);
        FractionalSolution b = solve_relaxation(inst);
        CHECK(a.lengths == b.lengths);  // bitwise: same pivots, same rows
        CHECK(a.objective == b.objective);
        CHECK(a.constraints == b.constraints);
        CHECK(a.iterations == b.iterations);
    }
}

TEST_CASE("mmw relaxation separates both orientations of each group pair") {
    // One-directional edge between the two terminals of a group: only the
    // 0->1 orientation admits a path, and it must be cut.
    Instance inst = parse_instance("p mmw 2 1 1\ne 0 1 2\ng 0 1\n");
    FractionalSolution sol = solve_relaxation(inst);
    CHECK(sol.objective == doctest::Approx(2.0));
    CHECK(sol.lengths == EdgeLengths{1.0});
    check_sound(inst, sol, 1e-6);
}
