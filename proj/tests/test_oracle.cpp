#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dircut/graph.hpp"
#include "dircut/oracle.hpp"

using namespace dircut;

namespace {

Instance parse_text(const std::string& text) { return parse_instance(text); }

const char* kTree =
    "p mmw 4 6 1\n"
    "e 0 1 1\ne 1 0 1\n"
    "e 0 2 1\ne 2 0 1\n"
    "e 0 3 1\ne 3 0 1\n"
    "g 1 2 3\n";

// Reference oracle: scan all 2^|E| subsets, keep the best by
// (weight, cardinality, lex ids) with the same id-ordered summation.
ExactCut exact_by_enumeration(const Instance& inst) {
    const int m = inst.graph.num_edges();
    auto pairs = [&] {
        std::vector<std::pair<VertexId, VertexId>> out;
        if (inst.kind == ProblemKind::MultiMultiway) {
            for (const auto& g : inst.groups)
                for (size_t a = 0; a < g.size(); ++a)
                    for (size_t b = 0; b < g.size(); ++b)
                        if (a != b) out.emplace_back(g[a], g[b]);
        } else {
            out = inst.pairs;
        }
        return out;
    }();
    bool have = false;
    ExactCut best;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<EdgeId> f;
        double w = 0.0;
        for (int e = 0; e < m; ++e)
            if (mask & (1u << e)) {
                f.push_back(e);
                w += inst.graph.edge(e).weight;
            }
        Graph residual = inst.graph.remove_edges(f);
        bool ok = true;
        for (auto [from, to] : pairs)
            if (reachable(residual, from, to)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        bool better = !have || w < best.weight ||
                      (w == best.weight && (f.size() < best.edges.size() ||
                                            (f.size() == best.edges.size() && f < best.edges)));
        if (better) {
            best = {w, f};
            have = true;
        }
    }
    REQUIRE(have);
    return best;
}

std::string random_instance_text(std::mt19937_64& rng, ProblemKind kind) {
    std::uniform_int_distribution<int> nd(3, 6), md(3, 10), wd(1, 10), kd(1, 2);
    int n = nd(rng), m = md(rng), k = kd(rng);
    std::ostringstream os;
    os << "p " << (kind == ProblemKind::MultiMultiway ? "mmw" : "mcut") << ' ' << n << ' ' << m
       << ' ' << k << '\n';
    for (int e = 0; e < m; ++e) {
        int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
        int v = std::uniform_int_distribution<int>(0, n - 2)(rng);
        if (v >= u) ++v;
        os << "e " << u << ' ' << v << ' ' << wd(rng) << '\n';
    }
    std::vector<int> ids(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) ids[static_cast<size_t>(i)] = i;
    if (kind == ProblemKind::MultiMultiway) {
        for (int g = 0; g < k; ++g) {
            std::shuffle(ids.begin(), ids.end(), rng);
            int sz = std::uniform_int_distribution<int>(2, 3)(rng);
            os << 'g';
            for (int i = 0; i < sz; ++i) os << ' ' << ids[static_cast<size_t>(i)];
            os << '\n';
        }
    } else {
        for (int p = 0; p < k; ++p) {
            std::shuffle(ids.begin(), ids.end(), rng);
            os << "t " << ids[0] << ' ' << ids[1] << '\n';
        }
    }
    return os.str();
}

}  // namespace

TEST_CASE("verify_cut accepts the full edge set and rejects the empty one") {
    Instance inst = parse_text("p mcut 2 1 1\ne 0 1 5\nt 0 1\n");
    CHECK(verify_cut(inst, {0}).ok);
    auto bad = verify_cut(inst, {});
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->from == 0);
    CHECK(bad.witness->to == 1);
    CHECK(bad.witness->vertices == std::vector<VertexId>{0, 1});
    CHECK(bad.witness->edges == std::vector<EdgeId>{0});
}

TEST_CASE("verify_cut on the doubled tree with the root-outgoing edges removed") {
    Instance inst = parse_text(kTree);
    // Removing 0->1, 0->2, 0->3 (ids 0, 2, 4) leaves only leaf->root edges, so
    // no leaf reaches another leaf.
    CHECK(verify_cut(inst, {0, 2, 4}).ok);
    // Removing only two of them leaves a path between the other two leaves.
    auto bad = verify_cut(inst, {0, 2});
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->from == 1);
    CHECK(bad.witness->to == 3);
    CHECK(bad.witness->vertices == std::vector<VertexId>{1, 0, 3});
}

TEST_CASE("verify_cut witness follows instance demand order") {
    Instance inst = parse_text(
        "p mcut 4 2 2\n"
        "e 0 1 1\n"
        "e 2 3 1\n"
        "t 2 3\n"
        "t 0 1\n");
    auto res = verify_cut(inst, {});
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->from == 2);  // first listed pair wins
    auto res2 = verify_cut(inst, {1});
    REQUIRE(res2.witness.has_value());
    CHECK(res2.witness->from == 0);
}

TEST_CASE("verify_cut rejects out-of-range ids") {
    Instance inst = parse_text("p mcut 2 1 1\ne 0 1 5\nt 0 1\n");
    CHECK_THROWS_AS(verify_cut(inst, {7}), std::invalid_argument);
}

TEST_CASE("exact_min_cut on a single edge") {
    Instance inst = parse_text("p mcut 2 1 1\ne 0 1 5\nt 0 1\n");
    auto res = exact_min_cut(inst);
    REQUIRE(res.has_value());
    CHECK(res->weight == 5.0);
    CHECK(res->edges == std::vector<EdgeId>{0});
}

TEST_CASE("exact_min_cut on the doubled tree is exactly 3") {
    Instance inst = parse_text(kTree);
    auto res = exact_min_cut(inst);
    REQUIRE(res.has_value());
    CHECK(res->weight == 3.0);
    CHECK(res->edges.size() == 3);
    CHECK(verify_cut(inst, res->edges).ok);
}

TEST_CASE("exact_min_cut returns the empty set on a disconnected star") {
    // One-directional star: leaves are mutually unreachable already.
    Instance inst = parse_text(
        "p mmw 4 3 1\n"
        "e 0 1 2\n"
        "e 0 2 2\n"
        "e 0 3 2\n"
        "g 1 2 3\n");
    auto res = exact_min_cut(inst);
    REQUIRE(res.has_value());
    CHECK(res->weight == 0.0);
    CHECK(res->edges.empty());
}

TEST_CASE("exact_min_cut respects the edge budget") {
    // 25 edges: one cheap edge carries the demand, the rest sit off to the
    // side so the raised-budget search still terminates quickly.
    std::ostringstream os;
    os << "p mcut 4 25 1\n";
    os << "e 0 1 1\n";
    for (int i = 0; i < 24; ++i) os << "e 2 3 5\n";
    os << "t 0 1\n";
    Instance inst = parse_text(os.str());
    CHECK_FALSE(exact_min_cut(inst).has_value());
    auto raised = exact_min_cut(inst, 25);
    REQUIRE(raised.has_value());
    CHECK(raised->weight == 1.0);
    CHECK(raised->edges == std::vector<EdgeId>{0});
}

TEST_CASE("exact_min_cut prefers fewer edges then lexicographic ids on ties") {
    // Weight-2 cuts of the path 0->1->2: {0} (one heavy edge) or the two
    // parallel unit edges {1,2}; cardinality picks {0}.
    Instance card = parse_text(
        "p mcut 3 3 1\n"
        "e 0 1 2\n"
        "e 1 2 1\n"
        "e 1 2 1\n"
        "t 0 2\n");
    auto res = exact_min_cut(card);
    REQUIRE(res.has_value());
    CHECK(res->weight == 2.0);
    CHECK(res->edges == std::vector<EdgeId>{0});

    Instance tie = parse_text(
        "p mcut 3 4 1\n"
        "e 0 1 1\n"
        "e 0 2 1\n"
        "e 1 2 1\n"
        "e 2 1 1\n"
        "t 0 2\n");
    // Cuts of weight 2: {0,1}, {1,2} and others; lexicographic ids pick {0,1}.
    auto t = exact_min_cut(tie);
    REQUIRE(t.has_value());
    CHECK(t->weight == 2.0);
    CHECK(t->edges == std::vector<EdgeId>{0, 1});
}

TEST_CASE("exact_min_cut matches full enumeration on random instances") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
        ProblemKind kind = trial % 2 ? ProblemKind::Multicut : ProblemKind::MultiMultiway;
        Instance inst = parse_text(random_instance_text(rng, kind));
        auto fast = exact_min_cut(inst);
        REQUIRE(fast.has_value());
        ExactCut slow = exact_by_enumeration(inst);
        CHECK(fast->weight == slow.weight);
        CHECK(fast->edges == slow.edges);
        CHECK(verify_cut(inst, fast->edges).ok);
    }
}

TEST_CASE("check_params at the default point") {
    ParamCheck c = check_params(0.1, 20.504);
    CHECK(c.feasible);
    CHECK(c.constraint == 0.04761897527896905);
    CHECK(c.slack == 0.0023810247210309526);
    CHECK(c.objective == 2.1504000000000003);
    CHECK(std::abs(c.objective - 2.1504) <= 1e-9);
    CHECK(c.constraint <= 0.05);
    CHECK(c.slack >= 0.002);
}

TEST_CASE("check_params rejects beta = 1 with alpha = 0.1") {
    ParamCheck c = check_params(0.1, 1.0);
    CHECK_FALSE(c.feasible);
    CHECK(c.constraint == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("check_params boundary: alpha = 2 ln 2, beta = 1") {
    ParamCheck c = check_params(2.0 * std::log1p(1.0), 1.0);
    CHECK(c.feasible);
    CHECK(c.slack == 0.0);
    CHECK(c.objective == 2.772588722239781);  // 4 ln 2
}

TEST_CASE("check_params validates its arguments") {
    CHECK_THROWS_AS(check_params(0.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(check_params(0.1, -2.0), std::invalid_argument);
    CHECK_THROWS_AS(check_params(0.0, 1.0), std::invalid_argument);
}

TEST_CASE("param_search tightens alpha and minimizes the objective") {
    ParamCheck single = param_search({20.504});
    CHECK(single.beta == 20.504);
    CHECK(single.alpha == 0.0952379505579381);
    CHECK(single.slack == 0.0);
    CHECK(single.objective == 2.047996888797901);
    // Tight alpha at the same beta beats the default objective.
    CHECK(single.objective < check_params(0.1, 20.504).objective);

    ParamCheck one = param_search({1.0});
    CHECK(one.objective == 2.772588722239781);

    ParamCheck grid = param_search({10.0, 100.0, 1000.0});
    CHECK(grid.beta == 1000.0);
    CHECK(grid.objective == 2.0009996668332333);
    CHECK(param_search({10.0}).objective == 2.096823955695147);
    CHECK(param_search({100.0}).objective == 2.009966832339953);
    // Strictly decreasing along the grid, always above the infimum 2.
    CHECK(2.096823955695147 > 2.009966832339953);
    CHECK(2.009966832339953 > 2.0009996668332333);
    for (double b : {0.5, 1.0, 10.0, 100.0, 1000.0, 20.504})
        CHECK(param_search({b}).objective > 2.0);
}

TEST_CASE("param_search validates the grid") {
    CHECK_THROWS_AS(param_search({}), std::invalid_argument);
    CHECK_THROWS_AS(param_search({10.0, -1.0}), std::invalid_argument);
}

TEST_CASE("make_report arithmetic") {
    Instance inst = parse_text("p mcut 2 1 1\ne 0 1 5\nt 0 1\n");
    FractionalSolution sol;
    sol.objective = 3.0;
    CutResult cut;
    cut.total_weight = 4.0;
    cut.valid = true;
    ExactCut exact{3.0, {0}};
    Report r = make_report(inst, sol, cut, exact, 0.1, 20.504);
    CHECK(r.kind == ProblemKind::Multicut);
    CHECK(r.k == 1);
    CHECK(r.vstar == 3.0);
    CHECK(r.alg_weight == 4.0);
    CHECK(r.valid);
    REQUIRE(r.opt.has_value());
    CHECK(*r.opt == 3.0);
    CHECK(r.ratio_alg_vstar == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    REQUIRE(r.ratio_alg_opt.has_value());
    CHECK(*r.ratio_alg_opt == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    REQUIRE(r.ratio_vstar_opt.has_value());
    CHECK(*r.ratio_vstar_opt == 1.0);
    CHECK(r.bound == doctest::Approx(2.1504).epsilon(1e-12));
    CHECK(r.alpha == 0.1);
    CHECK(r.beta == 20.504);
}

TEST_CASE("make_report omits OPT ratios without an exact result") {
    Instance inst = parse_text("p mcut 2 1 1\ne 0 1 5\nt 0 1\n");
    FractionalSolution sol;
    sol.objective = 5.0;
    CutResult cut;
    cut.total_weight = 5.0;
    cut.valid = true;
    Report r = make_report(inst, sol, cut, std::nullopt, 0.1, 20.504);
    CHECK_FALSE(r.opt.has_value());
    CHECK_FALSE(r.ratio_alg_opt.has_value());
    CHECK_FALSE(r.ratio_vstar_opt.has_value());
    CHECK(r.ratio_alg_vstar == 1.0);
}

TEST_CASE("make_report degenerate zero-cut convention") {
    Instance inst = parse_text("p mmw 4 3 1\ne 0 1 2\ne 0 2 2\ne 0 3 2\ng 1 2 3\n");
    FractionalSolution sol;  // objective 0: nothing to cut
    CutResult cut;
    cut.valid = true;
    Report r = make_report(inst, sol, cut, ExactCut{}, 0.1, 20.504);
    CHECK(r.ratio_alg_vstar == 1.0);
    CHECK(*r.ratio_alg_opt == 1.0);
    CHECK(*r.ratio_vstar_opt == 1.0);
    CHECK(r.bound == doctest::Approx(2.1504).epsilon(1e-12));
}
