#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dircut/generator.hpp"
#include "dircut/graph.hpp"
#include "dircut/json_io.hpp"
#include "dircut/lp.hpp"
#include "dircut/oracle.hpp"
#include "dircut/rounding.hpp"

namespace {

using namespace dircut;

// Exit codes: 0 success, 2 parse/input error, 3 LP or parameter failure,
// 4 invalid cut or violated bound, 5 instance too large for exact.
constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitLp = 3;
constexpr int kExitBound = 4;
constexpr int kExitTooLarge = 5;

struct Options {
    std::string input;
    std::string cut_path;
    double alpha = 0.1;
    double beta = 20.504;
    double lp_tol = 1e-6;
    std::string format = "json";
    bool verbose = false;
};

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

CutResult round_any(const Instance& inst, const FractionalSolution& sol, double alpha,
                    double beta) {
    return inst.kind == ProblemKind::MultiMultiway ? round_multi_multiway(inst, sol, alpha, beta)
                                                   : round_multicut(inst, sol, alpha, beta);
}

// Feasibility gate shared by solve/batch: refuse parameters that void the
// radius guarantee instead of failing mid-run.
std::optional<std::string> param_problem(double alpha, double beta) {
    try {
        ParamCheck c = check_params(alpha, beta);
        if (!c.feasible)
            return "infeasible (alpha, beta): ln((beta+1)/beta) = " + std::to_string(c.constraint) +
                   " > alpha/2 = " + std::to_string(alpha / 2.0);
    } catch (const std::invalid_argument& e) {
        return std::string(e.what());
    }
    return std::nullopt;
}

struct SolveOutcome {
    Report report;
    CutResult cut;
    FractionalSolution sol;
};

// solve_relaxation -> round -> verify -> report. Throws ParseError/LpError/
// RadiusError upward; with_exact adds the brute-force optimum when in budget.
SolveOutcome run_pipeline(const Instance& inst, const std::string& id, const Options& opt,
                          bool with_exact) {
    SolveOutcome out;
    auto t0 = std::chrono::steady_clock::now();
    out.sol = solve_relaxation(inst, opt.lp_tol);
    double lp_ms = ms_since(t0);

    auto t1 = std::chrono::steady_clock::now();
    out.cut = round_any(inst, out.sol, opt.alpha, opt.beta);
    double round_ms = ms_since(t1);

    std::optional<ExactCut> exact;
    auto t2 = std::chrono::steady_clock::now();
    if (with_exact) exact = exact_min_cut(inst);
    double exact_ms = ms_since(t2);

    out.report = make_report(inst, out.sol, out.cut, exact, opt.alpha, opt.beta);
    out.report.id = id;
    out.report.lp_ms = lp_ms;
    out.report.round_ms = round_ms;
    out.report.exact_ms = exact_ms;
    return out;
}

bool bound_ok(const Report& r) {
    return r.valid && r.alg_weight <= r.bound * r.vstar + 1e-6;
}

void print_trace(const SolveOutcome& res) {
    std::cerr << "lp: " << res.sol.iterations << " rounds, V* = " << res.sol.objective << ", "
              << res.report.lp_ms << " ms\n";
    for (const IterationRecord& it : res.cut.trace) {
        std::cerr << "grow index=" << it.index << " r=" << it.radius
                  << " harvested=" << it.harvested.size() << " removal=" << removal_name(it.removal)
                  << (it.fallback_used ? " fallback" : "") << "\n  scan " << to_json(it.scan)
                  << '\n';
    }
    std::cerr << "rounding: " << res.report.round_ms << " ms\n";
}

int cmd_solve(const Options& opt) {
    if (auto problem = param_problem(opt.alpha, opt.beta)) {
        std::cerr << "error: " << *problem << '\n';
        return kExitLp;
    }
    Instance inst;
    try {
        inst = load_instance(opt.input);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    }
    SolveOutcome res;
    try {
        res = run_pipeline(inst, opt.input, opt, /*with_exact=*/false);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitLp;
    }
    if (opt.verbose) print_trace(res);
    if (opt.format == "table")
        std::cout << report_table({{res.report, ""}}, false);
    else
        std::cout << to_json(res.report) << '\n';
    return bound_ok(res.report) ? kExitOk : kExitBound;
}

int cmd_exact(const Options& opt) {
    Instance inst;
    try {
        inst = load_instance(opt.input);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    }
    auto t0 = std::chrono::steady_clock::now();
    std::optional<ExactCut> exact = exact_min_cut(inst);
    if (!exact) {
        std::cerr << "error: instance has " << inst.graph.num_edges()
                  << " edges, exact search caps at " << kExactEdgeCap << '\n';
        return kExitTooLarge;
    }
    if (opt.verbose) std::cerr << "exact: " << ms_since(t0) << " ms\n";
    CutResult cut;
    cut.edges = exact->edges;
    cut.total_weight = exact->weight;
    cut.valid = true;
    if (opt.format == "table") {
        std::cout << "weight " << exact->weight << '\n';
        for (EdgeId e : exact->edges) {
            const Edge& ed = inst.graph.edge(e);
            std::cout << "e " << ed.tail << ' ' << ed.head << ' ' << ed.weight << '\n';
        }
    } else {
        std::cout << to_json(cut, inst.graph) << '\n';
    }
    return kExitOk;
}

int cmd_verify(const Options& opt) {
    Instance inst;
    std::vector<EdgeId> cut;
    try {
        inst = load_instance(opt.input);
        cut = parse_cut_file(read_file(opt.cut_path), inst.graph);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    }
    VerifyResult res = verify_cut(inst, cut);
    if (opt.format == "table") {
        if (res.ok) {
            std::cout << "valid\n";
        } else {
            std::cout << "INVALID: path " << res.witness->from << " -> " << res.witness->to
                      << " survives (";
            for (size_t i = 0; i < res.witness->vertices.size(); ++i)
                std::cout << (i ? " " : "") << res.witness->vertices[i];
            std::cout << ")\n";
        }
    } else {
        std::cout << to_json(res) << '\n';
    }
    return res.ok ? kExitOk : 1;
}

int cmd_gen(const GenConfig& config) {
    try {
        std::cout << generate_text(config);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    }
    return kExitOk;
}

int cmd_batch(const Options& opt) {
    if (auto problem = param_problem(opt.alpha, opt.beta)) {
        std::cerr << "error: " << *problem << '\n';
        return kExitLp;
    }
    std::vector<std::filesystem::path> files;
    try {
        for (const auto& entry : std::filesystem::directory_iterator(opt.input))
            if (entry.is_regular_file()) files.push_back(entry.path());
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    }
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.filename() < b.filename(); });

    std::vector<BatchRow> rows;
    bool violated = false;
    for (const auto& path : files) {
        BatchRow row;
        row.report.id = path.filename().string();
        try {
            Instance inst = load_instance(path.string());
            bool with_exact = inst.graph.num_edges() <= kExactEdgeCap;
            SolveOutcome res = run_pipeline(inst, row.report.id, opt, with_exact);
            row.report = res.report;
            if (!bound_ok(res.report)) violated = true;
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }

    if (opt.format == "table") {
        std::cout << report_table(rows, true);
    } else {
        std::string out = "{\"reports\":[";
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i) out += ",";
            if (rows[i].error.empty())
                out += to_json(rows[i].report);
            else
                out += "{\"id\":" + json_quote(rows[i].report.id) +
                       ",\"error\":" + json_quote(rows[i].error) + "}";
        }
        out += "]}";
        std::cout << out << '\n';
    }
    return violated ? kExitBound : kExitOk;
}

int cmd_params(const Options& opt, const std::vector<double>& grid) {
    ParamCheck check;
    try {
        check = check_params(opt.alpha, opt.beta);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    }
    std::optional<ParamCheck> best;
    if (!grid.empty()) {
        try {
            best = param_search(grid);
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kExitParse;
        }
    }
    if (opt.format == "table") {
        auto line = [](const char* tag, const ParamCheck& c) {
            std::printf("%-6s alpha=%.12g beta=%.12g constraint=%.12g slack=%.12g "
                        "objective=%.12g %s\n",
                        tag, c.alpha, c.beta, c.constraint, c.slack, c.objective,
                        c.feasible ? "feasible" : "INFEASIBLE");
        };
        line("check", check);
        if (best) line("best", *best);
    } else {
        if (best)
            std::cout << "{\"check\":" << to_json(check) << ",\"search\":" << to_json(*best) << "}"
                      << '\n';
        else
            std::cout << to_json(check) << '\n';
    }
    return check.feasible ? kExitOk : kExitLp;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LP-rounding solver for directed multicut and multi-multiway cut"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool with_lp) {
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "table"}))
            ->capture_default_str();
        cmd->add_flag("-v,--verbose", opt.verbose, "trace to stderr");
        if (with_lp) {
            cmd->add_option("--alpha", opt.alpha, "region growing alpha")->capture_default_str();
            cmd->add_option("--beta", opt.beta, "region growing beta")->capture_default_str();
            cmd->add_option("--lp-tol", opt.lp_tol, "separation tolerance")
                ->capture_default_str();
        }
    };

    CLI::App* solve = app.add_subcommand("solve", "LP relaxation + region-growing cut");
    solve->add_option("--input", opt.input, "instance file")->required();
    add_common(solve, true);

    CLI::App* exact = app.add_subcommand("exact", "brute-force minimum cut");
    exact->add_option("--input", opt.input, "instance file")->required();
    add_common(exact, false);

    CLI::App* verify = app.add_subcommand("verify", "check a cut file against an instance");
    verify->add_option("--input", opt.input, "instance file")->required();
    verify->add_option("--cut", opt.cut_path, "cut JSON file")->required();
    add_common(verify, false);

    GenConfig gen_config;
    std::string gen_kind = "mmw";
    CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
    gen->add_option("--n", gen_config.n, "vertices")->capture_default_str();
    gen->add_option("--m", gen_config.m, "edges")->capture_default_str();
    gen->add_option("--k", gen_config.k, "groups/pairs")->capture_default_str();
    gen->add_option("--kind", gen_kind, "mmw or mcut")
        ->check(CLI::IsMember({"mmw", "mcut"}))
        ->capture_default_str();
    gen->add_option("--wmin", gen_config.wmin, "minimum weight")->capture_default_str();
    gen->add_option("--wmax", gen_config.wmax, "maximum weight")->capture_default_str();
    gen->add_option("--gmin", gen_config.gmin, "minimum group size")->capture_default_str();
    gen->add_option("--gmax", gen_config.gmax, "maximum group size")->capture_default_str();
    gen->add_option("--seed", gen_config.seed, "random seed")->required();

    CLI::App* batch = app.add_subcommand("batch", "solve every instance in a directory");
    batch->add_option("--input", opt.input, "instance directory")->required();
    add_common(batch, true);

    std::vector<double> grid;
    CLI::App* params = app.add_subcommand("params", "parameter feasibility report");
    params->add_option("--alpha", opt.alpha, "alpha")->capture_default_str();
    params->add_option("--beta", opt.beta, "beta")->capture_default_str();
    params->add_option("--grid", grid, "beta grid for the tight-alpha search");
    params->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    if (solve->parsed()) return cmd_solve(opt);
    if (exact->parsed()) return cmd_exact(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (gen->parsed()) {
        gen_config.kind = gen_kind == "mmw" ? ProblemKind::MultiMultiway : ProblemKind::Multicut;
        return cmd_gen(gen_config);
    }
    if (batch->parsed()) return cmd_batch(opt);
    if (params->parsed()) return cmd_params(opt, grid);
    return kExitOk;
}
