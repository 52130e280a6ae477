// cds2m — CLI for the 2-connected m-dominating set solver.
//
// Subcommands: generate, solve (GRASP), grc (deterministic greedy +
// correction), exact (small-instance optimum), verify, bench (CSV report).
// Exit codes: 0 feasible/ok, 1 usage or parse error, 2 infeasible,
// 3 exact-solver size limit.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cds2m/grasp.hpp"
#include "cds2m/graph.hpp"
#include "cds2m/log.hpp"
#include "cds2m/oracle.hpp"

using namespace cds2m;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitTooLarge = 3;

struct SolveOptions {
    std::string input;
    int m = 1;
    long long iterations = 25000;
    double alpha = 1.25;
    int candidates = 500;
    std::uint64_t seed = 0;
    int workers = 1;
    long long time_limit_ms = 0; // 0 = none
    bool json = false;
};

std::string join_nodes(const std::vector<int>& nodes) {
    std::ostringstream os;
    for (size_t i = 0; i < nodes.size(); ++i) os << (i ? " " : "") << nodes[i];
    return os.str();
}

int cmd_generate(int nodes, int density, std::uint64_t seed, const std::string& out) {
    InstanceSpec spec{nodes, density, seed};
    Graph g = generate_random(spec);
    save_instance(g, out);
    std::cout << "generated " << out << ": " << instance_name(spec) << " n=" << g.node_count()
              << " density=" << density << "% seed=" << seed << " edges=" << g.edge_count()
              << "\n";
    return kExitOk;
}

int cmd_solve(const SolveOptions& opt) {
    Graph g = load_instance(opt.input);
    GraspParams params;
    params.greedy = {opt.m, opt.candidates, opt.alpha};
    params.max_solutions = opt.iterations;
    params.seed = opt.seed;
    params.parallel_workers = opt.workers;
    if (opt.time_limit_ms > 0) params.time_limit = std::chrono::milliseconds(opt.time_limit_ms);

    ProgressFn progress;
    if (log::info_enabled()) {
        const long long stride = std::max<long long>(1, opt.iterations / 20);
        progress = [stride](long long iteration, int incumbent) {
            if (iteration % stride == 0 || iteration == 1)
                log::out() << "[solve] iteration " << iteration << ", incumbent "
                           << (incumbent < 0 ? std::string("-") : std::to_string(incumbent))
                           << "\n";
        };
    }

    const auto t0 = std::chrono::steady_clock::now();
    auto [best, stats] = grasp_solve(g, params, progress);
    const double total_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    if (opt.json) {
        nlohmann::json rec;
        rec["instance"] = opt.input;
        rec["n"] = g.node_count();
        rec["m"] = opt.m;
        rec["iterations"] = opt.iterations;
        rec["alpha0"] = opt.alpha;
        rec["candidates"] = opt.candidates;
        rec["seed"] = opt.seed;
        rec["workers"] = opt.workers;
        rec["iterations_run"] = stats.iterations_run;
        rec["feasible_iterations"] = stats.feasible_count;
        rec["feasible"] = best.has_value();
        if (best) {
            rec["size"] = best->size();
            rec["nodes"] = best->nodes;
            rec["best_iteration"] = stats.best_iteration;
            rec["best_time_ms"] = std::llround(stats.best_time_ms);
        }
        rec["total_time_ms"] = std::llround(total_ms);
        std::cout << rec.dump(2) << "\n";
        return best ? kExitOk : kExitInfeasible;
    }

    // stdout carries only run-to-run stable fields; timings go to stderr so
    // identical seeds give byte-identical reports.
    std::cout << "instance: " << opt.input << "\n"
              << "n: " << g.node_count() << "\n"
              << "m: " << opt.m << "\n"
              << "iterations: " << stats.iterations_run << "\n"
              << "alpha0: " << opt.alpha << "\n"
              << "candidates: " << opt.candidates << "\n"
              << "seed: " << opt.seed << "\n"
              << "feasible_iterations: " << stats.feasible_count << "\n";
    if (best) {
        std::cout << "feasible: yes\n"
                  << "size: " << best->size() << "\n"
                  << "nodes: " << join_nodes(best->nodes) << "\n"
                  << "best_iteration: " << stats.best_iteration << "\n";
    } else {
        std::cout << "feasible: no\n";
    }
    std::cerr << "best_time_ms: " << std::llround(stats.best_time_ms) << "\n"
              << "total_time_ms: " << std::llround(total_ms) << "\n";
    return best ? kExitOk : kExitInfeasible;
}

int cmd_grc(const std::string& input, int m, int candidates) {
    Graph g = load_instance(input);
    auto sol = grc_solve(g, m, candidates);
    if (!sol) {
        std::cout << "feasible: no\n";
        return kExitInfeasible;
    }
    std::cout << "feasible: yes\n"
              << "size: " << sol->size() << "\n"
              << "nodes: " << join_nodes(sol->nodes) << "\n";
    std::cerr << "time_ms: " << std::llround(sol->elapsed_ms) << "\n";
    return kExitOk;
}

int cmd_exact(const std::string& input, int m, int limit) {
    Graph g = load_instance(input);
    std::optional<Solution> sol;
    try {
        sol = exact_minimum(g, m, limit);
    } catch (const TooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTooLarge;
    }
    if (!sol) {
        std::cout << "no feasible solution\n";
        return kExitInfeasible;
    }
    std::cout << "optimum: " << sol->size() << "\n"
              << "nodes: " << join_nodes(sol->nodes) << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& solution_path, int m) {
    Graph g = load_instance(input);
    std::vector<int> nodes = load_solution(solution_path);
    for (int v : nodes)
        if (v >= g.node_count())
            throw ParseError(solution_path, 1, "node " + std::to_string(v) + " out of range");
    Feasibility f = verify(g, nodes, m);
    if (f.is_feasible) {
        std::cout << "feasible: yes\n";
        return kExitOk;
    }
    std::cout << "feasible: no (" << f.describe() << ")\n";
    return kExitInfeasible;
}

// Suite grammar: "n=30,50;d=30,50,70;m=1,2;seed=1,2" — n and d required,
// m defaults to 1, seed to 1.
struct BenchSuite {
    std::vector<int> n, d, m;
    std::vector<std::uint64_t> seeds;
};

BenchSuite parse_suite(const std::string& text) {
    BenchSuite suite;
    suite.m = {1};
    suite.seeds = {1};
    std::istringstream parts(text);
    std::string part;
    while (std::getline(parts, part, ';')) {
        if (part.empty()) continue;
        const size_t eq = part.find('=');
        if (eq == std::string::npos)
            throw Error("bench suite: expected key=values in '" + part + "'");
        const std::string key = part.substr(0, eq);
        std::vector<long long> values;
        std::istringstream list(part.substr(eq + 1));
        std::string item;
        while (std::getline(list, item, ',')) {
            try {
                values.push_back(std::stoll(item));
            } catch (const std::exception&) {
                throw Error("bench suite: bad number '" + item + "'");
            }
        }
        if (values.empty()) throw Error("bench suite: empty value list for '" + key + "'");
        if (key == "n") suite.n.assign(values.begin(), values.end());
        else if (key == "d") suite.d.assign(values.begin(), values.end());
        else if (key == "m") suite.m.assign(values.begin(), values.end());
        else if (key == "seed") suite.seeds.assign(values.begin(), values.end());
        else throw Error("bench suite: unknown key '" + key + "'");
    }
    if (suite.n.empty() || suite.d.empty())
        throw Error("bench suite: 'n' and 'd' are required, e.g. \"n=30;d=30,50,70;m=1;seed=1\"");
    return suite;
}

int cmd_bench(const std::string& suite_text, const std::string& out_path, long long iterations,
              double alpha, int candidates, int workers, int exact_limit) {
    const BenchSuite suite = parse_suite(suite_text);
    std::ofstream csv(out_path);
    if (!csv) throw Error("cannot write " + out_path);

    csv << "# cds2m bench: iterations=" << iterations << " alpha0=" << alpha
        << " candidates=" << candidates << " workers=" << workers
        << " exact_limit=" << exact_limit << "\n";
    csv << "# exact_size is filled only for n <= exact_limit; '-' marks infeasible, '*' a GrC "
           "miss on a feasible instance\n";
    csv << "# each row regenerates as: generate --nodes <n> --density <d> --seed <seed>; solve "
           "--seed <seed>\n";
    csv << "instance,m,grc_size,grasp_size,grasp_best_iteration,grasp_time_ms,exact_size\n";

    int rows = 0;
    for (int n : suite.n)
        for (int d : suite.d)
            for (std::uint64_t seed : suite.seeds)
                for (int m : suite.m) {
                    InstanceSpec spec{n, d, seed};
                    std::string name = instance_name(spec);
                    if (suite.seeds.size() > 1) name += "_s" + std::to_string(seed);
                    try {
                        Graph g = generate_random(spec);
                        auto grc = grc_solve(g, m, candidates);

                        GraspParams params;
                        params.greedy = {m, candidates, alpha};
                        params.max_solutions = iterations;
                        params.seed = seed;
                        params.parallel_workers = workers;
                        auto [grasp, stats] = grasp_solve(g, params);

                        std::string exact_col;
                        if (n <= exact_limit) {
                            auto exact = exact_minimum(g, m, exact_limit);
                            exact_col = exact ? std::to_string(exact->size()) : "-";
                        }

                        std::string grc_col = grc     ? std::to_string(grc->size())
                                              : grasp ? "*"
                                                      : "-";
                        csv << name << ',' << m << ',' << grc_col << ',';
                        if (grasp)
                            csv << grasp->size() << ',' << stats.best_iteration << ','
                                << std::llround(stats.best_time_ms);
                        else
                            csv << "-,-,-";
                        csv << ',' << exact_col << "\n";
                        std::cerr << "[bench] " << name << " m=" << m << " grc=" << grc_col
                                  << " grasp=" << (grasp ? std::to_string(grasp->size()) : "-")
                                  << "\n";
                    } catch (const std::exception& e) {
                        csv << name << ',' << m << ",-,-,-,-,-\n";
                        std::cerr << "[bench] " << name << " m=" << m << " failed: " << e.what()
                                  << "\n";
                    }
                    ++rows;
                }
    csv.flush();
    std::cout << "wrote " << rows << " rows to " << out_path << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    log::set_level(log::level_from_env());

    CLI::App app{"cds2m: minimum 2-connected m-dominating set solver"};
    app.require_subcommand(1);

    // generate
    int g_nodes = 0, g_density = 0;
    std::uint64_t g_seed = 1;
    std::string g_out;
    auto* gen = app.add_subcommand("generate", "Write a random benchmark instance");
    gen->add_option("--nodes", g_nodes, "node count (>= 3)")->required();
    gen->add_option("--density", g_density, "edge density percent in [1,100]")->required();
    gen->add_option("--seed", g_seed, "generator seed");
    gen->add_option("--out", g_out, "output instance path")->required();

    // solve
    SolveOptions s;
    auto* solve = app.add_subcommand("solve", "Run GRASP on an instance");
    solve->add_option("input", s.input, "instance file")->required();
    solve->add_option("--m", s.m, "domination requirement (default 1)");
    solve->add_option("--iterations", s.iterations, "solution budget (default 25000)");
    solve->add_option("--alpha", s.alpha, "randomization bound alpha0 (default 1.25)");
    solve->add_option("--candidates", s.candidates, "candidate list size M (default 500)");
    solve->add_option("--seed", s.seed, "run seed");
    solve->add_option("--workers", s.workers, "parallel workers (default 1)");
    solve->add_option("--time-limit-ms", s.time_limit_ms, "optional wall-clock budget");
    solve->add_flag("--json", s.json, "machine-readable record on stdout");

    // grc
    std::string grc_input;
    int grc_m = 1, grc_candidates = 500;
    auto* grc = app.add_subcommand("grc", "Deterministic greedy construction + correction");
    grc->add_option("input", grc_input, "instance file")->required();
    grc->add_option("--m", grc_m, "domination requirement (default 1)");
    grc->add_option("--candidates", grc_candidates, "candidate list size M (default 500)");

    // exact
    std::string exact_input;
    int exact_m = 1, exact_node_limit = 16;
    auto* exact = app.add_subcommand("exact", "Exhaustive optimum for small instances");
    exact->add_option("input", exact_input, "instance file")->required();
    exact->add_option("--m", exact_m, "domination requirement (default 1)");
    exact->add_option("--limit", exact_node_limit, "max node count (default 16)");

    // verify
    std::string v_input, v_solution;
    int v_m = 1;
    auto* ver = app.add_subcommand("verify", "Check a solution file against an instance");
    ver->add_option("input", v_input, "instance file")->required();
    ver->add_option("solution", v_solution, "solution file, one node per line")->required();
    ver->add_option("--m", v_m, "domination requirement (default 1)");

    // bench
    std::string b_suite, b_out;
    long long b_iterations = 25000;
    double b_alpha = 1.25;
    int b_candidates = 500, b_workers = 1, b_exact_limit = 16;
    auto* bench = app.add_subcommand("bench", "Run a v{n}_d{density} grid and write CSV");
    bench->add_option("--suite", b_suite, "grid spec, e.g. \"n=30;d=30,50,70;m=1;seed=1\"")
        ->required();
    bench->add_option("--out", b_out, "CSV output path")->required();
    bench->add_option("--iterations", b_iterations, "GRASP budget per row (default 25000)");
    bench->add_option("--alpha", b_alpha, "alpha0 (default 1.25)");
    bench->add_option("--candidates", b_candidates, "candidate list size (default 500)");
    bench->add_option("--workers", b_workers, "workers for GRASP rows");
    bench->add_option("--exact-limit", b_exact_limit, "run the exact solver up to this n");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_generate(g_nodes, g_density, g_seed, g_out);
        if (solve->parsed()) return cmd_solve(s);
        if (grc->parsed()) return cmd_grc(grc_input, grc_m, grc_candidates);
        if (exact->parsed()) return cmd_exact(exact_input, exact_m, exact_node_limit);
        if (ver->parsed()) return cmd_verify(v_input, v_solution, v_m);
        if (bench->parsed())
            return cmd_bench(b_suite, b_out, b_iterations, b_alpha, b_candidates, b_workers,
                             b_exact_limit);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
