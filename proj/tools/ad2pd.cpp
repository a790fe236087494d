// ad2pd: almost-disjoint 2-path decompositions from the command line.
//
// Exit codes: 0 feasible / ok, 1 infeasible / violation, 2 budget exhausted,
// 64 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "ad2pd/conflict.hpp"
#include "ad2pd/generate.hpp"
#include "ad2pd/io.hpp"
#include "ad2pd/reduction.hpp"
#include "ad2pd/solve.hpp"

namespace {

using namespace ad2pd;
using nlohmann::json;

constexpr int exit_usage = 64;

int exit_code(Verdict v) {
    switch (v) {
        case Verdict::feasible: return 0;
        case Verdict::infeasible: return 1;
        case Verdict::budget_exhausted: return 2;
    }
    return 1;
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        write_file(out_path, text);
    }
}

std::string triple(const TwoPath& p) {
    return std::to_string(p.ends[0]) + " " + std::to_string(p.ends[1]) + " " + std::to_string(p.ends[2]);
}

json path_json(const TwoPath& p) {
    return {{"path", {p.ends[0], p.ends[1], p.ends[2]}}, {"members", {p.first, p.second}}};
}

struct SolveArgs {
    std::string input, strategy = "auto", weights, out, format = "text";
    std::optional<std::uint64_t> node_limit;
    std::optional<double> time_limit;
};

int run_solve(const SolveArgs& a) {
    const Graph g = parse_graph(read_file(a.input));
    SolveOptions opt;
    const auto strategy = parse_strategy(a.strategy);
    if (!strategy) throw CLI::ValidationError("--strategy", "unknown strategy " + a.strategy);
    opt.strategy = *strategy;
    if (a.node_limit) opt.budget.node_limit = *a.node_limit;
    if (a.time_limit) opt.budget.time_limit_seconds = *a.time_limit;
    if (!a.weights.empty()) opt.weights = parse_weights(read_file(a.weights));

    const SolveReport r = solve(g, opt);
    if (!a.out.empty() && r.verdict == Verdict::feasible) write_file(a.out, format_decomposition(r.decomposition));

    if (a.format == "json") {
        json j{{"verdict", to_string(r.verdict)}, {"strategy", to_string(r.strategy)}, {"time_s", r.seconds}};
        if (r.strategy == Strategy::exact) j["nodes"] = r.nodes;
        if (r.cost) j["cost"] = *r.cost;
        if (r.verdict == Verdict::feasible) {
            j["paths"] = json::array();
            for (const auto& p : r.decomposition) j["paths"].push_back(path_json(p));
        }
        std::cout << j.dump() << '\n';
    } else {
        std::cout << to_string(r.verdict) << " strategy=" << to_string(r.strategy) << '\n';
        if (r.verdict == Verdict::feasible) std::cout << "paths=" << r.decomposition.size() << '\n';
        if (r.cost) std::cout << "cost=" << *r.cost << '\n';
        if (r.strategy == Strategy::exact) std::cout << "nodes=" << r.nodes << '\n';
        std::cout << "time_s=" << std::fixed << std::setprecision(6) << r.seconds << std::defaultfloat << '\n';
        for (const auto& p : r.decomposition) std::cout << triple(p) << '\n';
    }
    return exit_code(r.verdict);
}

int run_analyze(const std::string& input, bool forbidden, const std::string& format) {
    const Graph g = parse_graph(read_file(input));
    const Analysis a = analyze(g, forbidden);
    const std::string girth = a.girth ? std::to_string(*a.girth) : "acyclic";
    const auto path_text = [&](std::uint32_t i) { return "(" + triple(a.conflict_graph.paths[i]) + ")"; };

    if (format == "json") {
        json j{{"girth", a.girth ? json(*a.girth) : json("acyclic")},
               {"twopaths", a.two_paths},
               {"conflict_edges", a.conflict_edges},
               {"clawfree", !a.claw},
               {"series_parallel", a.series_parallel},
               {"strategy", to_string(a.strategy)}};
        if (a.claw) {
            j["claw"] = {{"center", path_json(a.conflict_graph.paths[a.claw->center])}, {"leaves", json::array()}};
            for (auto l : a.claw->leaves) j["claw"]["leaves"].push_back(path_json(a.conflict_graph.paths[l]));
        }
        if (forbidden) j["forbidden"] = a.forbidden ? json(to_string(*a.forbidden)) : json("none");
        std::cout << j.dump() << '\n';
        return 0;
    }
    std::cout << "girth=" << girth << " twopaths=" << a.two_paths << " conflict_edges=" << a.conflict_edges
              << " clawfree=" << (a.claw ? "no" : "yes") << " series_parallel=" << (a.series_parallel ? "yes" : "no")
              << " strategy=" << to_string(a.strategy) << '\n';
    if (a.claw) {
        std::cout << "claw center=" << path_text(a.claw->center) << " leaves=" << path_text(a.claw->leaves[0])
                  << path_text(a.claw->leaves[1]) << path_text(a.claw->leaves[2]) << '\n';
    }
    if (forbidden) std::cout << "forbidden " << (a.forbidden ? to_string(*a.forbidden) : "none") << '\n';
    return 0;
}

std::vector<bool> parse_assignment(const std::string& text, std::size_t variables) {
    std::vector<bool> out(variables, false);
    std::istringstream in(text);
    long lit;
    while (in >> lit) {
        if (lit == 0) continue;
        const auto v = static_cast<std::size_t>(lit < 0 ? -lit : lit);
        if (v > variables) throw CLI::ValidationError("--assignment", "variable out of range");
        out[v - 1] = lit > 0;
    }
    return out;
}

int run_reduce(const std::string& cnf, const std::string& out, const std::string& provenance,
               const std::string& assignment, const std::string& certificate) {
    const CnfFormula f = parse_dimacs_cnf(read_file(cnf));
    const ReductionGraph r = build_reduction(f);
    emit(out, format_graph(r.graph));
    if (!provenance.empty()) write_file(provenance, format_provenance(r));
    if (!assignment.empty()) {
        const auto x = decomposition_from_assignment(r, parse_assignment(assignment, f.variables));
        if (!x) {
            std::cerr << "assignment unsatisfying\n";
            return 1;
        }
        if (!certificate.empty()) write_file(certificate, format_decomposition(*x));
    }
    std::cerr << "vertices=" << r.graph.vertex_count() << " arcs=" << r.graph.member_count() << '\n';
    return 0;
}

int run_verify(const std::string& input, const std::string& decomposition) {
    const Graph g = parse_graph(read_file(input));
    const Decomposition x = parse_decomposition(g, read_file(decomposition));
    if (const auto v = verify_decomposition(g, x)) {
        std::cout << "violation " << v->message << '\n';
        return 1;
    }
    std::cout << "ok paths=" << x.size() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Almost-disjoint 2-path decompositions of graphs and digraphs"};
    app.require_subcommand(1);
    int code = 0;

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Decide or optimize an almost-disjoint 2-path decomposition");
    solve_cmd->add_option("-i,--input", solve_args.input, "Graph file")->required()->check(CLI::ExistingFile);
    solve_cmd->add_option("-s,--strategy", solve_args.strategy, "auto, sp, girth5, clawfree or exact");
    solve_cmd->add_option("-w,--weights", solve_args.weights, "Weight file: <member> <member> <cost> per line")
        ->check(CLI::ExistingFile);
    solve_cmd->add_option("--node-limit", solve_args.node_limit, "Search node limit for the exact oracle");
    solve_cmd->add_option("--time-limit", solve_args.time_limit, "Time limit in seconds for the exact oracle");
    solve_cmd->add_option("-o,--out", solve_args.out, "Write the decomposition (member id pairs) here");
    solve_cmd->add_option("--format", solve_args.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    solve_cmd->callback([&] { code = run_solve(solve_args); });

    std::string analyze_input, analyze_format = "text";
    bool forbidden = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "Girth, conflict graph and claw report");
    analyze_cmd->add_option("-i,--input", analyze_input, "Graph file")->required()->check(CLI::ExistingFile);
    analyze_cmd->add_flag("--forbidden", forbidden, "Also scan for a forbidden subgraph");
    analyze_cmd->add_option("--format", analyze_format, "text or json")->check(CLI::IsMember({"text", "json"}));
    analyze_cmd->callback([&] { code = run_analyze(analyze_input, forbidden, analyze_format); });

    std::string cnf, reduce_out, provenance, assignment, certificate;
    auto* reduce_cmd = app.add_subcommand("reduce", "Build the 3-SAT reduction digraph");
    reduce_cmd->add_option("--cnf", cnf, "DIMACS CNF file")->required()->check(CLI::ExistingFile);
    reduce_cmd->add_option("-o,--out", reduce_out, "Digraph output file (stdout if omitted)");
    reduce_cmd->add_option("--provenance", provenance, "Write gadget-local to global vertex ids here");
    reduce_cmd->add_option("--assignment", assignment, "Satisfying assignment as DIMACS literals, e.g. \"1 -2 3\"");
    reduce_cmd->add_option("--certificate", certificate, "Write the decomposition for --assignment here");
    reduce_cmd->callback([&] { code = run_reduce(cnf, reduce_out, provenance, assignment, certificate); });

    std::string kind, gen_out, random_kind = "undirected";
    std::size_t ops = 10, n = 6, variables = 3, clauses = 1;
    double p = 0.3;
    std::uint64_t seed = 1;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded instance");
    gen_cmd->add_option("kind", kind, "sp, cycle, random or cnf")->required()->check(CLI::IsMember({"sp", "cycle", "random", "cnf"}));
    gen_cmd->add_option("--ops", ops, "sp: number of compositions (arcs = ops + 1)");
    gen_cmd->add_option("-n,--n", n, "cycle/random: vertex count")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--p", p, "random: pair probability")->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--model", random_kind, "random: undirected, oriented or directed")
        ->check(CLI::IsMember({"undirected", "oriented", "directed"}));
    gen_cmd->add_option("--vars", variables, "cnf: variable count");
    gen_cmd->add_option("--clauses", clauses, "cnf: clause count");
    gen_cmd->add_option("--seed", seed, "PRNG seed");
    gen_cmd->add_option("-o,--out", gen_out, "Output file (stdout if omitted)");
    bool undirected_cycle = false;
    gen_cmd->add_flag("--undirected", undirected_cycle, "cycle: undirected instead of directed");
    gen_cmd->callback([&] {
        Rng rng(seed);
        if (kind == "sp") {
            emit(gen_out, format_graph(generate_sp(ops, rng)));
        } else if (kind == "cycle") {
            emit(gen_out, format_graph(generate_cycle(n, !undirected_cycle)));
        } else if (kind == "random") {
            const RandomKind k = random_kind == "oriented"   ? RandomKind::oriented
                                 : random_kind == "directed" ? RandomKind::directed
                                                             : RandomKind::undirected;
            emit(gen_out, format_graph(generate_random(n, p, k, rng)));
        } else {
            emit(gen_out, format_dimacs_cnf(generate_cnf(variables, clauses, rng)));
        }
    });

    std::string verify_input, verify_decomposition_path;
    auto* verify_cmd = app.add_subcommand("verify", "Check a decomposition certificate");
    verify_cmd->add_option("-i,--input", verify_input, "Graph file")->required()->check(CLI::ExistingFile);
    verify_cmd->add_option("-d,--decomposition", verify_decomposition_path, "Decomposition file")
        ->required()
        ->check(CLI::ExistingFile);
    verify_cmd->callback([&] { code = run_verify(verify_input, verify_decomposition_path); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const PreconditionError& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return code;
}
