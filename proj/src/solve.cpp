#include "ad2pd/solve.hpp"

#include <chrono>

#include "ad2pd/girth.hpp"
#include "ad2pd/matching.hpp"
#include "ad2pd/sp.hpp"
#include "ad2pd/stable_set.hpp"

namespace ad2pd {

const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::automatic: return "auto";
        case Strategy::sp: return "sp";
        case Strategy::girth5: return "girth5";
        case Strategy::clawfree: return "clawfree-stable-set";
        case Strategy::exact: return "exact";
    }
    return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
    if (name == "auto") return Strategy::automatic;
    if (name == "sp") return Strategy::sp;
    if (name == "girth5") return Strategy::girth5;
    if (name == "clawfree" || name == "clawfree-stable-set") return Strategy::clawfree;
    if (name == "exact") return Strategy::exact;
    return std::nullopt;
}

namespace {

bool sp_applies(const Graph& g) { return g.directed() && g.is_simple() && recognize_sp(g).has_value(); }

}  // namespace

Strategy choose_strategy(const Graph& g, bool weighted) {
    if (!weighted) {
        if (sp_applies(g)) return Strategy::sp;
        if (has_girth_at_least_five(g)) return Strategy::girth5;
    }
    if (!find_claw(build_conflict_graph(g))) return Strategy::clawfree;
    return Strategy::exact;
}

SolveReport solve(const Graph& g, const SolveOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const bool weighted = options.weights.has_value();
    SolveReport report;
    report.strategy = options.strategy == Strategy::automatic ? choose_strategy(g, weighted) : options.strategy;

    const auto finish = [&](std::optional<Decomposition> x) {
        report.verdict = x ? Verdict::feasible : Verdict::infeasible;
        if (x) report.decomposition = std::move(*x);
    };

    switch (report.strategy) {
        case Strategy::sp:
            if (weighted) throw PreconditionError("sp strategy does not take weights");
            finish(solve_sp(g));
            break;
        case Strategy::girth5:
            if (weighted) throw PreconditionError("girth5 strategy does not take weights");
            finish(solve_girth5(g));
            break;
        case Strategy::clawfree: {
            const auto h = build_conflict_graph(g);
            if (auto claw = find_claw(h)) {
                throw PreconditionError("conflict graph has a claw centered at " + to_string(h.paths[claw->center]));
            }
            const std::size_t target = g.member_count() / 2;
            if (g.member_count() % 2 != 0) {
                finish(std::nullopt);
            } else if (weighted) {
                const auto s = max_weight_stable_set(h, *options.weights, target);
                if (s) {
                    finish(to_decomposition(h, *s));
                    double cost = 0;
                    for (const auto& p : report.decomposition) cost += weight_of(*options.weights, p);
                    report.cost = cost;
                } else {
                    finish(std::nullopt);
                }
            } else {
                const auto s = max_stable_set(h, {target, true, true});
                if (s.size() >= target) {
                    finish(to_decomposition(h, s));
                } else {
                    finish(std::nullopt);
                }
            }
            break;
        }
        case Strategy::exact:
            if (weighted) {
                auto r = solve_weighted(g, *options.weights, options.budget);
                report.verdict = r.verdict;
                report.nodes = r.nodes;
                if (r.verdict == Verdict::feasible) report.decomposition = std::move(r.decomposition), report.cost = r.cost;
            } else {
                auto r = solve_exact(g, options.budget);
                report.verdict = r.verdict;
                report.nodes = r.nodes;
                report.decomposition = std::move(r.decomposition);
            }
            break;
        case Strategy::automatic: break;
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

Analysis analyze(const Graph& g, bool scan_forbidden) {
    Analysis a;
    a.girth = girth(g);
    a.conflict_graph = build_conflict_graph(g);
    a.two_paths = a.conflict_graph.vertex_count();
    a.conflict_edges = a.conflict_graph.edge_count();
    a.claw = find_claw(a.conflict_graph);
    a.series_parallel = g.directed() && recognize_sp(g).has_value();
    if (scan_forbidden) a.forbidden = g.directed() ? scan_forbidden_directed(g) : scan_forbidden_undirected(g);
    if (g.directed() && g.is_simple() && a.series_parallel) {
        a.strategy = Strategy::sp;
    } else if (has_girth_at_least_five(g)) {
        a.strategy = Strategy::girth5;
    } else {
        a.strategy = a.claw ? Strategy::exact : Strategy::clawfree;
    }
    return a;
}

}  // namespace ad2pd
