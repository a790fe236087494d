#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ad2pd/conflict.hpp"
#include "ad2pd/exact.hpp"
#include "ad2pd/graph.hpp"
#include "ad2pd/io.hpp"

namespace ad2pd {

enum class Strategy { automatic, sp, girth5, clawfree, exact };

/// Report name: sp, girth5, clawfree-stable-set, exact (auto for automatic).
const char* to_string(Strategy s);
/// Accepts auto, sp, girth5, clawfree, clawfree-stable-set, exact.
std::optional<Strategy> parse_strategy(std::string_view name);

struct SolveOptions {
    Strategy strategy = Strategy::automatic;
    SearchBudget budget;
    std::optional<WeightMap> weights;
};

struct SolveReport {
    Verdict verdict = Verdict::infeasible;
    Strategy strategy = Strategy::exact;
    Decomposition decomposition;  // feasible only
    std::optional<double> cost;   // weighted runs
    std::uint64_t nodes = 0;      // search nodes, exact oracle only
    double seconds = 0;
};

/// First applicable of sp, girth5, clawfree, exact (clawfree, exact when weighted).
Strategy choose_strategy(const Graph& g, bool weighted = false);

/// Throws PreconditionError when a forced strategy does not apply to g.
SolveReport solve(const Graph& g, const SolveOptions& options = {});

struct Analysis {
    std::optional<std::size_t> girth;
    std::size_t two_paths = 0;
    std::size_t conflict_edges = 0;
    std::optional<Claw> claw;
    ConflictGraph conflict_graph;
    std::optional<ForbiddenWitness> forbidden;  // only when scanned
    bool series_parallel = false;
    Strategy strategy = Strategy::exact;
};

Analysis analyze(const Graph& g, bool scan_forbidden = false);

}  // namespace ad2pd
