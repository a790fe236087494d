#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "ad2pd/graph.hpp"
#include "ad2pd/io.hpp"
#include "ad2pd/two_path.hpp"

namespace ad2pd {

/// Search limits; an unset field means unlimited.
struct SearchBudget {
    std::optional<std::uint64_t> node_limit = 100'000'000;
    std::optional<double> time_limit_seconds = 300.0;

    static SearchBudget unlimited() { return {std::nullopt, std::nullopt}; }
};

enum class Verdict { feasible, infeasible, budget_exhausted };

const char* to_string(Verdict v);

struct ExactResult {
    Verdict verdict = Verdict::infeasible;
    Decomposition decomposition;  // feasible only
    std::uint64_t nodes = 0;
};

/// Complete backtracking over member pairings, smallest candidate list first.
ExactResult solve_exact(const Graph& g, const SearchBudget& budget = {});

struct WeightedResult {
    Verdict verdict = Verdict::infeasible;
    Decomposition decomposition;
    double cost = 0;
    std::uint64_t nodes = 0;
};

/// Minimum-cost decomposition by branch and bound.
WeightedResult solve_weighted(const Graph& g, const WeightMap& w, const SearchBudget& budget = {});

struct MinConflictResult {
    enum class Status { optimal, no_partition, budget_exhausted };
    Status status = Status::no_partition;
    /// Best partition found (also filled when the budget ran out, if any was found).
    Decomposition partition;
    std::size_t conflicts = 0;
    std::uint64_t nodes = 0;
};

/// Partition into 2-paths minimizing the number of conflicting path pairs.
MinConflictResult solve_min_conflicts(const Graph& g, const SearchBudget& budget = {});

/// Conflicting unordered pairs within x.
std::size_t count_conflicts(const Decomposition& x);

}  // namespace ad2pd
