#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ad2pd/conflict.hpp"
#include "ad2pd/io.hpp"

namespace ad2pd {

/// Indices into ConflictGraph::paths, ascending.
using StableSet = std::vector<std::uint32_t>;

struct StableSetOptions {
    /// Stop as soon as a stable set of this size is found.
    std::optional<std::size_t> target;
    /// Also discard branches that cannot reach `target`. The result is then only
    /// guaranteed maximum when it reaches the target.
    bool prune_below_target = false;
    /// Greedy clique-cover upper bound (otherwise |candidates|).
    bool clique_cover_bound = true;
};

/// Maximum stable set by branch and bound.
StableSet max_stable_set(const ConflictGraph& h, const StableSetOptions& options = {});

/// Minimum-weight stable set of exactly `required_size` vertices, weights looked
/// up per path; std::nullopt if no stable set of that size exists.
std::optional<StableSet> max_weight_stable_set(const ConflictGraph& h, const WeightMap& w, std::size_t required_size);

/// The decomposition named by a stable set.
Decomposition to_decomposition(const ConflictGraph& h, const StableSet& s);

}  // namespace ad2pd
