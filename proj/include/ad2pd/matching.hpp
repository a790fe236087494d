#pragma once

#include <optional>
#include <vector>

#include "ad2pd/graph.hpp"
#include "ad2pd/two_path.hpp"

namespace ad2pd {

/// Maximum-cardinality matching of g viewed as an undirected multigraph
/// (Edmonds' blossom algorithm). Returns member ids, ascending.
std::vector<MemberId> maximum_matching(const Graph& g);

/// A perfect matching of g, or std::nullopt if none exists.
std::optional<std::vector<MemberId>> perfect_matching(const Graph& g);

/// L(g) as an undirected graph: vertex i is member i, edge k is the k-th 2-path
/// of enumerate_two_paths(g).
Graph line_graph_as_graph(const Graph& g);

/// Decomposition of a girth >= 5 (or acyclic) graph via a perfect matching of
/// its line graph. Throws PreconditionError naming a short cycle otherwise.
std::optional<Decomposition> solve_girth5(const Graph& g);

}  // namespace ad2pd
