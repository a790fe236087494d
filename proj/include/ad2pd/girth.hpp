#pragma once

#include <optional>
#include <vector>

#include "ad2pd/graph.hpp"

namespace ad2pd {

/// A shortest cycle of the underlying undirected multigraph as its vertex
/// sequence; two parallel members give a cycle of length 2. Empty optional
/// means the graph is acyclic.
std::optional<std::vector<VertexId>> shortest_cycle(const Graph& g);

/// Girth of the underlying multigraph; std::nullopt means acyclic.
std::optional<std::size_t> girth(const Graph& g);

/// girth >= 5 or acyclic.
bool has_girth_at_least_five(const Graph& g);

}  // namespace ad2pd
