#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ad2pd/graph.hpp"
#include "ad2pd/two_path.hpp"

namespace ad2pd {

/// L(G): one vertex per member of the source graph, one edge per 2-path.
struct LineGraph {
    std::size_t vertex_count = 0;
    std::vector<TwoPath> edges;
};

LineGraph build_line_graph(const Graph& g);

/// Conflict graph: vertices are the 2-paths of the source graph, edges join
/// conflicting pairs. `adjacency[i]` is sorted ascending.
struct ConflictGraph {
    std::vector<TwoPath> paths;
    std::vector<std::vector<std::uint32_t>> adjacency;

    std::size_t vertex_count() const noexcept { return paths.size(); }
    std::size_t edge_count() const noexcept;
    bool adjacent(std::uint32_t i, std::uint32_t j) const;
};

ConflictGraph build_conflict_graph(const Graph& g);
/// Conflict graph over an explicit path list (used by tests on hand-built path sets).
ConflictGraph build_conflict_graph(std::vector<TwoPath> paths);

/// Induced K_{1,3}: indices into ConflictGraph::paths.
struct Claw {
    std::uint32_t center = 0;
    std::array<std::uint32_t, 3> leaves{};
};

/// Lexicographically first induced claw (center, then leaves), if any.
std::optional<Claw> find_claw(const ConflictGraph& h);

/// Pattern vertex labels shared by every forbidden subgraph.
enum PatternVertex : std::uint8_t { pa, pb, pc, px, py, pz };
inline constexpr std::array<char, 6> pattern_vertex_names{'a', 'b', 'c', 'x', 'y', 'z'};

struct ForbiddenPattern {
    std::string id;
    bool directed = false;
    std::vector<std::pair<PatternVertex, PatternVertex>> edges;
};

/// Minimal forbidden subgraphs for undirected graphs, deduplicated by isomorphism.
const std::vector<ForbiddenPattern>& undirected_forbidden_catalog();
/// Forbidden subgraphs for digraphs (listed patterns plus all-arcs-reversed
/// variants), deduplicated by isomorphism.
const std::vector<ForbiddenPattern>& directed_forbidden_catalog();

/// Raw, undeduplicated catalogs as transcribed (for tests and reporting).
std::vector<ForbiddenPattern> undirected_forbidden_listing();
std::vector<ForbiddenPattern> directed_forbidden_listing();
/// All 27 undirected claw-inducing configurations of P, Q, R, S.
std::vector<ForbiddenPattern> undirected_claw_configurations();

bool patterns_isomorphic(const ForbiddenPattern& a, const ForbiddenPattern& b);

struct ForbiddenWitness {
    std::string pattern_id;
    /// Host vertex for each of a, b, c, x, y, z.
    std::array<VertexId, 6> map{};
};

/// Searches for any catalog member as a (not necessarily induced) subgraph.
std::optional<ForbiddenWitness> find_pattern(const Graph& host, const std::vector<ForbiddenPattern>& catalog);
std::optional<ForbiddenWitness> scan_forbidden_undirected(const Graph& g);
std::optional<ForbiddenWitness> scan_forbidden_directed(const Graph& d);

/// `pattern=<id> map a-><v> b-><v> ...`
std::string to_string(const ForbiddenWitness& w);

}  // namespace ad2pd
