#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ad2pd/graph.hpp"
#include "ad2pd/two_path.hpp"

namespace ad2pd {

/// Node of a series-parallel decomposition tree. For a series node, `left`
/// precedes `right`: sink(left) == source(right).
struct SPNode {
    enum class Kind : std::uint8_t { leaf, series, parallel };
    Kind kind = Kind::leaf;
    MemberId arc = 0;          // leaf only
    std::size_t left = 0;      // internal only
    std::size_t right = 0;     // internal only
    VertexId source = 0;
    VertexId sink = 0;
};

struct SPTree {
    std::vector<SPNode> nodes;
    std::size_t root = 0;

    const SPNode& node(std::size_t i) const { return nodes.at(i); }
    /// Arc ids below node i, ascending.
    std::vector<MemberId> arcs_below(std::size_t i) const;
};

/// Decomposition tree of d, or std::nullopt if d is not series-parallel.
/// Isolated vertices are ignored; d needs at least one arc.
std::optional<SPTree> recognize_sp(const Graph& d);

/// `e` for a leaf, `s(l,r)` / `p(l,r)` for internal nodes.
std::string to_string(const SPTree& t);

/// DP state: a free source out-arcs, b free sink in-arcs, c in {0, 1, 2}.
struct Config {
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    std::uint8_t c = 0;

    friend auto operator<=>(const Config&, const Config&) = default;
};

/// Sorted, duplicate-free.
using ConfigSet = std::vector<Config>;

std::string to_string(const Config& c);
std::string to_string(const ConfigSet& f);

enum class SeriesRule : std::uint8_t { EE, FE, EF, FF, CE, CF, EC, FC, CC, CCp };

/// Result of combining a predecessor configuration k1 with a successor k2 under
/// `rule`, or std::nullopt if the rule does not apply.
std::optional<Config> apply_series_rule(SeriesRule rule, const Config& k1, const Config& k2);

ConfigSet series_combine(const ConfigSet& f1, const ConfigSet& f2);
ConfigSet parallel_combine(const ConfigSet& f1, const ConfigSet& f2);

/// Feasible configuration set of every tree node, indexed like SPTree::nodes.
std::vector<ConfigSet> feasible_configs(const SPTree& t);

struct PartialDecomposition {
    Decomposition paths;
    std::vector<MemberId> free_at_source;  // S
    std::vector<MemberId> free_at_sink;    // T
};

/// Realizes `target` at the root of t. Throws PreconditionError if the target
/// is not in pi[t.root].
PartialDecomposition extract_decomposition(const Graph& d, const SPTree& t, const Config& target,
                                           const std::vector<ConfigSet>& pi);

/// Decomposition of a simple SP-digraph, or std::nullopt when none exists.
/// Throws PreconditionError for undirected, non-simple or non-SP input.
std::optional<Decomposition> solve_sp(const Graph& d);

}  // namespace ad2pd
