#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ad2pd/graph.hpp"
#include "ad2pd/two_path.hpp"

namespace ad2pd {

struct Literal {
    std::uint32_t variable = 0;  // 0-based
    bool positive = true;

    friend bool operator==(const Literal&, const Literal&) = default;
};

struct CnfFormula {
    std::size_t variables = 0;
    std::vector<std::array<Literal, 3>> clauses;
};

/// DIMACS CNF with exactly three distinct-variable literals per clause. Throws ParseError.
CnfFormula parse_dimacs_cnf(std::string_view text);
std::string format_dimacs_cnf(const CnfFormula& f);

bool satisfies(const CnfFormula& f, const std::vector<bool>& assignment);

/// A gadget on named local vertices. Arcs are listed plain first, then
/// optional, then both arcs of every antiparallel pair.
struct Gadget {
    std::vector<std::string> vertex_names;
    std::vector<Member> arcs;
    std::vector<bool> optional;

    VertexId vertex(std::string_view name) const;
    std::size_t optional_count() const;
};

/// D_{j,{k,k'}}: 16 vertices (v4 doubles as w2), 12 plain and 6 optional arcs,
/// 16 antiparallel pairs.
Gadget build_pair_gadget();
/// D_j: 9 vertices, 4 plain and 6 optional arcs, 5 antiparallel pairs.
Gadget build_clause_gadget();

/// The four pair-gadget cases. The first letter is the value of the literal on
/// the v-chain (smaller position), the second the one on the w-chain.
enum class PairCase : std::uint8_t { TT, TF, FT, FF };
const char* to_string(PairCase c);

/// Optional arcs M left to neighbouring gadgets in `pair_case`, as local arc indices.
std::vector<std::size_t> pair_case_removed_arcs(const Gadget& pair, PairCase pair_case);
/// Decomposition of the pair gadget minus M, as local vertex triples (closed
/// antiparallel paths included).
std::vector<std::array<VertexId, 3>> pair_case_paths(const Gadget& pair, PairCase pair_case);
/// Decomposition of the clause gadget, or of the clause gadget minus the two
/// optional arcs at p_{dropped} (dropped in {1, 2, 3}), as local vertex triples.
std::vector<std::array<VertexId, 3>> clause_paths(const Gadget& clause, std::optional<int> dropped);

/// One reserved 6-arc subpath of a variable cycle.
struct ReservedSubpath {
    std::size_t clause = 0;
    int position = 0;  // literal position k in {0, 1, 2}
    int partner = 0;   // k'
    bool positive = true;
    std::size_t first_arc = 0;  // local cycle arc index of q1 -> q2
};

/// C_i: a directed cycle of 12 * occurrences arcs; arc t runs from local
/// vertex t to t + 1. Subpaths are ordered by clause, then partner.
struct VariableCycle {
    std::uint32_t variable = 0;
    std::size_t length = 0;
    std::vector<ReservedSubpath> subpaths;
};

/// Cycle for variable i, or std::nullopt if it does not occur.
std::optional<VariableCycle> build_variable_gadget(const CnfFormula& f, std::uint32_t variable);

struct ReductionGraph {
    Graph graph;
    CnfFormula formula;

    struct CycleTable {
        VariableCycle cycle;
        std::vector<VertexId> vertex;  // local position -> global vertex
        std::vector<MemberId> arc;     // local arc -> global arc
    };
    struct PairTable {
        std::size_t clause = 0;
        int k = 0;       // smaller literal position
        int k_prime = 0; // larger literal position
        std::vector<VertexId> vertex;
        std::vector<MemberId> arc;
        std::vector<MemberId> optional_arcs;  // A'
    };
    struct ClauseTable {
        std::size_t clause = 0;
        std::vector<VertexId> vertex;
        std::vector<MemberId> arc;
    };

    std::vector<CycleTable> cycles;
    std::vector<PairTable> pairs;  // three per clause: {0,1}, {0,2}, {1,2}
    std::vector<ClauseTable> clauses;
};

ReductionGraph build_reduction(const CnfFormula& f);

/// One `<gadget> <local> <global>` line per gadget-local vertex.
std::string format_provenance(const ReductionGraph& r);

/// Certificate decomposition for a satisfying assignment; std::nullopt if the
/// assignment does not satisfy the formula.
std::optional<Decomposition> decomposition_from_assignment(const ReductionGraph& r, const std::vector<bool>& assignment);

/// Decomposition of a standalone gadget graph from local vertex triples.
Decomposition paths_from_triples(const Graph& g, const std::vector<std::array<VertexId, 3>>& triples);

/// The gadget as a digraph, optionally without some of its arcs.
Graph gadget_graph(const Gadget& gadget, const std::vector<std::size_t>& removed = {});

}  // namespace ad2pd
