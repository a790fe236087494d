#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ad2pd {

using VertexId = std::uint32_t;
/// Positional index of an arc (directed) or edge (undirected).
using MemberId = std::uint32_t;

enum class Orientation { directed, undirected };

/// An arc (tail, head) or an unordered edge {u, v}.
struct Member {
    VertexId u = 0;
    VertexId v = 0;

    friend bool operator==(const Member&, const Member&) = default;
};

class GraphError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A solver was handed an input outside its domain (not SP, girth too small, ...).
class PreconditionError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Immutable multigraph or multidigraph. Parallel and antiparallel members are
/// allowed, self-loops are not. Member ids are positions in the member list.
class Graph {
  public:
    Graph() = default;
    Graph(Orientation orientation, std::size_t vertex_count, std::vector<Member> members);

    static Graph digraph(std::size_t vertex_count, std::vector<Member> arcs) {
        return Graph(Orientation::directed, vertex_count, std::move(arcs));
    }
    static Graph undirected(std::size_t vertex_count, std::vector<Member> edges) {
        return Graph(Orientation::undirected, vertex_count, std::move(edges));
    }

    bool directed() const noexcept { return orientation_ == Orientation::directed; }
    Orientation orientation() const noexcept { return orientation_; }
    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t member_count() const noexcept { return members_.size(); }
    std::span<const Member> members() const noexcept { return members_; }
    const Member& member(MemberId id) const { return members_.at(id); }

    /// All members touching v, ascending by id.
    std::span<const MemberId> incident(VertexId v) const;
    /// Directed only: arcs leaving / entering v, ascending by id.
    std::span<const MemberId> out_arcs(VertexId v) const;
    std::span<const MemberId> in_arcs(VertexId v) const;

    std::size_t degree(VertexId v) const { return incident(v).size(); }

    /// True if no two members join the same (ordered, when directed) vertex pair.
    bool is_simple() const;
    /// True if no two members join the same unordered vertex pair; for digraphs this
    /// also rules out antiparallel arcs.
    bool has_simple_support() const;

  private:
    Orientation orientation_ = Orientation::directed;
    std::size_t vertex_count_ = 0;
    std::vector<Member> members_;
    std::vector<std::vector<MemberId>> incident_;
    std::vector<std::vector<MemberId>> out_;
    std::vector<std::vector<MemberId>> in_;
};

/// Edge i of the result is the unordered version of arc i.
Graph underlying_graph(const Graph& d);

}  // namespace ad2pd
