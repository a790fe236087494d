#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ad2pd/graph.hpp"

namespace ad2pd {

/// The path {xy, yz} written as the vertex triple (x, y, z) together with the
/// members covering xy (`first`) and yz (`second`).
///
/// A closed 2-path (x, y, x) is formed by two members joining the same vertex pair
/// in opposite walking directions: antiparallel arcs in a digraph, parallel edges
/// in a graph. Its vertex set is {x, y}, so it conflicts with every other path
/// through both x and y.
struct TwoPath {
    std::array<VertexId, 3> ends{};
    MemberId first = 0;
    MemberId second = 0;

    bool closed() const noexcept { return ends[0] == ends[2]; }
    MemberId low_member() const noexcept { return first < second ? first : second; }
    MemberId high_member() const noexcept { return first < second ? second : first; }
    bool uses(MemberId id) const noexcept { return first == id || second == id; }

    /// Two TwoPaths are the same path iff they cover the same member pair.
    friend bool operator==(const TwoPath& a, const TwoPath& b) noexcept {
        return a.low_member() == b.low_member() && a.high_member() == b.high_member();
    }
    friend auto operator<=>(const TwoPath& a, const TwoPath& b) noexcept {
        if (auto c = a.low_member() <=> b.low_member(); c != 0) return c;
        return a.high_member() <=> b.high_member();
    }
};

using Decomposition = std::vector<TwoPath>;

/// The 2-path covered by members e and f of g, if they form one.
std::optional<TwoPath> make_two_path(const Graph& g, MemberId e, MemberId f);

/// Every 2-path of g, one per unordered member pair, sorted by member pair.
std::vector<TwoPath> enumerate_two_paths(const Graph& g);

/// |V(p) ∩ V(q)| >= 2. Paths sharing a member always qualify.
bool in_conflict(const TwoPath& p, const TwoPath& q) noexcept;

struct Violation {
    enum class Kind { uncovered_member, double_cover, not_a_path, conflict };
    Kind kind;
    /// uncovered/double cover: the member; not_a_path: index of the path; conflict: both path indices.
    std::size_t first = 0;
    std::size_t second = 0;
    std::string message;
};

/// First violation of "x is an almost-disjoint 2-path decomposition of g", if any.
/// Checks paths in order, then coverage, then pairwise conflicts.
std::optional<Violation> verify_decomposition(const Graph& g, const Decomposition& x);

std::string to_string(const TwoPath& p);

}  // namespace ad2pd
