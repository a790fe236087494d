#include "ad2pd/graph.hpp"

#include <algorithm>
#include <utility>

namespace ad2pd {

Graph::Graph(Orientation orientation, std::size_t vertex_count, std::vector<Member> members)
    : orientation_(orientation), vertex_count_(vertex_count), members_(std::move(members)) {
    incident_.resize(vertex_count_);
    if (directed()) {
        out_.resize(vertex_count_);
        in_.resize(vertex_count_);
    }
    for (MemberId id = 0; id < members_.size(); ++id) {
        const auto [u, v] = members_[id];
        if (u >= vertex_count_ || v >= vertex_count_) {
            throw GraphError("member " + std::to_string(id) + " has an endpoint out of range");
        }
        if (u == v) {
            throw GraphError("member " + std::to_string(id) + " is a self-loop");
        }
        incident_[u].push_back(id);
        incident_[v].push_back(id);
        if (directed()) {
            out_[u].push_back(id);
            in_[v].push_back(id);
        }
    }
}

std::span<const MemberId> Graph::incident(VertexId v) const { return incident_.at(v); }

std::span<const MemberId> Graph::out_arcs(VertexId v) const {
    if (!directed()) throw GraphError("out_arcs on an undirected graph");
    return out_.at(v);
}

std::span<const MemberId> Graph::in_arcs(VertexId v) const {
    if (!directed()) throw GraphError("in_arcs on an undirected graph");
    return in_.at(v);
}

namespace {

bool pairs_unique(std::vector<std::pair<VertexId, VertexId>> keys) {
    std::sort(keys.begin(), keys.end());
    return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

}  // namespace

bool Graph::is_simple() const {
    std::vector<std::pair<VertexId, VertexId>> keys;
    keys.reserve(members_.size());
    for (const auto& m : members_) {
        if (directed()) {
            keys.emplace_back(m.u, m.v);
        } else {
            keys.emplace_back(std::min(m.u, m.v), std::max(m.u, m.v));
        }
    }
    return pairs_unique(std::move(keys));
}

bool Graph::has_simple_support() const {
    std::vector<std::pair<VertexId, VertexId>> keys;
    keys.reserve(members_.size());
    for (const auto& m : members_) keys.emplace_back(std::min(m.u, m.v), std::max(m.u, m.v));
    return pairs_unique(std::move(keys));
}

Graph underlying_graph(const Graph& d) {
    return Graph::undirected(d.vertex_count(), std::vector<Member>(d.members().begin(), d.members().end()));
}

}  // namespace ad2pd
