#include "ad2pd/girth.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

namespace ad2pd {

std::optional<std::vector<VertexId>> shortest_cycle(const Graph& g) {
    const std::size_t n = g.vertex_count();

    // Parallel members first: nothing beats length 2.
    std::map<std::pair<VertexId, VertexId>, MemberId> seen;
    for (const auto& m : g.members()) {
        const auto key = std::minmax(m.u, m.v);
        if (!seen.emplace(key, 0).second) return std::vector<VertexId>{key.first, key.second};
    }

    std::vector<std::vector<VertexId>> adj(n);
    for (const auto& m : g.members()) {
        adj[m.u].push_back(m.v);
        adj[m.v].push_back(m.u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    constexpr auto unseen = std::numeric_limits<std::size_t>::max();
    std::size_t best = unseen;
    std::vector<VertexId> best_cycle;
    std::vector<std::size_t> dist(n);
    std::vector<VertexId> parent(n);

    for (VertexId root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), unseen);
        dist[root] = 0;
        parent[root] = root;
        std::deque<VertexId> queue{root};
        while (!queue.empty()) {
            const VertexId u = queue.front();
            queue.pop_front();
            if (2 * dist[u] + 1 >= best) break;
            for (VertexId w : adj[u]) {
                if (dist[w] == unseen) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u] && dist[w] >= dist[u]) {
                    const std::size_t len = dist[u] + dist[w] + 1;
                    if (len < best) {
                        best = len;
                        std::vector<VertexId> left, right;
                        for (VertexId x = u; x != root; x = parent[x]) left.push_back(x);
                        for (VertexId x = w; x != root; x = parent[x]) right.push_back(x);
                        best_cycle.assign({root});
                        best_cycle.insert(best_cycle.end(), left.rbegin(), left.rend());
                        best_cycle.insert(best_cycle.end(), right.begin(), right.end());
                    }
                }
            }
        }
    }
    if (best == unseen) return std::nullopt;
    return best_cycle;
}

std::optional<std::size_t> girth(const Graph& g) {
    auto cycle = shortest_cycle(g);
    if (!cycle) return std::nullopt;
    return cycle->size();
}

bool has_girth_at_least_five(const Graph& g) {
    const auto value = girth(g);
    return !value || *value >= 5;
}

}  // namespace ad2pd
