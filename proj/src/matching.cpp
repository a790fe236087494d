#include "ad2pd/matching.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "ad2pd/girth.hpp"

namespace ad2pd {

namespace {

constexpr int none = -1;

// Edmonds' algorithm with blossom contraction through a base[] relabeling.
class Blossom {
  public:
    explicit Blossom(const Graph& g) : n_(static_cast<int>(g.vertex_count())), adj_(n_) {
        for (const auto& m : g.members()) {
            adj_[m.u].push_back(static_cast<int>(m.v));
            adj_[m.v].push_back(static_cast<int>(m.u));
        }
        for (auto& a : adj_) {
            std::sort(a.begin(), a.end());
            a.erase(std::unique(a.begin(), a.end()), a.end());
        }
        match_.assign(n_, none);
    }

    const std::vector<int>& run() {
        // Greedy start keeps the number of augmenting searches small.
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != none) continue;
            for (int w : adj_[v]) {
                if (match_[w] == none) {
                    match_[v] = w;
                    match_[w] = v;
                    break;
                }
            }
        }
        for (int root = 0; root < n_; ++root) {
            if (match_[root] != none) continue;
            int v = find_path(root);
            while (v != none) {
                const int pv = parent_[v];
                const int ppv = match_[pv];
                match_[v] = pv;
                match_[pv] = v;
                v = ppv;
            }
        }
        return match_;
    }

  private:
    int lca(int a, int b) {
        std::vector<bool> seen(n_, false);
        for (;;) {
            a = base_[a];
            seen[a] = true;
            if (match_[a] == none) break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = true;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_path(int root) {
        used_.assign(n_, false);
        parent_.assign(n_, none);
        base_.resize(n_);
        for (int i = 0; i < n_; ++i) base_[i] = i;
        used_[root] = true;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != none && parent_[match_[to]] != none)) {
                    const int b = lca(v, to);
                    in_blossom_.assign(n_, false);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (int i = 0; i < n_; ++i) {
                        if (!in_blossom_[base_[i]]) continue;
                        base_[i] = b;
                        if (!used_[i]) {
                            used_[i] = true;
                            queue.push_back(i);
                        }
                    }
                } else if (parent_[to] == none) {
                    parent_[to] = v;
                    if (match_[to] == none) return to;
                    used_[match_[to]] = true;
                    queue.push_back(match_[to]);
                }
            }
        }
        return none;
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<bool> used_, in_blossom_;
};

}  // namespace

std::vector<MemberId> maximum_matching(const Graph& g) {
    Blossom blossom(g);
    const auto mate = blossom.run();
    std::vector<bool> taken(g.vertex_count(), false);
    std::vector<MemberId> out;
    for (MemberId e = 0; e < g.member_count(); ++e) {
        const auto& m = g.member(e);
        if (mate[m.u] == static_cast<int>(m.v) && !taken[m.u] && !taken[m.v]) {
            taken[m.u] = taken[m.v] = true;
            out.push_back(e);
        }
    }
    return out;
}

std::optional<std::vector<MemberId>> perfect_matching(const Graph& g) {
    if (g.vertex_count() % 2 != 0) return std::nullopt;
    auto m = maximum_matching(g);
    if (2 * m.size() != g.vertex_count()) return std::nullopt;
    return m;
}

Graph line_graph_as_graph(const Graph& g) {
    std::vector<Member> edges;
    for (const auto& p : enumerate_two_paths(g)) edges.push_back(Member{p.first, p.second});
    return Graph::undirected(g.member_count(), std::move(edges));
}

std::optional<Decomposition> solve_girth5(const Graph& g) {
    if (auto cycle = shortest_cycle(g); cycle && cycle->size() < 5) {
        std::ostringstream os;
        os << "girth " << cycle->size() << " < 5, cycle:";
        for (auto v : *cycle) os << ' ' << v;
        throw PreconditionError(os.str());
    }
    const auto paths = enumerate_two_paths(g);
    std::vector<Member> edges;
    for (const auto& p : paths) edges.push_back(Member{p.first, p.second});
    const auto matched = perfect_matching(Graph::undirected(g.member_count(), std::move(edges)));
    if (!matched) return std::nullopt;
    Decomposition x;
    for (auto k : *matched) x.push_back(paths[k]);
    std::sort(x.begin(), x.end());
    return x;
}

}  // namespace ad2pd
