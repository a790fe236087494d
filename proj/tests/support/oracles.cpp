#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace ad2pd::oracle {

std::optional<std::vector<VertexId>> path_vertices(const Graph& g, MemberId e, MemberId f) {
    const Member a = g.member(e), b = g.member(f);
    if (e == f) return std::nullopt;
    if (g.directed()) {
        if (a.v == b.u && b.v == a.u) return std::vector<VertexId>{a.u, a.v};
        if (a.v == b.u) return std::vector<VertexId>{a.u, a.v, b.v};
        if (b.v == a.u) return std::vector<VertexId>{b.u, b.v, a.v};
        return std::nullopt;
    }
    std::vector<VertexId> va{a.u, a.v}, vb{b.u, b.v};
    std::sort(va.begin(), va.end());
    std::sort(vb.begin(), vb.end());
    if (va == vb) return va;
    std::vector<VertexId> all{a.u, a.v, b.u, b.v};
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    if (all.size() == 3) return all;
    return std::nullopt;
}

bool conflicting(const std::vector<VertexId>& p, const std::vector<VertexId>& q) {
    int shared = 0;
    for (auto x : p) shared += static_cast<int>(std::count(q.begin(), q.end(), x));
    return shared >= 2;
}

bool decomposable(const Graph& g) {
    const std::size_t m = g.member_count();
    if (m % 2) return false;
    std::vector<bool> used(m, false);
    std::vector<std::vector<VertexId>> chosen;
    std::function<bool()> rec = [&]() {
        MemberId e = 0;
        while (e < m && used[e]) ++e;
        if (e == m) return true;
        used[e] = true;
        for (MemberId f = e + 1; f < m; ++f) {
            if (used[f]) continue;
            const auto vs = path_vertices(g, e, f);
            if (!vs) continue;
            if (std::any_of(chosen.begin(), chosen.end(), [&](const auto& q) { return conflicting(*vs, q); })) continue;
            used[f] = true;
            chosen.push_back(*vs);
            if (rec()) return true;
            chosen.pop_back();
            used[f] = false;
        }
        used[e] = false;
        return false;
    };
    return rec();
}

std::set<Config> feasible_configurations(const Graph& d, const std::vector<MemberId>& arcs, VertexId s, VertexId t) {
    std::vector<MemberId> out_s, in_t;
    std::optional<MemberId> st;
    for (auto e : arcs) {
        const auto& a = d.member(e);
        if (a.u == s) out_s.push_back(e);
        if (a.v == t) in_t.push_back(e);
        if (a.u == s && a.v == t) st = e;
    }
    std::set<Config> result;
    for (std::uint32_t sm = 0; sm < (1U << out_s.size()); ++sm) {
        for (std::uint32_t tm = 0; tm < (1U << in_t.size()); ++tm) {
            std::set<MemberId> S, T;
            for (std::size_t i = 0; i < out_s.size(); ++i)
                if (sm >> i & 1U) S.insert(out_s[i]);
            for (std::size_t i = 0; i < in_t.size(); ++i)
                if (tm >> i & 1U) T.insert(in_t[i]);
            if (st && (!S.count(*st) || !T.count(*st))) continue;
            std::vector<MemberId> rest;
            for (auto e : arcs)
                if (!S.count(e) && !T.count(e)) rest.push_back(e);
            std::vector<MemberId> free_arcs(S.begin(), S.end());
            free_arcs.insert(free_arcs.end(), T.begin(), T.end());

            // Every complete conflict-free pairing of `rest`, recording c.
            std::vector<bool> used(rest.size(), false);
            std::vector<std::vector<VertexId>> chosen;
            bool seen_direct = false, seen_plain = false;
            std::function<void()> rec = [&]() {
                if (seen_direct && seen_plain) return;
                std::size_t i = 0;
                while (i < rest.size() && used[i]) ++i;
                if (i == rest.size()) {
                    for (auto e : free_arcs) {
                        const auto& a = d.member(e);
                        for (const auto& p : chosen)
                            if (p.front() == a.u && p.back() == a.v) return;  // property (ii)
                    }
                    const bool direct = std::any_of(chosen.begin(), chosen.end(),
                                                    [&](const auto& p) { return p.front() == s && p.back() == t; });
                    (direct ? seen_direct : seen_plain) = true;
                    return;
                }
                used[i] = true;
                for (std::size_t j = i + 1; j < rest.size(); ++j) {
                    if (used[j]) continue;
                    const auto vs = path_vertices(d, rest[i], rest[j]);
                    if (!vs) continue;
                    if (std::any_of(chosen.begin(), chosen.end(), [&](const auto& q) { return conflicting(*vs, q); }))
                        continue;
                    used[j] = true;
                    chosen.push_back(*vs);
                    rec();
                    chosen.pop_back();
                    used[j] = false;
                }
                used[i] = false;
            };
            rec();
            const auto a = static_cast<std::uint32_t>(S.size()), b = static_cast<std::uint32_t>(T.size());
            if (st) {
                if (seen_direct || seen_plain) result.insert(Config{a, b, 1});
            } else {
                if (seen_plain) result.insert(Config{a, b, 0});
                if (seen_direct) result.insert(Config{a, b, 2});
            }
        }
    }
    return result;
}

bool has_perfect_matching(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n % 2) return false;
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& m : g.members()) adj[m.u][m.v] = adj[m.v][m.u] = true;
    std::vector<bool> used(n, false);
    std::function<bool()> rec = [&]() {
        std::size_t v = 0;
        while (v < n && used[v]) ++v;
        if (v == n) return true;
        used[v] = true;
        for (std::size_t w = v + 1; w < n; ++w) {
            if (used[w] || !adj[v][w]) continue;
            used[w] = true;
            if (rec()) return true;
            used[w] = false;
        }
        used[v] = false;
        return false;
    };
    return rec();
}

std::size_t max_stable_set_size(const std::vector<std::vector<bool>>& adjacent) {
    const std::size_t n = adjacent.size();
    std::size_t best = 0;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
        if (v == n) {
            best = std::max(best, cur.size());
            return;
        }
        if (cur.size() + (n - v) <= best) return;
        if (std::none_of(cur.begin(), cur.end(), [&](std::size_t u) { return adjacent[u][v]; })) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
        rec(v + 1);
    };
    rec(0);
    return best;
}

Graph high_girth_instance(std::size_t vertices, std::size_t members, bool directed, Rng& rng) {
    std::vector<std::vector<VertexId>> adj(vertices);
    std::vector<Member> out;
    const auto distance = [&](VertexId from, VertexId to) {
        std::vector<int> dist(vertices, -1);
        std::deque<VertexId> q{from};
        dist[from] = 0;
        while (!q.empty()) {
            const auto v = q.front();
            q.pop_front();
            for (auto w : adj[v])
                if (dist[w] < 0) dist[w] = dist[v] + 1, q.push_back(w);
        }
        return dist[to];
    };
    for (std::size_t attempts = 0; out.size() < members && attempts < 50 * members; ++attempts) {
        const auto u = static_cast<VertexId>(rng.below(vertices));
        const auto v = static_cast<VertexId>(rng.below(vertices));
        if (u == v) continue;
        const int dist = distance(u, v);
        if (dist >= 0 && dist < 4) continue;
        adj[u].push_back(v);
        adj[v].push_back(u);
        out.push_back(directed && rng.chance(0.5) ? Member{v, u} : Member{u, v});
    }
    return Graph(directed ? Orientation::directed : Orientation::undirected, vertices, std::move(out));
}

}  // namespace ad2pd::oracle
