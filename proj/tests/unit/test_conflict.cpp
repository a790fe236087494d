#include <doctest.h>

#include <algorithm>
#include <set>

#include "ad2pd/conflict.hpp"
#include "ad2pd/generate.hpp"
#include "oracles.hpp"

using namespace ad2pd;

namespace {

Graph pattern_graph(const ForbiddenPattern& p) {
    std::vector<Member> members;
    for (auto [u, v] : p.edges) members.push_back(Member{u, v});
    return Graph(p.directed ? Orientation::directed : Orientation::undirected, 6, std::move(members));
}

// Induced claw by brute force over explicit vertex lists.
bool brute_claw(const Graph& g) {
    std::vector<std::vector<VertexId>> paths;
    for (MemberId e = 0; e < g.member_count(); ++e)
        for (MemberId f = e + 1; f < g.member_count(); ++f)
            if (auto vs = oracle::path_vertices(g, e, f)) paths.push_back(*vs);
    const std::size_t n = paths.size();
    const auto adj = [&](std::size_t i, std::size_t j) { return oracle::conflicting(paths[i], paths[j]); };
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k) {
                    if (c == i || c == j || c == k) continue;
                    if (adj(c, i) && adj(c, j) && adj(c, k) && !adj(i, j) && !adj(i, k) && !adj(j, k)) return true;
                }
    return false;
}

}  // namespace

TEST_CASE("build_line_graph") {
    const auto l = build_line_graph(Graph::digraph(3, {{0, 1}, {1, 2}}));
    CHECK(l.vertex_count == 2);
    CHECK(l.edges.size() == 1);
    CHECK(build_line_graph(Graph::digraph(2, {{0, 1}})).edges.size() == 0);

    // L(C4) is again a 4-cycle: every member has exactly two neighbours.
    const auto c4 = build_line_graph(Graph::undirected(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    CHECK(c4.edges.size() == 4);
    std::vector<int> degree(4, 0);
    for (const auto& p : c4.edges) ++degree[p.first], ++degree[p.second];
    CHECK(degree == std::vector<int>{2, 2, 2, 2});
}

TEST_CASE("build_conflict_graph") {
    const auto k4 = build_conflict_graph(Graph::digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 6);

    const auto c5 = build_conflict_graph(Graph::undirected(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));
    CHECK(c5.vertex_count() == 5);
    CHECK(c5.edge_count() == 5);
    for (const auto& a : c5.adjacency) CHECK(a.size() == 2);

    const auto single = build_conflict_graph(Graph::digraph(3, {{0, 1}, {1, 2}}));
    CHECK(single.vertex_count() == 1);
    CHECK(single.edge_count() == 0);
}

TEST_CASE("conflict graph edges match pairwise in_conflict") {
    Rng rng(11);
    for (int round = 0; round < 60; ++round) {
        const auto kind = static_cast<RandomKind>(round % 3);
        const Graph g = generate_random(3 + rng.below(6), 0.5, kind, rng);
        const auto h = build_conflict_graph(g);
        std::size_t pairs = 0;
        for (std::size_t i = 0; i < h.paths.size(); ++i)
            for (std::size_t j = i + 1; j < h.paths.size(); ++j) {
                const bool c = in_conflict(h.paths[i], h.paths[j]);
                pairs += c;
                CHECK(h.adjacent(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)) == c);
            }
        CHECK(h.edge_count() == pairs);
    }
}

TEST_CASE("find_claw") {
    CHECK(!find_claw(build_conflict_graph(Graph::undirected(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}))));
    CHECK(!find_claw(build_conflict_graph(Graph::digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}))));

    // a=0 b=1 c=2 x=3 y=4 z=5
    const Graph host = Graph::undirected(6, {{3, 0}, {0, 1}, {1, 2}, {4, 0}, {0, 2}, {5, 1}});
    const auto h = build_conflict_graph(host);
    const auto claw = find_claw(h);
    REQUIRE(claw);
    CHECK(h.paths[claw->center].ends == std::array<VertexId, 3>{0, 1, 2});
    for (auto l : claw->leaves) {
        CHECK(h.adjacent(claw->center, l));
        for (auto m : claw->leaves)
            if (l != m) CHECK(!h.adjacent(l, m));
    }
}

TEST_CASE("find_claw agrees with brute force") {
    Rng rng(12);
    for (int round = 0; round < 150; ++round) {
        const auto kind = static_cast<RandomKind>(round % 3);
        const Graph g = generate_random(3 + rng.below(5), 0.2 + 0.5 * rng.real(), kind, rng);
        CHECK(find_claw(build_conflict_graph(g)).has_value() == brute_claw(g));
    }
}

TEST_CASE("catalog sizes") {
    CHECK(undirected_claw_configurations().size() == 27);
    CHECK(undirected_forbidden_listing().size() == 8);
    CHECK(undirected_forbidden_catalog().size() == 5);
    CHECK(directed_forbidden_listing().size() == 64);
    CHECK(directed_forbidden_catalog().size() == 46);
    for (const auto& p : undirected_forbidden_listing()) CHECK(p.edges.size() >= 5);
}

TEST_CASE("every undirected claw configuration contains a catalog graph") {
    for (const auto& p : undirected_claw_configurations()) {
        const Graph g = pattern_graph(p);
        INFO(p.id);
        CHECK(find_claw(build_conflict_graph(g)));
        CHECK(scan_forbidden_undirected(g));
    }
}

TEST_CASE("every directed catalog pattern induces a claw") {
    for (const auto& p : directed_forbidden_listing()) {
        INFO(p.id);
        CHECK(find_claw(build_conflict_graph(pattern_graph(p))));
    }
}

TEST_CASE("patterns_isomorphic") {
    const auto list = undirected_forbidden_listing();
    CHECK(patterns_isomorphic(list[0], list[0]));
    for (const auto& p : list) {
        const auto& catalog = undirected_forbidden_catalog();
        CHECK(std::count_if(catalog.begin(), catalog.end(), [&](const auto& q) { return patterns_isomorphic(p, q); }) == 1);
    }
    CHECK(!patterns_isomorphic(list[0], directed_forbidden_listing()[0]));
}

TEST_CASE("scan_forbidden_undirected") {
    CHECK(!scan_forbidden_undirected(Graph::undirected(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})));
    const Graph host = Graph::undirected(6, {{3, 0}, {0, 1}, {1, 2}, {4, 0}, {0, 2}, {5, 1}});
    const auto w = scan_forbidden_undirected(host);
    REQUIRE(w);
    CHECK(w->pattern_id == "U1");
    CHECK(w->map == std::array<VertexId, 6>{0, 1, 2, 3, 4, 5});
    CHECK(to_string(*w) == "pattern=U1 map a->0 b->1 c->2 x->3 y->4 z->5");
    const Graph petersen = Graph::undirected(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                                                  {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    CHECK(!scan_forbidden_undirected(petersen));
    CHECK_THROWS_AS(scan_forbidden_undirected(Graph::digraph(2, {{0, 1}})), GraphError);
}

TEST_CASE("scan_forbidden_directed") {
    CHECK(!scan_forbidden_directed(Graph::digraph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}})));
    CHECK(!scan_forbidden_directed(Graph::digraph(2, {{0, 1}})));
    const auto first = directed_forbidden_listing().front();
    const auto w = scan_forbidden_directed(pattern_graph(first));
    CHECK(w);
}

TEST_CASE("witness maps onto existing members") {
    Rng rng(13);
    for (int round = 0; round < 100; ++round) {
        const bool directed = round % 2;
        const Graph g = generate_random(6 + rng.below(3), 0.5, directed ? RandomKind::oriented : RandomKind::undirected, rng);
        const auto w = directed ? scan_forbidden_directed(g) : scan_forbidden_undirected(g);
        if (!w) continue;
        const auto& catalog = directed ? directed_forbidden_catalog() : undirected_forbidden_catalog();
        const auto it = std::find_if(catalog.begin(), catalog.end(), [&](const auto& p) { return p.id == w->pattern_id; });
        REQUIRE(it != catalog.end());
        std::set<VertexId> distinct(w->map.begin(), w->map.end());
        CHECK(distinct.size() == 6);
        for (auto [u, v] : it->edges) {
            const Member want{w->map[u], w->map[v]};
            const bool present = std::any_of(g.members().begin(), g.members().end(), [&](const Member& m) {
                return m == want || (!directed && m == Member{want.v, want.u});
            });
            CHECK(present);
        }
    }
}

TEST_CASE("directed claws stay claws in the underlying graph") {
    Rng rng(14);
    for (int round = 0; round < 150; ++round) {
        const Graph d = generate_random(4 + rng.below(4), 0.5, RandomKind::oriented, rng);
        const auto h = build_conflict_graph(d);
        const auto claw = find_claw(h);
        if (!claw) continue;
        const Graph g = underlying_graph(d);
        std::array<TwoPath, 4> four{h.paths[claw->center], h.paths[claw->leaves[0]], h.paths[claw->leaves[1]],
                                    h.paths[claw->leaves[2]]};
        for (auto& p : four) p = *make_two_path(g, p.first, p.second);
        for (int i = 1; i < 4; ++i) CHECK(in_conflict(four[0], four[i]));
        for (int i = 1; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) CHECK(!in_conflict(four[i], four[j]));
    }
}
