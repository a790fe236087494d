#include <doctest.h>

#include "ad2pd/exact.hpp"
#include "ad2pd/generate.hpp"
#include "ad2pd/sp.hpp"
#include "oracles.hpp"

#include <algorithm>

using namespace ad2pd;

namespace {

const Graph diamond = Graph::digraph(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}});
const Graph path2 = Graph::digraph(3, {{0, 1}, {1, 2}});
const Graph path4 = Graph::digraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});

ConfigSet root_configs(const Graph& d) {
    const auto t = recognize_sp(d);
    REQUIRE(t);
    return feasible_configs(*t)[t->root];
}

}  // namespace

TEST_CASE("recognize_sp examples") {
    const auto leaf = recognize_sp(Graph::digraph(2, {{0, 1}}));
    REQUIRE(leaf);
    CHECK(to_string(*leaf) == "e");

    const auto d = recognize_sp(diamond);
    REQUIRE(d);
    CHECK(to_string(*d) == "p(s(e,e),s(e,e))");
    CHECK(d->node(d->root).source == 0);
    CHECK(d->node(d->root).sink == 3);

    CHECK(!recognize_sp(Graph::digraph(3, {{0, 1}, {1, 2}, {2, 0}})));
    CHECK(!recognize_sp(Graph::digraph(4, {{0, 1}, {2, 3}})));           // disconnected
    CHECK(!recognize_sp(Graph::digraph(3, {{0, 2}, {1, 2}})));           // two sources
    CHECK(!recognize_sp(Graph::digraph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 2}})));  // Wheatstone bridge
    CHECK(!recognize_sp(Graph::digraph(3, {})));
}

TEST_CASE("recognize_sp tree invariants") {
    Rng rng(31);
    for (int round = 0; round < 50; ++round) {
        const Graph d = generate_sp(1 + rng.below(30), rng);
        const auto t = recognize_sp(d);
        REQUIRE(t);
        auto arcs = t->arcs_below(t->root);
        CHECK(arcs.size() == d.member_count());
        std::size_t leaves = 0;
        for (std::size_t i = 0; i < t->nodes.size(); ++i) {
            const auto& n = t->node(i);
            if (n.kind == SPNode::Kind::leaf) {
                ++leaves;
                CHECK(d.member(n.arc) == Member{n.source, n.sink});
                continue;
            }
            CHECK(n.left < i);
            CHECK(n.right < i);
            const auto& l = t->node(n.left);
            const auto& r = t->node(n.right);
            if (n.kind == SPNode::Kind::series) {
                CHECK(l.sink == r.source);
                CHECK(n.source == l.source);
                CHECK(n.sink == r.sink);
            } else {
                CHECK(l.source == r.source);
                CHECK(l.sink == r.sink);
            }
        }
        CHECK(leaves == d.member_count());
    }
}

TEST_CASE("series and parallel combine") {
    const ConfigSet leaf{{1, 1, 1}};
    CHECK(series_combine(leaf, leaf) == ConfigSet{{0, 0, 2}, {1, 1, 0}});
    CHECK(series_combine({}, leaf).empty());
    CHECK(series_combine(leaf, {}).empty());

    const ConfigSet p2{{0, 0, 2}, {1, 1, 0}};
    CHECK(parallel_combine(p2, p2) == ConfigSet{{1, 1, 2}, {2, 2, 0}});
    CHECK(parallel_combine(p2, ConfigSet{{0, 0, 0}}) == p2);
    CHECK(parallel_combine({}, p2).empty());

    const auto four = series_combine(p2, p2);
    CHECK(std::binary_search(four.begin(), four.end(), Config{0, 0, 0}));
    CHECK(four == root_configs(path4));

    CHECK(to_string(Config{1, 2, 0}) == "(1,2,0)");
    CHECK(to_string(p2) == "{(0,0,2),(1,1,0)}");
}

TEST_CASE("apply_series_rule") {
    CHECK(apply_series_rule(SeriesRule::FF, {1, 1, 1}, {1, 1, 1}) == Config{1, 1, 0});
    CHECK(apply_series_rule(SeriesRule::CCp, {1, 1, 1}, {1, 1, 1}) == Config{0, 0, 2});
    CHECK(!apply_series_rule(SeriesRule::EE, {1, 1, 1}, {1, 1, 1}));
}

TEST_CASE("feasible_configs examples") {
    CHECK(root_configs(Graph::digraph(2, {{0, 1}})) == ConfigSet{{1, 1, 1}});
    CHECK(root_configs(path2) == ConfigSet{{0, 0, 2}, {1, 1, 0}});
    CHECK(root_configs(diamond) == ConfigSet{{1, 1, 2}, {2, 2, 0}});
}

TEST_CASE("feasible_configs agrees with brute-force enumeration on every node") {
    Rng rng(32);
    for (int round = 0; round < 40; ++round) {
        const Graph d = generate_sp(rng.below(10), rng);
        const auto t = recognize_sp(d);
        REQUIRE(t);
        const auto pi = feasible_configs(*t);
        for (std::size_t i = 0; i < t->nodes.size(); ++i) {
            const auto& n = t->node(i);
            const auto expected = oracle::feasible_configurations(d, t->arcs_below(i), n.source, n.sink);
            CHECK(pi[i] == ConfigSet(expected.begin(), expected.end()));
        }
    }
}

TEST_CASE("configuration bounds") {
    Rng rng(33);
    for (int round = 0; round < 60; ++round) {
        const Graph d = generate_sp(1 + rng.below(25), rng);
        const auto t = recognize_sp(d);
        const auto pi = feasible_configs(*t);
        for (std::size_t i = 0; i < t->nodes.size(); ++i) {
            const auto& n = t->node(i);
            std::size_t out = 0, in = 0;
            bool direct = false;
            for (auto a : t->arcs_below(i)) {
                const auto& m = d.member(a);
                out += m.u == n.source;
                in += m.v == n.sink;
                direct |= m.u == n.source && m.v == n.sink;
            }
            for (const auto& k : pi[i]) {
                CHECK(k.a <= out);
                CHECK(k.b <= in);
                CHECK(k.c <= 2);
                if (k.c == 1) CHECK(direct);
            }
        }
    }
}

TEST_CASE("extract_decomposition") {
    const auto leaf = recognize_sp(Graph::digraph(2, {{0, 1}}));
    const auto x = extract_decomposition(Graph::digraph(2, {{0, 1}}), *leaf, {1, 1, 1}, feasible_configs(*leaf));
    CHECK(x.paths.empty());
    CHECK(x.free_at_source == std::vector<MemberId>{0});
    CHECK(x.free_at_sink == std::vector<MemberId>{0});

    const auto t2 = recognize_sp(path2);
    const auto y = extract_decomposition(path2, *t2, {0, 0, 2}, feasible_configs(*t2));
    REQUIRE(y.paths.size() == 1);
    CHECK(y.paths[0].ends == std::array<VertexId, 3>{0, 1, 2});
    CHECK(y.free_at_source.empty());

    const auto t4 = recognize_sp(path4);
    const auto z = extract_decomposition(path4, *t4, {0, 0, 0}, feasible_configs(*t4));
    CHECK(z.paths.size() == 2);
    CHECK(!verify_decomposition(path4, z.paths));

    CHECK_THROWS_AS(extract_decomposition(path2, *t2, {2, 2, 0}, feasible_configs(*t2)), PreconditionError);
}

TEST_CASE("extract_decomposition realizes every feasible root configuration") {
    Rng rng(34);
    for (int round = 0; round < 40; ++round) {
        const Graph d = generate_sp(rng.below(16), rng, 0.35);
        const auto t = recognize_sp(d);
        const auto pi = feasible_configs(*t);
        const auto& root = t->node(t->root);
        for (const auto& k : pi[t->root]) {
            const auto x = extract_decomposition(d, *t, k, pi);
            CHECK(x.free_at_source.size() == k.a);
            CHECK(x.free_at_sink.size() == k.b);
            for (auto a : x.free_at_source) CHECK(d.member(a).u == root.source);
            for (auto a : x.free_at_sink) CHECK(d.member(a).v == root.sink);
            const bool has_st_path = std::any_of(x.paths.begin(), x.paths.end(), [&](const TwoPath& p) {
                return p.ends[0] == root.source && p.ends[2] == root.sink;
            });
            CHECK(has_st_path == (k.c == 2));
            for (std::size_t i = 0; i < x.paths.size(); ++i)
                for (std::size_t j = i + 1; j < x.paths.size(); ++j) CHECK(!in_conflict(x.paths[i], x.paths[j]));
        }
    }
}

TEST_CASE("solve_sp examples and errors") {
    CHECK(!solve_sp(diamond));
    const auto p = solve_sp(path2);
    REQUIRE(p);
    CHECK(p->size() == 1);
    const auto q = solve_sp(path4);
    REQUIRE(q);
    CHECK(!verify_decomposition(path4, *q));

    CHECK_THROWS_AS(solve_sp(Graph::undirected(3, {{0, 1}, {1, 2}})), PreconditionError);
    CHECK_THROWS_AS(solve_sp(Graph::digraph(2, {{0, 1}, {0, 1}})), PreconditionError);
    CHECK_THROWS_AS(solve_sp(Graph::digraph(3, {{0, 1}, {1, 2}, {2, 0}})), PreconditionError);
}

TEST_CASE("solve_sp agrees with the exact oracle on series-heavy instances") {
    Rng rng(35);
    int feasible = 0;
    for (int round = 0; round < 150; ++round) {
        const Graph d = generate_sp(1 + rng.below(25), rng, 0.25);
        const auto x = solve_sp(d);
        const auto exact = solve_exact(d, SearchBudget::unlimited());
        CHECK(x.has_value() == (exact.verdict == Verdict::feasible));
        if (x) {
            ++feasible;
            CHECK(!verify_decomposition(d, *x));
        }
        if (d.member_count() <= 12) CHECK(x.has_value() == oracle::decomposable(d));
    }
    CHECK(feasible >= 10);
}
