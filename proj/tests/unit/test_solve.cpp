#include <doctest.h>

#include "ad2pd/generate.hpp"
#include "ad2pd/io.hpp"
#include "ad2pd/solve.hpp"

using namespace ad2pd;

namespace {

const Graph diamond = Graph::digraph(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}});

}  // namespace

TEST_CASE("strategy names") {
    CHECK(parse_strategy("clawfree") == Strategy::clawfree);
    CHECK(parse_strategy("clawfree-stable-set") == Strategy::clawfree);
    CHECK(parse_strategy("auto") == Strategy::automatic);
    CHECK(!parse_strategy("greedy"));
    CHECK(std::string(to_string(Strategy::clawfree)) == "clawfree-stable-set");
}

TEST_CASE("choose_strategy") {
    CHECK(choose_strategy(diamond) == Strategy::sp);
    CHECK(choose_strategy(generate_cycle(6, false)) == Strategy::girth5);
    CHECK(choose_strategy(generate_cycle(4, true)) == Strategy::clawfree);
    const Graph claw = Graph::undirected(6, {{3, 0}, {0, 1}, {1, 2}, {4, 0}, {0, 2}, {5, 1}});
    CHECK(choose_strategy(claw) == Strategy::exact);
    CHECK(choose_strategy(generate_cycle(6, false), true) == Strategy::clawfree);
}

TEST_CASE("solve dispatch") {
    const auto d = solve(diamond);
    CHECK(d.verdict == Verdict::infeasible);
    CHECK(d.strategy == Strategy::sp);

    const auto c6 = solve(generate_cycle(6, false));
    CHECK(c6.verdict == Verdict::feasible);
    CHECK(c6.strategy == Strategy::girth5);

    const auto forced = solve(generate_cycle(6, false), {Strategy::exact, {}, std::nullopt});
    CHECK(forced.verdict == Verdict::feasible);
    CHECK(forced.strategy == Strategy::exact);
    CHECK(!verify_decomposition(generate_cycle(6, false), forced.decomposition));

    CHECK_THROWS_AS(solve(generate_cycle(6, false), {Strategy::sp, {}, std::nullopt}), PreconditionError);
    CHECK_THROWS_AS(solve(generate_cycle(4, true), {Strategy::girth5, {}, std::nullopt}), PreconditionError);
    CHECK_THROWS_AS(solve(diamond, {Strategy::sp, {}, WeightMap{}}), PreconditionError);

    WeightMap w;
    w[{0, 1}] = 3;
    const auto weighted = solve(generate_cycle(6, true), {Strategy::automatic, {}, w});
    CHECK(weighted.verdict == Verdict::feasible);
    REQUIRE(weighted.cost);
    CHECK(*weighted.cost == 0);
}

TEST_CASE("all strategies agree where they apply") {
    Rng rng(71);
    for (int round = 0; round < 100; ++round) {
        const auto kind = static_cast<RandomKind>(round % 3);
        const Graph g = generate_random(4 + rng.below(4), 0.4, kind, rng);
        const auto reference = solve(g, {Strategy::exact, SearchBudget::unlimited(), std::nullopt}).verdict;
        for (auto s : {Strategy::automatic, Strategy::sp, Strategy::girth5, Strategy::clawfree}) {
            try {
                const auto r = solve(g, {s, {}, std::nullopt});
                CHECK(r.verdict == reference);
                if (r.verdict == Verdict::feasible) CHECK(!verify_decomposition(g, r.decomposition));
            } catch (const PreconditionError&) {
                CHECK(s != Strategy::automatic);
            }
        }
    }
}

TEST_CASE("analyze") {
    const auto a = analyze(generate_cycle(5, false));
    CHECK(a.girth == 5u);
    CHECK(a.two_paths == 5);
    CHECK(a.conflict_edges == 5);
    CHECK(!a.claw);
    CHECK(a.strategy == Strategy::girth5);

    const auto e = analyze(Graph::digraph(3, {}));
    CHECK(!e.girth);
    CHECK(e.two_paths == 0);

    const Graph claw = Graph::undirected(6, {{3, 0}, {0, 1}, {1, 2}, {4, 0}, {0, 2}, {5, 1}});
    const auto c = analyze(claw, true);
    CHECK(c.claw);
    REQUIRE(c.forbidden);
    CHECK(c.forbidden->pattern_id == "U1");
    CHECK(!analyze(claw).forbidden);
}
