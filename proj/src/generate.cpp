#include "ad2pd/generate.hpp"

#include <algorithm>
#include <numeric>

namespace ad2pd {

Graph generate_cycle(std::size_t n, bool directed) {
    if (n < 2 || (!directed && n < 3)) throw GraphError("cycle needs at least " + std::to_string(directed ? 2 : 3) + " vertices");
    std::vector<Member> arcs;
    for (std::size_t i = 0; i < n; ++i)
        arcs.push_back(Member{static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n)});
    return Graph(directed ? Orientation::directed : Orientation::undirected, n, std::move(arcs));
}

Graph generate_sp(std::size_t ops, Rng& rng, double parallel_probability) {
    struct Part {
        std::vector<Member> arcs;
        VertexId s, t;
        bool direct;
    };
    std::vector<Part> parts;
    VertexId next = 0;
    for (std::size_t i = 0; i <= ops; ++i) {
        parts.push_back(Part{{Member{next, next + 1}}, next, next + 1, true});
        next += 2;
    }
    while (parts.size() > 1) {
        const auto i = rng.below(parts.size());
        auto j = rng.below(parts.size() - 1);
        if (j >= i) ++j;
        Part a = std::move(parts[i]);
        Part b = std::move(parts[j]);
        parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(std::max(i, j)));
        parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(std::min(i, j)));

        const bool parallel = rng.chance(parallel_probability) && !(a.direct && b.direct);
        // Glue b onto a: series identifies b.s with a.t, parallel identifies both ends.
        const auto rename = [&](VertexId v) {
            if (v == b.s) return parallel ? a.s : a.t;
            if (parallel && v == b.t) return a.t;
            return v;
        };
        Part merged{a.arcs, a.s, parallel ? a.t : rename(b.t), parallel && (a.direct || b.direct)};
        for (const auto& m : b.arcs) merged.arcs.push_back(Member{rename(m.u), rename(m.v)});
        parts.push_back(std::move(merged));
    }

    auto arcs = std::move(parts.front().arcs);
    std::vector<VertexId> used;
    for (const auto& m : arcs) used.push_back(m.u), used.push_back(m.v);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    std::vector<VertexId> label(used.size());
    std::iota(label.begin(), label.end(), VertexId{0});
    rng.shuffle(label);
    for (auto& m : arcs) {
        m.u = label[static_cast<std::size_t>(std::lower_bound(used.begin(), used.end(), m.u) - used.begin())];
        m.v = label[static_cast<std::size_t>(std::lower_bound(used.begin(), used.end(), m.v) - used.begin())];
    }
    rng.shuffle(arcs);
    return Graph::digraph(used.size(), std::move(arcs));
}

Graph generate_random(std::size_t n, double p, RandomKind kind, Rng& rng) {
    std::vector<Member> members;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            switch (kind) {
                case RandomKind::undirected:
                    if (rng.chance(p)) members.push_back(Member{u, v});
                    break;
                case RandomKind::oriented:
                    if (rng.chance(p)) members.push_back(rng.chance(0.5) ? Member{u, v} : Member{v, u});
                    break;
                case RandomKind::directed:
                    if (rng.chance(p)) members.push_back(Member{u, v});
                    if (rng.chance(p)) members.push_back(Member{v, u});
                    break;
            }
        }
    }
    return Graph(kind == RandomKind::undirected ? Orientation::undirected : Orientation::directed, n, std::move(members));
}

CnfFormula generate_cnf(std::size_t variables, std::size_t clauses, Rng& rng) {
    if (variables < 3) throw GraphError("3-CNF needs at least 3 variables");
    CnfFormula f;
    f.variables = variables;
    for (std::size_t j = 0; j < clauses; ++j) {
        std::array<Literal, 3> c;
        for (std::size_t k = 0; k < 3; ++k) {
            std::uint32_t v;
            do {
                v = static_cast<std::uint32_t>(rng.below(variables));
            } while (std::any_of(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(k),
                                 [&](const Literal& l) { return l.variable == v; }));
            c[k] = Literal{v, rng.chance(0.5)};
        }
        f.clauses.push_back(c);
    }
    return f;
}

}  // namespace ad2pd
