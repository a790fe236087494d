#include "ad2pd/sp.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>

namespace ad2pd {

std::vector<MemberId> SPTree::arcs_below(std::size_t i) const {
    std::vector<MemberId> out;
    std::vector<std::size_t> stack{i};
    while (!stack.empty()) {
        const auto& nd = node(stack.back());
        stack.pop_back();
        if (nd.kind == SPNode::Kind::leaf) {
            out.push_back(nd.arc);
        } else {
            stack.push_back(nd.left);
            stack.push_back(nd.right);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<SPTree> recognize_sp(const Graph& d) {
    if (!d.directed() || d.member_count() == 0) return std::nullopt;
    const std::size_t n = d.vertex_count();

    std::vector<std::size_t> indeg(n, 0), outdeg(n, 0);
    for (const auto& m : d.members()) ++outdeg[m.u], ++indeg[m.v];
    std::optional<VertexId> s, t;
    for (VertexId v = 0; v < n; ++v) {
        if (indeg[v] + outdeg[v] == 0) continue;
        if (indeg[v] == 0) {
            if (s) return std::nullopt;
            s = v;
        }
        if (outdeg[v] == 0) {
            if (t) return std::nullopt;
            t = v;
        }
    }
    if (!s || !t) return std::nullopt;

    // Virtual edges carry the tree node they stand for. Reduce until a single
    // s-t edge remains.
    struct Virtual {
        VertexId u, v;
        std::size_t node;
        bool alive;
    };
    SPTree tree;
    std::vector<Virtual> edges;
    for (MemberId e = 0; e < d.member_count(); ++e) {
        const auto& m = d.member(e);
        tree.nodes.push_back(SPNode{SPNode::Kind::leaf, e, 0, 0, m.u, m.v});
        edges.push_back(Virtual{m.u, m.v, e, true});
    }
    std::size_t alive = edges.size();

    const auto merge = [&](SPNode::Kind kind, std::size_t i, std::size_t j, VertexId u, VertexId v) {
        tree.nodes.push_back(SPNode{kind, 0, edges[i].node, edges[j].node, u, v});
        edges[i].alive = edges[j].alive = false;
        edges.push_back(Virtual{u, v, tree.nodes.size() - 1, true});
        --alive;
    };

    while (alive > 1) {
        bool progress = false;

        // Parallel: two live edges with the same ends.
        std::vector<std::size_t> live;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (edges[i].alive) live.push_back(i);
        std::stable_sort(live.begin(), live.end(), [&](std::size_t x, std::size_t y) {
            return std::tie(edges[x].u, edges[x].v) < std::tie(edges[y].u, edges[y].v);
        });
        for (std::size_t k = 0; k + 1 < live.size(); ++k) {
            const auto i = live[k], j = live[k + 1];
            if (edges[i].u == edges[j].u && edges[i].v == edges[j].v && edges[i].alive && edges[j].alive) {
                merge(SPNode::Kind::parallel, i, j, edges[i].u, edges[i].v);
                progress = true;
            }
        }
        if (progress) continue;

        // Series: an inner vertex with exactly one edge in and one edge out.
        std::vector<std::vector<std::size_t>> in(n), out(n);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (!edges[i].alive) continue;
            out[edges[i].u].push_back(i);
            in[edges[i].v].push_back(i);
        }
        for (VertexId w = 0; w < n && !progress; ++w) {
            if (w == *s || w == *t || in[w].size() != 1 || out[w].size() != 1) continue;
            const auto i = in[w][0], j = out[w][0];
            if (edges[i].u == edges[j].v) continue;  // would close a loop
            merge(SPNode::Kind::series, i, j, edges[i].u, edges[j].v);
            progress = true;
        }
        if (!progress) return std::nullopt;
    }

    const auto last = std::find_if(edges.begin(), edges.end(), [](const Virtual& e) { return e.alive; });
    if (last->u != *s || last->v != *t) return std::nullopt;
    tree.root = last->node;
    return tree;
}

std::string to_string(const SPTree& t) {
    std::string out;
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
        const auto& nd = t.node(i);
        if (nd.kind == SPNode::Kind::leaf) {
            out += 'e';
            return;
        }
        out += nd.kind == SPNode::Kind::series ? "s(" : "p(";
        walk(nd.left);
        out += ',';
        walk(nd.right);
        out += ')';
    };
    walk(t.root);
    return out;
}

std::string to_string(const Config& c) {
    return "(" + std::to_string(c.a) + "," + std::to_string(c.b) + "," + std::to_string(int{c.c}) + ")";
}

std::string to_string(const ConfigSet& f) {
    std::string out = "{";
    for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + to_string(f[i]);
    return out + "}";
}

namespace {

constexpr std::array<SeriesRule, 10> all_rules{SeriesRule::EE, SeriesRule::FE, SeriesRule::EF, SeriesRule::FF,
                                               SeriesRule::CE, SeriesRule::CF, SeriesRule::EC, SeriesRule::FC,
                                               SeriesRule::CC, SeriesRule::CCp};

void normalize(ConfigSet& f) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
}

}  // namespace

std::optional<Config> apply_series_rule(SeriesRule rule, const Config& k1, const Config& k2) {
    // k1 belongs to the predecessor (its sink is the shared vertex), k2 to the successor.
    const bool f1 = k1.c == 1, f2 = k2.c == 1;
    const long b1 = k1.b, a2 = k2.a;
    long a = k1.a, b = k2.b;
    std::uint8_t c = 0;
    bool ok = false;
    switch (rule) {
        case SeriesRule::EE: ok = !f1 && !f2 && b1 == a2; break;
        case SeriesRule::FE: ok = f1 && !f2 && b1 == a2 + 1; break;
        case SeriesRule::EF: ok = !f1 && f2 && b1 == a2 - 1; break;
        case SeriesRule::FF: ok = f1 && f2 && b1 == a2; break;
        case SeriesRule::CE: ok = f1 && !f2 && b1 == a2, a -= 1; break;
        case SeriesRule::CF: ok = f1 && f2 && b1 == a2 - 1, a -= 1; break;
        case SeriesRule::EC: ok = !f1 && f2 && b1 == a2, b -= 1; break;
        case SeriesRule::FC: ok = f1 && f2 && b1 == a2 + 1, b -= 1; break;
        case SeriesRule::CC: ok = f1 && f2 && b1 == a2 && b1 > 1, a -= 1, b -= 1; break;
        case SeriesRule::CCp: ok = f1 && f2 && b1 == a2, a -= 1, b -= 1, c = 2; break;
    }
    if (!ok || a < 0 || b < 0) return std::nullopt;
    return Config{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b), c};
}

ConfigSet series_combine(const ConfigSet& f1, const ConfigSet& f2) {
    ConfigSet out;
    for (const auto& k1 : f1) {
        for (const auto& k2 : f2) {
            const long gap = static_cast<long>(k1.b) - static_cast<long>(k2.a);
            if (gap > 1 || gap < -1) continue;
            for (auto rule : all_rules)
                if (auto k = apply_series_rule(rule, k1, k2)) out.push_back(*k);
        }
    }
    normalize(out);
    return out;
}

ConfigSet parallel_combine(const ConfigSet& f1, const ConfigSet& f2) {
    ConfigSet out;
    for (const auto& k1 : f1)
        for (const auto& k2 : f2)
            if (k1.c == 0 || k2.c == 0)
                out.push_back(Config{k1.a + k2.a, k1.b + k2.b, std::max(k1.c, k2.c)});
    normalize(out);
    return out;
}

std::vector<ConfigSet> feasible_configs(const SPTree& t) {
    // Children always precede their parent in SPTree::nodes.
    std::vector<ConfigSet> pi(t.nodes.size());
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const auto& nd = t.nodes[i];
        switch (nd.kind) {
            case SPNode::Kind::leaf: pi[i] = {Config{1, 1, 1}}; break;
            case SPNode::Kind::series: pi[i] = series_combine(pi[nd.left], pi[nd.right]); break;
            case SPNode::Kind::parallel: pi[i] = parallel_combine(pi[nd.left], pi[nd.right]); break;
        }
    }
    return pi;
}

namespace {

class Extractor {
  public:
    Extractor(const Graph& d, const SPTree& t, const std::vector<ConfigSet>& pi) : d_(d), t_(t), pi_(pi) {}

    PartialDecomposition run(std::size_t i, const Config& target) {
        const auto& nd = t_.node(i);
        if (nd.kind == SPNode::Kind::leaf) return {{}, {nd.arc}, {nd.arc}};
        if (nd.kind == SPNode::Kind::parallel) return parallel(nd, target);
        return series(nd, target);
    }

  private:
    PartialDecomposition parallel(const SPNode& nd, const Config& target) {
        for (const auto& k1 : pi_[nd.left]) {
            for (const auto& k2 : pi_[nd.right]) {
                if ((k1.c != 0 && k2.c != 0) || k1.a + k2.a != target.a || k1.b + k2.b != target.b ||
                    std::max(k1.c, k2.c) != target.c) {
                    continue;
                }
                auto x1 = run(nd.left, k1);
                auto x2 = run(nd.right, k2);
                x1.paths.insert(x1.paths.end(), x2.paths.begin(), x2.paths.end());
                x1.free_at_source.insert(x1.free_at_source.end(), x2.free_at_source.begin(), x2.free_at_source.end());
                x1.free_at_sink.insert(x1.free_at_sink.end(), x2.free_at_sink.begin(), x2.free_at_sink.end());
                std::sort(x1.free_at_source.begin(), x1.free_at_source.end());
                std::sort(x1.free_at_sink.begin(), x1.free_at_sink.end());
                return x1;
            }
        }
        throw PreconditionError("configuration not feasible: " + to_string(target));
    }

    PartialDecomposition series(const SPNode& nd, const Config& target) {
        for (const auto& k1 : pi_[nd.left]) {
            for (const auto& k2 : pi_[nd.right]) {
                for (auto rule : all_rules) {
                    const auto k = apply_series_rule(rule, k1, k2);
                    if (k && *k == target) return join(nd, rule, k1, k2, target);
                }
            }
        }
        throw PreconditionError("configuration not feasible: " + to_string(target));
    }

    // The (s_i, t_i) arc of a child, if that child has one.
    std::optional<MemberId> direct_arc(std::size_t i, const PartialDecomposition& x) const {
        const auto& nd = t_.node(i);
        for (auto e : x.free_at_source)
            if (d_.member(e).v == nd.sink) return e;
        return std::nullopt;
    }

    PartialDecomposition join(const SPNode& nd, SeriesRule rule, const Config& k1, const Config& k2,
                              const Config& target) {
        auto x1 = run(nd.left, k1);
        auto x2 = run(nd.right, k2);
        const auto u1 = k1.c == 1 ? direct_arc(nd.left, x1) : std::nullopt;
        const auto u2 = k2.c == 1 ? direct_arc(nd.right, x2) : std::nullopt;
        const auto drop = [](std::vector<MemberId> v, std::optional<MemberId> e) {
            if (e) v.erase(std::remove(v.begin(), v.end(), *e), v.end());
            return v;
        };

        // U1 stays free at the source iff a is unchanged; otherwise it is used at
        // the middle vertex. Likewise for U2 at the sink.
        const bool keep_u1 = target.a == k1.a;
        const bool keep_u2 = target.b == k2.b;
        const auto t_star = keep_u1 ? drop(x1.free_at_sink, u1) : x1.free_at_sink;
        auto s_star = keep_u2 ? drop(x2.free_at_source, u2) : x2.free_at_source;
        if (t_star.size() != s_star.size()) throw PreconditionError("series join size mismatch");

        const auto pos = [](const std::vector<MemberId>& v, MemberId e) {
            return static_cast<std::size_t>(std::find(v.begin(), v.end(), e) - v.begin());
        };
        if (rule == SeriesRule::CCp) {
            std::swap(s_star[pos(t_star, *u1)], s_star[pos(s_star, *u2)]);
        } else if (rule == SeriesRule::CC) {
            const auto i = pos(t_star, *u1);
            if (s_star[i] == *u2) std::swap(s_star[i], s_star[(i + 1) % s_star.size()]);
        }

        PartialDecomposition out;
        out.paths = std::move(x1.paths);
        out.paths.insert(out.paths.end(), x2.paths.begin(), x2.paths.end());
        const VertexId mid = t_.node(nd.left).sink;
        for (std::size_t i = 0; i < t_star.size(); ++i) {
            out.paths.push_back(TwoPath{{d_.member(t_star[i]).u, mid, d_.member(s_star[i]).v}, t_star[i], s_star[i]});
        }
        out.free_at_source = keep_u1 ? x1.free_at_source : drop(x1.free_at_source, u1);
        out.free_at_sink = keep_u2 ? x2.free_at_sink : drop(x2.free_at_sink, u2);
        return out;
    }

    const Graph& d_;
    const SPTree& t_;
    const std::vector<ConfigSet>& pi_;
};

}  // namespace

PartialDecomposition extract_decomposition(const Graph& d, const SPTree& t, const Config& target,
                                           const std::vector<ConfigSet>& pi) {
    if (!std::binary_search(pi.at(t.root).begin(), pi.at(t.root).end(), target)) {
        throw PreconditionError("configuration not feasible: " + to_string(target));
    }
    auto x = Extractor(d, t, pi).run(t.root, target);
    std::sort(x.paths.begin(), x.paths.end());
    return x;
}

std::optional<Decomposition> solve_sp(const Graph& d) {
    if (!d.directed()) throw PreconditionError("sp strategy needs a digraph; use the exact oracle");
    if (!d.is_simple()) throw PreconditionError("sp strategy needs a simple digraph; use the exact oracle");
    const auto tree = recognize_sp(d);
    if (!tree) throw PreconditionError("digraph is not series-parallel; use the exact oracle");
    const auto pi = feasible_configs(*tree);
    for (std::uint8_t c : {0, 2}) {
        const Config target{0, 0, c};
        if (std::binary_search(pi[tree->root].begin(), pi[tree->root].end(), target)) {
            return extract_decomposition(d, *tree, target, pi).paths;
        }
    }
    return std::nullopt;
}

}  // namespace ad2pd
