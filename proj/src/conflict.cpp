#include "ad2pd/conflict.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace ad2pd {

LineGraph build_line_graph(const Graph& g) { return LineGraph{g.member_count(), enumerate_two_paths(g)}; }

std::size_t ConflictGraph::edge_count() const noexcept {
    std::size_t total = 0;
    for (const auto& a : adjacency) total += a.size();
    return total / 2;
}

bool ConflictGraph::adjacent(std::uint32_t i, std::uint32_t j) const {
    const auto& a = adjacency.at(i);
    return std::binary_search(a.begin(), a.end(), j);
}

ConflictGraph build_conflict_graph(std::vector<TwoPath> paths) {
    // Two paths conflict iff they share a vertex pair, so bucket paths by the
    // unordered vertex pairs they contain.
    std::vector<std::tuple<VertexId, VertexId, std::uint32_t>> keyed;
    for (std::uint32_t i = 0; i < paths.size(); ++i) {
        const auto& e = paths[i].ends;
        const auto add = [&](VertexId a, VertexId b) {
            keyed.emplace_back(std::min(a, b), std::max(a, b), i);
        };
        add(e[0], e[1]);
        if (!paths[i].closed()) {
            add(e[1], e[2]);
            add(e[0], e[2]);
        }
    }
    std::sort(keyed.begin(), keyed.end());

    ConflictGraph h;
    h.adjacency.resize(paths.size());
    for (std::size_t lo = 0; lo < keyed.size();) {
        std::size_t hi = lo;
        while (hi < keyed.size() && std::get<0>(keyed[hi]) == std::get<0>(keyed[lo]) &&
               std::get<1>(keyed[hi]) == std::get<1>(keyed[lo])) {
            ++hi;
        }
        for (std::size_t i = lo; i < hi; ++i) {
            for (std::size_t j = i + 1; j < hi; ++j) {
                const auto p = std::get<2>(keyed[i]);
                const auto q = std::get<2>(keyed[j]);
                h.adjacency[p].push_back(q);
                h.adjacency[q].push_back(p);
            }
        }
        lo = hi;
    }
    for (auto& a : h.adjacency) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    h.paths = std::move(paths);
    return h;
}

ConflictGraph build_conflict_graph(const Graph& g) { return build_conflict_graph(enumerate_two_paths(g)); }

std::optional<Claw> find_claw(const ConflictGraph& h) {
    for (std::uint32_t center = 0; center < h.vertex_count(); ++center) {
        const auto& nb = h.adjacency[center];
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (h.adjacent(nb[i], nb[j])) continue;
                for (std::size_t k = j + 1; k < nb.size(); ++k) {
                    if (!h.adjacent(nb[i], nb[k]) && !h.adjacent(nb[j], nb[k])) {
                        return Claw{center, {nb[i], nb[j], nb[k]}};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Forbidden subgraph catalogs.
//
// The center path is P = (a, b, c). Each leaf shares exactly two vertices with P
// and brings one private vertex: Q covers {a, b} plus x, R covers {a, c} plus y,
// S covers {b, c} plus z.

namespace {

using Edge = std::pair<PatternVertex, PatternVertex>;
using Edges = std::vector<Edge>;

const std::array<Edges, 3> und_q{{{{px, pa}, {pa, pb}}, {{pa, px}, {px, pb}}, {{pa, pb}, {pb, px}}}};
const std::array<Edges, 3> und_r{{{{py, pa}, {pa, pc}}, {{pa, py}, {py, pc}}, {{pa, pc}, {pc, py}}}};
const std::array<Edges, 3> und_s{{{{pz, pb}, {pb, pc}}, {{pb, pz}, {pz, pc}}, {{pb, pc}, {pc, pz}}}};

ForbiddenPattern make_pattern(std::string id, bool directed, std::initializer_list<const Edges*> parts) {
    ForbiddenPattern p{std::move(id), directed, {}};
    for (const Edges* part : parts) {
        for (auto [u, v] : *part) {
            if (!directed && v < u) std::swap(u, v);
            p.edges.emplace_back(u, v);
        }
    }
    std::sort(p.edges.begin(), p.edges.end());
    p.edges.erase(std::unique(p.edges.begin(), p.edges.end()), p.edges.end());
    return p;
}

const Edges und_p{{pa, pb}, {pb, pc}};

ForbiddenPattern undirected_configuration(int q, int r, int s) {
    const int number = (q - 1) * 9 + (r - 1) * 3 + s;
    return make_pattern("U" + std::to_string(number), false, {&und_p, &und_q[q - 1], &und_r[r - 1], &und_s[s - 1]});
}

// Directed leaf variants. The arcs of P
// (a->b, b->c) complete a leaf where only one arc is listed.
const Edges dir_p{{pa, pb}, {pb, pc}};
const Edges dq11{{px, pa}};
const Edges dq12{{pb, px}};
const Edges dq21{{pa, px}, {px, pb}};
const Edges dr11{{py, pa}, {pa, pc}};
const Edges dr12{{pc, pa}, {pa, py}};
const Edges dr21{{pa, py}, {py, pc}};
const Edges dr22{{pc, py}, {py, pa}};
const Edges ds11{{pz, pb}};
const Edges ds12{{pc, pz}};
const Edges ds21{{pb, pz}, {pz, pc}};

ForbiddenPattern reversed(const ForbiddenPattern& p) {
    ForbiddenPattern r{p.id + "r", p.directed, {}};
    for (auto [u, v] : p.edges) r.edges.emplace_back(v, u);
    std::sort(r.edges.begin(), r.edges.end());
    return r;
}

std::vector<ForbiddenPattern> dedupe_isomorphic(const std::vector<ForbiddenPattern>& in) {
    std::vector<ForbiddenPattern> out;
    for (const auto& p : in) {
        const bool seen = std::any_of(out.begin(), out.end(), [&](const auto& q) { return patterns_isomorphic(p, q); });
        if (!seen) out.push_back(p);
    }
    return out;
}

}  // namespace

std::vector<ForbiddenPattern> undirected_claw_configurations() {
    std::vector<ForbiddenPattern> all;
    for (int q = 1; q <= 3; ++q)
        for (int r = 1; r <= 3; ++r)
            for (int s = 1; s <= 3; ++s) all.push_back(undirected_configuration(q, r, s));
    return all;
}

std::vector<ForbiddenPattern> undirected_forbidden_listing() {
    // Configuration numbers 1, 3, 4, 6, 7, 9, 19, 22 in q-r-s order.
    return {undirected_configuration(1, 1, 1), undirected_configuration(1, 1, 3), undirected_configuration(1, 2, 1),
            undirected_configuration(1, 2, 3), undirected_configuration(1, 3, 1), undirected_configuration(1, 3, 3),
            undirected_configuration(3, 1, 1), undirected_configuration(3, 2, 1)};
}

std::vector<ForbiddenPattern> directed_forbidden_listing() {
    std::vector<ForbiddenPattern> listed;
    const auto add = [&](const Edges& q, const Edges& r, const Edges& s) {
        listed.push_back(make_pattern("D" + std::to_string(listed.size() + 1), true, {&dir_p, &q, &r, &s}));
    };
    const std::array<const Edges*, 2> q_fwd{&dq11, &dq21};
    const std::array<const Edges*, 2> r_one{&dr11, &dr12};
    const std::array<const Edges*, 2> r_two{&dr21, &dr22};
    const std::array<const Edges*, 2> s_fwd{&ds11, &ds21};

    for (auto* q : q_fwd)
        for (auto* r : r_one)
            for (auto* s : s_fwd) add(*q, *r, *s);
    for (auto* q : q_fwd)
        for (auto* r : r_one) add(*q, *r, ds12);
    for (auto* q : q_fwd)
        for (auto* r : r_two)
            for (auto* s : s_fwd) add(*q, *r, *s);
    for (auto* r : r_two) add(dq11, *r, ds12);
    for (auto* s : s_fwd)
        for (auto* r : r_one) add(dq12, *r, *s);
    for (const Edges* s : {&ds12, &ds21})
        for (auto* r : r_one) add(dq12, *r, *s);
    for (auto* r : r_two) add(dq12, *r, ds11);

    const std::size_t count = listed.size();
    for (std::size_t i = 0; i < count; ++i) listed.push_back(reversed(listed[i]));
    return listed;
}

const std::vector<ForbiddenPattern>& undirected_forbidden_catalog() {
    static const std::vector<ForbiddenPattern> catalog = dedupe_isomorphic(undirected_forbidden_listing());
    return catalog;
}

const std::vector<ForbiddenPattern>& directed_forbidden_catalog() {
    static const std::vector<ForbiddenPattern> catalog = dedupe_isomorphic(directed_forbidden_listing());
    return catalog;
}

bool patterns_isomorphic(const ForbiddenPattern& a, const ForbiddenPattern& b) {
    if (a.directed != b.directed || a.edges.size() != b.edges.size()) return false;
    std::array<int, 6> perm{0, 1, 2, 3, 4, 5};
    Edges target = b.edges;
    std::sort(target.begin(), target.end());
    do {
        Edges mapped;
        mapped.reserve(a.edges.size());
        for (auto [u, v] : a.edges) {
            auto mu = static_cast<PatternVertex>(perm[u]);
            auto mv = static_cast<PatternVertex>(perm[v]);
            if (!a.directed && mv < mu) std::swap(mu, mv);
            mapped.emplace_back(mu, mv);
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

namespace {

class PatternSearch {
  public:
    PatternSearch(const Graph& host) : host_(host), n_(host.vertex_count()), adj_(n_ * n_, false) {
        out_deg_.assign(n_, 0);
        in_deg_.assign(n_, 0);
        und_deg_.assign(n_, 0);
        for (const auto& m : host.members()) {
            if (!adj_[m.u * n_ + m.v]) {
                adj_[m.u * n_ + m.v] = true;
                ++out_deg_[m.u];
                ++in_deg_[m.v];
            }
        }
        for (std::size_t u = 0; u < n_; ++u)
            for (std::size_t v = 0; v < n_; ++v)
                if (adj_[u * n_ + v] || adj_[v * n_ + u]) ++und_deg_[u];
    }

    std::optional<ForbiddenWitness> search(const ForbiddenPattern& p) {
        pattern_ = &p;
        std::array<int, 6> pout{}, pin{}, pdeg{};
        std::array<std::array<bool, 6>, 6> padj{};
        for (auto [u, v] : p.edges) {
            padj[u][v] = true;
            if (!p.directed) padj[v][u] = true;
        }
        for (int u = 0; u < 6; ++u)
            for (int v = 0; v < 6; ++v) {
                if (padj[u][v]) ++pout[u], ++pin[v];
                if (padj[u][v] || padj[v][u]) ++pdeg[u];
            }
        padj_ = padj;
        pout_ = pout;
        pin_ = pin;
        pdeg_ = pdeg;
        order_ = {0, 1, 2, 3, 4, 5};
        std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) { return pdeg[x] > pdeg[y]; });
        used_.assign(n_, false);
        if (extend(0)) return ForbiddenWitness{p.id, map_};
        return std::nullopt;
    }

  private:
    bool edge(VertexId u, VertexId v) const { return adj_[u * n_ + v]; }

    bool compatible(int pv, VertexId hv) const {
        if (pattern_->directed) {
            if (out_deg_[hv] < static_cast<std::size_t>(pout_[pv]) || in_deg_[hv] < static_cast<std::size_t>(pin_[pv]))
                return false;
        } else if (und_deg_[hv] < static_cast<std::size_t>(pdeg_[pv])) {
            return false;
        }
        for (std::size_t k = 0; k < depth_; ++k) {
            const int qv = order_[k];
            const VertexId hq = map_[qv];
            if (pattern_->directed) {
                if (padj_[pv][qv] && !edge(hv, hq)) return false;
                if (padj_[qv][pv] && !edge(hq, hv)) return false;
            } else if (padj_[pv][qv] && !edge(hv, hq) && !edge(hq, hv)) {
                return false;
            }
        }
        return true;
    }

    bool extend(std::size_t depth) {
        if (depth == 6) return true;
        depth_ = depth;
        const int pv = order_[depth];
        for (VertexId hv = 0; hv < n_; ++hv) {
            if (used_[hv]) continue;
            depth_ = depth;
            if (!compatible(pv, hv)) continue;
            used_[hv] = true;
            map_[pv] = hv;
            if (extend(depth + 1)) return true;
            used_[hv] = false;
        }
        return false;
    }

    const Graph& host_;
    std::size_t n_;
    std::vector<bool> adj_;
    std::vector<std::size_t> out_deg_, in_deg_, und_deg_;
    const ForbiddenPattern* pattern_ = nullptr;
    std::array<std::array<bool, 6>, 6> padj_{};
    std::array<int, 6> pout_{}, pin_{}, pdeg_{};
    std::array<int, 6> order_{};
    std::vector<bool> used_;
    std::array<VertexId, 6> map_{};
    std::size_t depth_ = 0;
};

}  // namespace

std::optional<ForbiddenWitness> find_pattern(const Graph& host, const std::vector<ForbiddenPattern>& catalog) {
    PatternSearch search(host);
    for (const auto& p : catalog) {
        if (p.directed != host.directed()) {
            throw GraphError("pattern " + p.id + " orientation does not match the host graph");
        }
        if (auto w = search.search(p)) return w;
    }
    return std::nullopt;
}

std::optional<ForbiddenWitness> scan_forbidden_undirected(const Graph& g) {
    if (g.directed()) throw GraphError("scan_forbidden_undirected needs an undirected graph");
    return find_pattern(g, undirected_forbidden_catalog());
}

std::optional<ForbiddenWitness> scan_forbidden_directed(const Graph& d) {
    if (!d.directed()) throw GraphError("scan_forbidden_directed needs a digraph");
    return find_pattern(d, directed_forbidden_catalog());
}

std::string to_string(const ForbiddenWitness& w) {
    std::ostringstream os;
    os << "pattern=" << w.pattern_id << " map";
    for (std::size_t i = 0; i < 6; ++i) os << ' ' << pattern_vertex_names[i] << "->" << w.map[i];
    return os.str();
}

}  // namespace ad2pd
