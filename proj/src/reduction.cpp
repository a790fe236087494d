#include "ad2pd/reduction.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "ad2pd/io.hpp"

namespace ad2pd {

CnfFormula parse_dimacs_cnf(std::string_view text) {
    CnfFormula f;
    bool header = false;
    std::size_t declared = 0;
    std::vector<std::pair<long, std::size_t>> pending;  // literal, line
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;

    const auto finish_clause = [&](std::size_t at) {
        if (pending.size() != 3) throw ParseError(at, "clause has " + std::to_string(pending.size()) + " literals, expected 3");
        std::array<Literal, 3> clause;
        for (std::size_t i = 0; i < 3; ++i) {
            const long lit = pending[i].first;
            const auto var = static_cast<std::size_t>(lit < 0 ? -lit : lit);
            if (var > f.variables) throw ParseError(at, "variable " + std::to_string(var) + " out of range");
            clause[i] = Literal{static_cast<std::uint32_t>(var - 1), lit > 0};
            for (std::size_t j = 0; j < i; ++j)
                if (clause[j].variable == clause[i].variable) throw ParseError(at, "repeated variable in clause");
        }
        f.clauses.push_back(clause);
        pending.clear();
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == 'c' || tok[0] == '%') continue;
        if (tok == "p") {
            std::string kind;
            long vars = -1, clauses = -1;
            if (header || !(ls >> kind >> vars >> clauses) || kind != "cnf" || vars < 0 || clauses < 0) {
                throw ParseError(line_no, "malformed header");
            }
            header = true;
            f.variables = static_cast<std::size_t>(vars);
            declared = static_cast<std::size_t>(clauses);
            continue;
        }
        if (!header) throw ParseError(line_no, "clause before header");
        do {
            long lit = 0;
            try {
                std::size_t used = 0;
                lit = std::stol(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw ParseError(line_no, "bad literal '" + tok + "'");
            }
            if (lit == 0) {
                finish_clause(line_no);
            } else {
                pending.emplace_back(lit, line_no);
            }
        } while (ls >> tok);
    }
    if (!header) throw ParseError(0, "missing header");
    if (!pending.empty()) finish_clause(pending.back().second);
    if (f.clauses.size() != declared) {
        throw ParseError(0, "header declares " + std::to_string(declared) + " clauses, found " +
                                std::to_string(f.clauses.size()));
    }
    return f;
}

std::string format_dimacs_cnf(const CnfFormula& f) {
    std::ostringstream os;
    os << "p cnf " << f.variables << ' ' << f.clauses.size() << '\n';
    for (const auto& c : f.clauses) {
        for (const auto& l : c) os << (l.positive ? "" : "-") << l.variable + 1 << ' ';
        os << "0\n";
    }
    return os.str();
}

bool satisfies(const CnfFormula& f, const std::vector<bool>& assignment) {
    return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const auto& c) {
        return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return assignment.at(l.variable) == l.positive; });
    });
}

VertexId Gadget::vertex(std::string_view name) const {
    const auto it = std::find(vertex_names.begin(), vertex_names.end(), name);
    if (it == vertex_names.end()) throw GraphError("no gadget vertex " + std::string(name));
    return static_cast<VertexId>(it - vertex_names.begin());
}

std::size_t Gadget::optional_count() const { return static_cast<std::size_t>(std::count(optional.begin(), optional.end(), true)); }

namespace {

using NamedArc = std::pair<const char*, const char*>;

Gadget make_gadget(std::vector<std::string> names, const std::vector<NamedArc>& plain, const std::vector<NamedArc>& optional,
                   const std::vector<NamedArc>& antiparallel) {
    Gadget g;
    g.vertex_names = std::move(names);
    const auto add = [&](const char* u, const char* v, bool opt) {
        g.arcs.push_back(Member{g.vertex(u), g.vertex(v)});
        g.optional.push_back(opt);
    };
    for (auto [u, v] : plain) add(u, v, false);
    for (auto [u, v] : optional) add(u, v, true);
    for (auto [u, v] : antiparallel) add(u, v, false), add(v, u, false);
    return g;
}

using Triple = std::array<const char*, 3>;

std::vector<std::array<VertexId, 3>> resolve(const Gadget& g, const std::vector<Triple>& named) {
    std::vector<std::array<VertexId, 3>> out;
    for (const auto& t : named) out.push_back({g.vertex(t[0]), g.vertex(t[1]), g.vertex(t[2])});
    return out;
}

// Closed 2-paths for every antiparallel pair (arcs past the optional block).
void add_closed_paths(const Gadget& g, std::vector<std::array<VertexId, 3>>& out) {
    for (std::size_t i = 0; i < g.arcs.size(); ++i) {
        if (g.optional[i]) continue;
        const auto& a = g.arcs[i];
        for (std::size_t j = i + 1; j < g.arcs.size(); ++j) {
            if (g.arcs[j].u == a.v && g.arcs[j].v == a.u) out.push_back({a.u, a.v, a.u});
        }
    }
}

}  // namespace

Gadget build_pair_gadget() {
    // v4 is also w2.
    return make_gadget({"v1", "v2", "v3", "v4", "v5", "w1", "w3", "w4", "w5", "u1", "u2", "u3", "u4", "u5", "c1", "c2"},
                       {{"v2", "v3"}, {"v3", "v4"}, {"v4", "w3"}, {"w3", "w4"}, {"u1", "u2"}, {"u2", "u3"},
                        {"u3", "u4"}, {"u4", "u5"}, {"v2", "u4"}, {"u4", "v4"}, {"v4", "u2"}, {"u2", "w4"}},
                       {{"v1", "v2"}, {"v4", "v5"}, {"w1", "v4"}, {"w4", "w5"}, {"c1", "u2"}, {"u2", "c2"}},
                       {{"v1", "u4"}, {"v2", "u3"}, {"v3", "u4"}, {"v3", "u2"}, {"u4", "v5"}, {"w1", "u2"},
                        {"w3", "u2"}, {"u2", "w5"}, {"u3", "w4"}, {"u4", "w3"}, {"v3", "w3"}, {"v5", "w1"},
                        {"v3", "w1"}, {"v5", "u2"}, {"u4", "w1"}, {"v5", "w3"}});
}

Gadget build_clause_gadget() {
    return make_gadget({"c1", "c2", "u1", "u2", "v1", "v2", "p1", "p2", "p3"},
                       {{"u1", "c1"}, {"u2", "c1"}, {"c2", "v1"}, {"c2", "v2"}},
                       {{"c1", "p1"}, {"c1", "p2"}, {"c1", "p3"}, {"p1", "c2"}, {"p2", "c2"}, {"p3", "c2"}},
                       {{"u1", "u2"}, {"v1", "v2"}, {"p1", "p2"}, {"p2", "p3"}, {"p1", "p3"}});
}

const char* to_string(PairCase c) {
    switch (c) {
        case PairCase::TT: return "TT";
        case PairCase::TF: return "TF";
        case PairCase::FT: return "FT";
        case PairCase::FF: return "FF";
    }
    return "?";
}

std::vector<std::size_t> pair_case_removed_arcs(const Gadget& pair, PairCase pair_case) {
    std::vector<NamedArc> m;
    const bool v_false = pair_case == PairCase::FT || pair_case == PairCase::FF;
    const bool w_false = pair_case == PairCase::TF || pair_case == PairCase::FF;
    if (v_false) m.insert(m.end(), {{"v1", "v2"}, {"v4", "v5"}});
    if (w_false) m.insert(m.end(), {{"w1", "v4"}, {"w4", "w5"}});
    if (pair_case != PairCase::FF) m.insert(m.end(), {{"c1", "u2"}, {"u2", "c2"}});
    std::vector<std::size_t> out;
    for (auto [u, v] : m) {
        const Member want{pair.vertex(u), pair.vertex(v)};
        out.push_back(static_cast<std::size_t>(std::find(pair.arcs.begin(), pair.arcs.end(), want) - pair.arcs.begin()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::array<VertexId, 3>> pair_case_paths(const Gadget& pair, PairCase pair_case) {
    std::vector<Triple> named;
    switch (pair_case) {
        case PairCase::TT:
            named = {{"v1", "v2", "v3"}, {"v3", "v4", "v5"}, {"w1", "v4", "w3"}, {"w3", "w4", "w5"},
                     {"v2", "u4", "v4"}, {"v4", "u2", "w4"}, {"u1", "u2", "u3"}, {"u3", "u4", "u5"}};
            break;
        case PairCase::TF:
            named = {{"v1", "v2", "v3"}, {"v3", "v4", "v5"}, {"v4", "w3", "w4"}, {"u1", "u2", "w4"},
                     {"v4", "u2", "u3"}, {"v2", "u4", "v4"}, {"u3", "u4", "u5"}};
            break;
        case PairCase::FT:
            named = {{"v2", "v3", "v4"}, {"w1", "v4", "w3"}, {"w3", "w4", "w5"}, {"v4", "u2", "w4"},
                     {"u1", "u2", "u3"}, {"u3", "u4", "v4"}, {"v2", "u4", "u5"}};
            break;
        case PairCase::FF:
            named = {{"v2", "v3", "v4"}, {"v4", "w3", "w4"}, {"v2", "u4", "u5"}, {"u3", "u4", "v4"},
                     {"v4", "u2", "c2"}, {"c1", "u2", "w4"}, {"u1", "u2", "u3"}};
            break;
    }
    auto out = resolve(pair, named);
    add_closed_paths(pair, out);
    return out;
}

std::vector<std::array<VertexId, 3>> clause_paths(const Gadget& clause, std::optional<int> dropped) {
    std::vector<std::string> p{"p1", "p2", "p3"};
    if (dropped) {
        // The dropped p takes the role of p3, whose path (c1, p3, c2) disappears.
        p.erase(p.begin() + (*dropped - 1));
        p.push_back("p" + std::to_string(*dropped));
    }
    std::vector<Triple> named{{"u1", "c1", p[0].c_str()},
                              {"u2", "c1", p[1].c_str()},
                              {p[0].c_str(), "c2", "v1"},
                              {p[1].c_str(), "c2", "v2"}};
    if (!dropped) named.push_back({"c1", p[2].c_str(), "c2"});
    auto out = resolve(clause, named);
    add_closed_paths(clause, out);
    return out;
}

std::optional<VariableCycle> build_variable_gadget(const CnfFormula& f, std::uint32_t variable) {
    VariableCycle cycle;
    cycle.variable = variable;
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        for (int k = 0; k < 3; ++k) {
            const auto& lit = f.clauses[j][static_cast<std::size_t>(k)];
            if (lit.variable != variable) continue;
            for (int kp = 0; kp < 3; ++kp) {
                if (kp == k) continue;
                cycle.subpaths.push_back(ReservedSubpath{j, k, kp, lit.positive, 6 * cycle.subpaths.size()});
            }
        }
    }
    if (cycle.subpaths.empty()) return std::nullopt;
    cycle.length = 6 * cycle.subpaths.size();
    return cycle;
}

namespace {

class UnionFind {
  public:
    std::size_t add() {
        parent_.push_back(parent_.size());
        return parent_.size() - 1;
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a), b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }
    std::size_t size() const { return parent_.size(); }

  private:
    std::vector<std::size_t> parent_;
};

constexpr std::array<std::pair<int, int>, 3> literal_pairs{{{0, 1}, {0, 2}, {1, 2}}};

}  // namespace

ReductionGraph build_reduction(const CnfFormula& f) {
    const Gadget pair = build_pair_gadget();
    const Gadget clause = build_clause_gadget();
    ReductionGraph r;
    r.formula = f;

    // Raw vertices per gadget instance, glued by union-find.
    UnionFind uf;
    struct RawArc {
        std::size_t u, v;
    };
    std::vector<std::vector<RawArc>> raw_arcs;  // per instance, in local arc order
    std::vector<std::vector<std::size_t>> raw_vertices;

    std::vector<std::size_t> cycle_of_variable(f.variables, SIZE_MAX);
    for (std::uint32_t i = 0; i < f.variables; ++i) {
        auto cycle = build_variable_gadget(f, i);
        if (!cycle) continue;
        cycle_of_variable[i] = r.cycles.size();
        std::vector<std::size_t> vs(cycle->length);
        for (auto& v : vs) v = uf.add();
        std::vector<RawArc> as;
        for (std::size_t t = 0; t < cycle->length; ++t) as.push_back({vs[t], vs[(t + 1) % cycle->length]});
        raw_vertices.push_back(vs);
        raw_arcs.push_back(as);
        r.cycles.push_back({*cycle, {}, {}});
    }

    const auto instantiate = [&](const Gadget& g) {
        std::vector<std::size_t> vs(g.vertex_names.size());
        for (auto& v : vs) v = uf.add();
        std::vector<RawArc> as;
        for (const auto& a : g.arcs) as.push_back({vs[a.u], vs[a.v]});
        raw_vertices.push_back(vs);
        raw_arcs.push_back(as);
        return raw_vertices.size() - 1;
    };

    std::vector<std::size_t> pair_instance, clause_instance;
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        for (auto [k, kp] : literal_pairs) {
            pair_instance.push_back(instantiate(pair));
            r.pairs.push_back({j, k, kp, {}, {}, {}});
        }
        clause_instance.push_back(instantiate(clause));
        r.clauses.push_back({j, {}, {}});
    }

    // Pair gadget (c1, c2, u2) = clause gadget (c1, c2, p_i).
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        const auto& cv = raw_vertices[clause_instance[j]];
        for (std::size_t pi = 0; pi < 3; ++pi) {
            const auto& pv = raw_vertices[pair_instance[3 * j + pi]];
            uf.unite(pv[pair.vertex("c1")], cv[clause.vertex("c1")]);
            uf.unite(pv[pair.vertex("c2")], cv[clause.vertex("c2")]);
            uf.unite(pv[pair.vertex("u2")], cv[clause.vertex("p" + std::to_string(pi + 1))]);
        }
    }

    // Chain identification with the reserved subpaths.
    const std::array<VertexId, 5> v_chain{pair.vertex("v1"), pair.vertex("v2"), pair.vertex("v3"), pair.vertex("v4"),
                                          pair.vertex("v5")};
    const std::array<VertexId, 5> w_chain{pair.vertex("w1"), pair.vertex("v4"), pair.vertex("w3"), pair.vertex("w4"),
                                          pair.vertex("w5")};
    for (std::size_t c = 0; c < r.cycles.size(); ++c) {
        const auto& cycle = r.cycles[c].cycle;
        const auto& qs = raw_vertices[c];
        for (const auto& sp : cycle.subpaths) {
            const int lo = std::min(sp.position, sp.partner), hi = std::max(sp.position, sp.partner);
            const std::size_t which = lo == 0 ? (hi == 1 ? 0 : 1) : 2;
            const auto& pv = raw_vertices[pair_instance[3 * sp.clause + which]];
            const auto& chain = sp.position < sp.partner ? v_chain : w_chain;
            const std::size_t shift = sp.positive ? 0 : 1;
            for (std::size_t l = 0; l < 5; ++l) {
                uf.unite(pv[chain[l]], qs[(sp.first_arc + l + shift) % cycle.length]);
            }
        }
    }

    // Compact vertex ids in order of first appearance, then merge equal arcs.
    std::vector<VertexId> compact(uf.size(), UINT32_MAX);
    VertexId next_vertex = 0;
    for (std::size_t x = 0; x < uf.size(); ++x) {
        const auto root = uf.find(x);
        if (compact[root] == UINT32_MAX) compact[root] = next_vertex++;
    }
    std::map<std::pair<VertexId, VertexId>, MemberId> arc_ids;
    std::vector<Member> arcs;
    std::vector<std::vector<MemberId>> instance_arcs;
    for (const auto& as : raw_arcs) {
        std::vector<MemberId> ids;
        for (const auto& a : as) {
            const Member m{compact[uf.find(a.u)], compact[uf.find(a.v)]};
            const auto [it, fresh] = arc_ids.emplace(std::make_pair(m.u, m.v), static_cast<MemberId>(arcs.size()));
            if (fresh) arcs.push_back(m);
            ids.push_back(it->second);
        }
        instance_arcs.push_back(std::move(ids));
    }
    r.graph = Graph::digraph(next_vertex, std::move(arcs));

    const auto vertices_of = [&](std::size_t inst) {
        std::vector<VertexId> out;
        for (auto x : raw_vertices[inst]) out.push_back(compact[uf.find(x)]);
        return out;
    };
    for (std::size_t c = 0; c < r.cycles.size(); ++c) {
        r.cycles[c].vertex = vertices_of(c);
        r.cycles[c].arc = instance_arcs[c];
    }
    for (std::size_t p = 0; p < r.pairs.size(); ++p) {
        r.pairs[p].vertex = vertices_of(pair_instance[p]);
        r.pairs[p].arc = instance_arcs[pair_instance[p]];
        for (std::size_t a = 0; a < pair.arcs.size(); ++a)
            if (pair.optional[a]) r.pairs[p].optional_arcs.push_back(r.pairs[p].arc[a]);
    }
    for (std::size_t j = 0; j < r.clauses.size(); ++j) {
        r.clauses[j].vertex = vertices_of(clause_instance[j]);
        r.clauses[j].arc = instance_arcs[clause_instance[j]];
    }
    return r;
}

std::string format_provenance(const ReductionGraph& r) {
    const Gadget pair = build_pair_gadget();
    const Gadget clause = build_clause_gadget();
    std::ostringstream os;
    for (const auto& c : r.cycles) {
        for (std::size_t t = 0; t < c.vertex.size(); ++t)
            os << "C" << c.cycle.variable + 1 << " q" << t << ' ' << c.vertex[t] << '\n';
    }
    for (const auto& p : r.pairs) {
        for (std::size_t v = 0; v < p.vertex.size(); ++v) {
            os << "D" << p.clause + 1 << "_" << p.k + 1 << p.k_prime + 1 << ' ' << pair.vertex_names[v] << ' '
               << p.vertex[v] << '\n';
        }
    }
    for (const auto& c : r.clauses) {
        for (std::size_t v = 0; v < c.vertex.size(); ++v)
            os << "D" << c.clause + 1 << ' ' << clause.vertex_names[v] << ' ' << c.vertex[v] << '\n';
    }
    return os.str();
}

Decomposition paths_from_triples(const Graph& g, const std::vector<std::array<VertexId, 3>>& triples) {
    std::map<std::pair<VertexId, VertexId>, MemberId> ids;
    for (MemberId e = 0; e < g.member_count(); ++e) ids.emplace(std::make_pair(g.member(e).u, g.member(e).v), e);
    const auto arc = [&](VertexId u, VertexId v) {
        const auto it = ids.find({u, v});
        if (it == ids.end()) throw GraphError("no arc " + std::to_string(u) + "->" + std::to_string(v));
        return it->second;
    };
    Decomposition x;
    for (const auto& t : triples) x.push_back(TwoPath{t, arc(t[0], t[1]), arc(t[1], t[2])});
    return x;
}

Graph gadget_graph(const Gadget& gadget, const std::vector<std::size_t>& removed) {
    std::vector<Member> arcs;
    for (std::size_t a = 0; a < gadget.arcs.size(); ++a)
        if (std::find(removed.begin(), removed.end(), a) == removed.end()) arcs.push_back(gadget.arcs[a]);
    return Graph::digraph(gadget.vertex_names.size(), std::move(arcs));
}

std::optional<Decomposition> decomposition_from_assignment(const ReductionGraph& r, const std::vector<bool>& assignment) {
    if (assignment.size() < r.formula.variables) throw GraphError("assignment shorter than the variable count");
    if (!satisfies(r.formula, assignment)) return std::nullopt;
    const Gadget pair = build_pair_gadget();
    const Gadget clause = build_clause_gadget();
    const auto value = [&](const Literal& l) { return assignment[l.variable] == l.positive; };

    std::vector<std::array<VertexId, 3>> triples;
    const auto add_local = [&](const std::vector<VertexId>& vertex, const std::vector<std::array<VertexId, 3>>& local) {
        for (const auto& t : local) triples.push_back({vertex[t[0]], vertex[t[1]], vertex[t[2]]});
    };

    // True variables pair cycle arcs (2t, 2t+1), false ones (2t+1, 2t+2).
    for (const auto& c : r.cycles) {
        const std::size_t offset = assignment[c.cycle.variable] ? 0 : 1;
        for (std::size_t t = 0; t < c.cycle.length / 2; ++t) {
            const auto first = (2 * t + offset) % c.cycle.length;
            triples.push_back({c.vertex[first], c.vertex[(first + 1) % c.cycle.length],
                               c.vertex[(first + 2) % c.cycle.length]});
        }
    }
    for (const auto& p : r.pairs) {
        const auto& lits = r.formula.clauses[p.clause];
        const bool tv = value(lits[static_cast<std::size_t>(p.k)]);
        const bool tw = value(lits[static_cast<std::size_t>(p.k_prime)]);
        const PairCase pc = tv ? (tw ? PairCase::TT : PairCase::TF) : (tw ? PairCase::FT : PairCase::FF);
        add_local(p.vertex, pair_case_paths(pair, pc));
    }
    for (std::size_t j = 0; j < r.clauses.size(); ++j) {
        const auto& lits = r.formula.clauses[j];
        std::optional<int> dropped;
        for (std::size_t pi = 0; pi < 3; ++pi) {
            const auto [k, kp] = literal_pairs[pi];
            if (!value(lits[static_cast<std::size_t>(k)]) && !value(lits[static_cast<std::size_t>(kp)]))
                dropped = static_cast<int>(pi + 1);
        }
        add_local(r.clauses[j].vertex, clause_paths(clause, dropped));
    }

    // Gadget paths that run along a cycle coincide with cycle paths.
    auto x = paths_from_triples(r.graph, triples);
    std::sort(x.begin(), x.end());
    x.erase(std::unique(x.begin(), x.end()), x.end());
    return x;
}

}  // namespace ad2pd
