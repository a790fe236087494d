#include "ad2pd/two_path.hpp"

#include <algorithm>
#include <sstream>

namespace ad2pd {

std::optional<TwoPath> make_two_path(const Graph& g, MemberId e, MemberId f) {
    if (e == f || e >= g.member_count() || f >= g.member_count()) return std::nullopt;
    if (f < e) std::swap(e, f);
    const Member a = g.member(e);
    const Member b = g.member(f);
    if (g.directed()) {
        if (a.v == b.u && a.u == b.v) return TwoPath{{a.u, a.v, a.u}, e, f};
        if (a.v == b.u) return TwoPath{{a.u, a.v, b.v}, e, f};
        if (b.v == a.u) return TwoPath{{b.u, a.u, a.v}, f, e};
        return std::nullopt;
    }
    const bool same_pair = (a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u);
    if (same_pair) return TwoPath{{a.u, a.v, a.u}, e, f};
    VertexId shared;
    if (a.u == b.u || a.u == b.v) {
        shared = a.u;
    } else if (a.v == b.u || a.v == b.v) {
        shared = a.v;
    } else {
        return std::nullopt;
    }
    const VertexId x = a.u == shared ? a.v : a.u;
    const VertexId z = b.u == shared ? b.v : b.u;
    return TwoPath{{x, shared, z}, e, f};
}

std::vector<TwoPath> enumerate_two_paths(const Graph& g) {
    std::vector<TwoPath> out;
    for (VertexId y = 0; y < g.vertex_count(); ++y) {
        const auto inc = g.incident(y);
        for (std::size_t i = 0; i < inc.size(); ++i) {
            for (std::size_t j = i + 1; j < inc.size(); ++j) {
                auto p = make_two_path(g, inc[i], inc[j]);
                // Closed paths are seen from both of their vertices; keep one.
                if (p && (!p->closed() || p->ends[1] == y)) out.push_back(*p);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool in_conflict(const TwoPath& p, const TwoPath& q) noexcept {
    int shared = 0;
    const std::size_t np = p.closed() ? 2 : 3;
    const std::size_t nq = q.closed() ? 2 : 3;
    for (std::size_t i = 0; i < np; ++i) {
        for (std::size_t j = 0; j < nq; ++j) {
            if (p.ends[i] == q.ends[j]) ++shared;
        }
    }
    return shared >= 2;
}

std::string to_string(const TwoPath& p) {
    std::ostringstream os;
    os << '(' << p.ends[0] << ',' << p.ends[1] << ',' << p.ends[2] << ")[" << p.first << ',' << p.second << ']';
    return os.str();
}

namespace {

bool joins(const Graph& g, const Member& m, VertexId from, VertexId to) {
    if (m.u == from && m.v == to) return true;
    return !g.directed() && m.u == to && m.v == from;
}

}  // namespace

std::optional<Violation> verify_decomposition(const Graph& g, const Decomposition& x) {
    using Kind = Violation::Kind;
    std::vector<int> cover(g.member_count(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const auto& p = x[i];
        const bool ok = p.first != p.second && p.first < g.member_count() && p.second < g.member_count() &&
                        p.ends[0] != p.ends[1] && p.ends[1] != p.ends[2] &&
                        joins(g, g.member(p.first), p.ends[0], p.ends[1]) &&
                        joins(g, g.member(p.second), p.ends[1], p.ends[2]);
        if (!ok) {
            return Violation{Kind::not_a_path, i, 0, "path " + std::to_string(i) + " " + to_string(p) + " is not a 2-path of the graph"};
        }
        for (MemberId m : {p.first, p.second}) {
            if (++cover[m] > 1) {
                return Violation{Kind::double_cover, m, 0, "member " + std::to_string(m) + " is covered twice"};
            }
        }
    }
    for (MemberId m = 0; m < g.member_count(); ++m) {
        if (cover[m] == 0) {
            return Violation{Kind::uncovered_member, m, 0, "member " + std::to_string(m) + " is not covered"};
        }
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            if (in_conflict(x[i], x[j])) {
                return Violation{Kind::conflict, i, j, "paths " + to_string(x[i]) + " and " + to_string(x[j]) + " are in conflict"};
            }
        }
    }
    return std::nullopt;
}

}  // namespace ad2pd
