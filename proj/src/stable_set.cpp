#include "ad2pd/stable_set.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace ad2pd {

namespace {

class Bits {
  public:
    explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    bool empty() const {
        return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    std::size_t count_and(const Bits& o) const {
        std::size_t c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k) c += static_cast<std::size_t>(std::popcount(words_[k] & o.words_[k]));
        return c;
    }
    Bits minus(const Bits& o) const {
        Bits r = *this;
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= ~o.words_[k];
        return r;
    }
    Bits intersect(const Bits& o) const {
        Bits r = *this;
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= o.words_[k];
        return r;
    }
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            for (auto w = words_[k]; w; w &= w - 1) f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        }
    }
    std::size_t first() const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
        }
        return std::numeric_limits<std::size_t>::max();
    }

  private:
    std::vector<std::uint64_t> words_;
};

struct Adjacency {
    std::vector<Bits> nbr;      // open neighborhoods
    std::vector<Bits> closed;   // closed neighborhoods

    explicit Adjacency(const ConflictGraph& h) {
        const std::size_t n = h.vertex_count();
        nbr.assign(n, Bits(n));
        for (std::size_t v = 0; v < n; ++v)
            for (auto w : h.adjacency[v]) nbr[v].set(w);
        closed = nbr;
        for (std::size_t v = 0; v < n; ++v) closed[v].set(v);
    }
};

// Greedy clique cover of `p`: the number of cliques bounds any stable set in p.
std::size_t clique_cover_size(const Adjacency& adj, Bits p) {
    std::size_t cliques = 0;
    while (!p.empty()) {
        const auto v = p.first();
        Bits cand = p.intersect(adj.nbr[v]);
        p.reset(v);
        while (!cand.empty()) {
            const auto w = cand.first();
            p.reset(w);
            cand = cand.intersect(adj.nbr[w]);
        }
        ++cliques;
    }
    return cliques;
}

class MaxSearch {
  public:
    MaxSearch(const ConflictGraph& h, const StableSetOptions& o) : adj_(h), opt_(o) {}

    StableSet run(std::size_t n) {
        Bits all(n);
        for (std::size_t v = 0; v < n; ++v) all.set(v);
        branch(all);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

  private:
    bool done() const { return opt_.target && best_.size() >= *opt_.target; }

    void branch(Bits p) {
        if (done()) return;
        const std::size_t mark = cur_.size();
        // Vertices with at most one candidate neighbor can always be taken.
        for (bool changed = true; changed;) {
            changed = false;
            std::optional<std::size_t> pick;
            p.for_each([&](std::size_t v) {
                if (!pick && p.count_and(adj_.nbr[v]) <= 1) pick = v;
            });
            if (pick) {
                cur_.push_back(static_cast<std::uint32_t>(*pick));
                p = p.minus(adj_.closed[*pick]);
                changed = true;
            }
        }
        if (cur_.size() > best_.size()) best_ = cur_;
        if (!p.empty() && !done()) {
            const std::size_t bound = cur_.size() + (opt_.clique_cover_bound ? clique_cover_size(adj_, p) : p.count());
            const std::size_t need = opt_.prune_below_target && opt_.target ? std::max(best_.size() + 1, *opt_.target)
                                                                            : best_.size() + 1;
            if (bound >= need) {
                std::size_t v = 0, deg = 0;
                bool first = true;
                p.for_each([&](std::size_t u) {
                    const auto d = p.count_and(adj_.nbr[u]);
                    if (first || d > deg) v = u, deg = d, first = false;
                });
                cur_.push_back(static_cast<std::uint32_t>(v));
                branch(p.minus(adj_.closed[v]));
                cur_.pop_back();
                p.reset(v);
                branch(p);
            }
        }
        cur_.resize(mark);
    }

    Adjacency adj_;
    StableSetOptions opt_;
    StableSet cur_, best_;
};

class WeightSearch {
  public:
    WeightSearch(const ConflictGraph& h, std::vector<double> w, std::size_t k) : adj_(h), w_(std::move(w)), k_(k) {}

    std::optional<StableSet> run(std::size_t n) {
        Bits all(n);
        for (std::size_t v = 0; v < n; ++v) all.set(v);
        branch(all, 0.0);
        if (!found_) return std::nullopt;
        std::sort(best_.begin(), best_.end());
        return best_;
    }

  private:
    void branch(const Bits& p, double cost) {
        if (cur_.size() == k_) {
            if (!found_ || cost < best_cost_) {
                found_ = true;
                best_cost_ = cost;
                best_ = cur_;
            }
            return;
        }
        const std::size_t need = k_ - cur_.size();
        if (p.count() < need || clique_cover_size(adj_, p) < need) return;

        std::vector<double> ws;
        p.for_each([&](std::size_t v) { ws.push_back(w_[v]); });
        std::partial_sort(ws.begin(), ws.begin() + static_cast<std::ptrdiff_t>(need), ws.end());
        double lower = cost;
        for (std::size_t i = 0; i < need; ++i) lower += ws[i];
        if (found_ && lower >= best_cost_) return;

        std::size_t v = 0, deg = 0;
        bool first = true;
        p.for_each([&](std::size_t u) {
            const auto d = p.count_and(adj_.nbr[u]);
            if (first || d > deg) v = u, deg = d, first = false;
        });
        cur_.push_back(static_cast<std::uint32_t>(v));
        branch(p.minus(adj_.closed[v]), cost + w_[v]);
        cur_.pop_back();
        Bits rest = p;
        rest.reset(v);
        branch(rest, cost);
    }

    Adjacency adj_;
    std::vector<double> w_;
    std::size_t k_;
    StableSet cur_, best_;
    double best_cost_ = 0;
    bool found_ = false;
};

}  // namespace

StableSet max_stable_set(const ConflictGraph& h, const StableSetOptions& options) {
    return MaxSearch(h, options).run(h.vertex_count());
}

std::optional<StableSet> max_weight_stable_set(const ConflictGraph& h, const WeightMap& w, std::size_t required_size) {
    std::vector<double> weights;
    weights.reserve(h.vertex_count());
    for (const auto& p : h.paths) weights.push_back(weight_of(w, p));
    return WeightSearch(h, std::move(weights), required_size).run(h.vertex_count());
}

Decomposition to_decomposition(const ConflictGraph& h, const StableSet& s) {
    Decomposition x;
    for (auto i : s) x.push_back(h.paths.at(i));
    std::sort(x.begin(), x.end());
    return x;
}

}  // namespace ad2pd
