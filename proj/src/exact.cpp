#include "ad2pd/exact.hpp"

#include <algorithm>
#include <limits>

#include "ad2pd/conflict.hpp"
#include "ad2pd/matching.hpp"

namespace ad2pd {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::feasible: return "feasible";
        case Verdict::infeasible: return "infeasible";
        case Verdict::budget_exhausted: return "budget-exhausted";
    }
    return "?";
}

std::size_t count_conflicts(const Decomposition& x) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (in_conflict(x[i], x[j])) ++total;
    return total;
}

namespace {

class Clock {
  public:
    explicit Clock(const SearchBudget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {}

    /// Counts one node; false once a limit is exceeded.
    bool tick() {
        ++nodes_;
        if (budget_.node_limit && nodes_ > *budget_.node_limit) return false;
        if (budget_.time_limit_seconds) {
            const std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start_;
            if (spent.count() > *budget_.time_limit_seconds) return false;
        }
        return true;
    }
    std::uint64_t nodes() const { return nodes_; }

  private:
    SearchBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
};

// Shared bookkeeping: which paths are still selectable and how many selectable
// paths each uncovered member has left.
class Board {
  public:
    explicit Board(const Graph& g) : h_(build_conflict_graph(g)), members_(g.member_count()) {
        by_member_.resize(members_);
        for (std::uint32_t p = 0; p < h_.paths.size(); ++p) {
            by_member_[h_.paths[p].first].push_back(p);
            by_member_[h_.paths[p].second].push_back(p);
        }
        banned_.assign(h_.paths.size(), 0);
        covered_.assign(members_, false);
        avail_.resize(members_);
        for (std::size_t m = 0; m < members_; ++m) avail_[m] = by_member_[m].size();
    }

    const ConflictGraph& conflicts() const { return h_; }
    const std::vector<std::uint32_t>& paths_of(MemberId m) const { return by_member_[m]; }
    bool available(std::uint32_t p) const { return banned_[p] == 0; }
    std::size_t member_count() const { return members_; }
    bool covered(MemberId m) const { return covered_[m]; }

    /// Uncovered member with the fewest selectable paths; lowest id on ties.
    std::optional<MemberId> most_constrained() const {
        std::optional<MemberId> best;
        for (MemberId m = 0; m < members_; ++m) {
            if (covered_[m]) continue;
            if (!best || avail_[m] < avail_[*best]) best = m;
        }
        return best;
    }
    std::size_t choices(MemberId m) const { return avail_[m]; }

    void select(std::uint32_t p) {
        ban(p);
        for (auto q : h_.adjacency[p]) ban(q);
        covered_[h_.paths[p].first] = covered_[h_.paths[p].second] = true;
    }
    void unselect(std::uint32_t p) {
        covered_[h_.paths[p].first] = covered_[h_.paths[p].second] = false;
        for (auto q : h_.adjacency[p]) unban(q);
        unban(p);
    }

  private:
    void ban(std::uint32_t q) {
        if (banned_[q]++ == 0) --avail_[h_.paths[q].first], --avail_[h_.paths[q].second];
    }
    void unban(std::uint32_t q) {
        if (--banned_[q] == 0) ++avail_[h_.paths[q].first], ++avail_[h_.paths[q].second];
    }

    ConflictGraph h_;
    std::size_t members_;
    std::vector<std::vector<std::uint32_t>> by_member_;
    std::vector<int> banned_;
    std::vector<bool> covered_;
    std::vector<std::size_t> avail_;
};

class ExactSearch {
  public:
    ExactSearch(const Graph& g, const SearchBudget& b) : board_(g), clock_(b) {}

    ExactResult run() {
        ExactResult r;
        if (board_.member_count() % 2 != 0) {
            r.verdict = Verdict::infeasible;
            return r;
        }
        switch (dfs()) {
            case Step::found:
                r.verdict = Verdict::feasible;
                for (auto p : chosen_) r.decomposition.push_back(board_.conflicts().paths[p]);
                std::sort(r.decomposition.begin(), r.decomposition.end());
                break;
            case Step::exhausted: r.verdict = Verdict::infeasible; break;
            case Step::out_of_budget: r.verdict = Verdict::budget_exhausted; break;
        }
        r.nodes = clock_.nodes();
        return r;
    }

  private:
    enum class Step { found, exhausted, out_of_budget };

    Step dfs() {
        if (!clock_.tick()) return Step::out_of_budget;
        const auto m = board_.most_constrained();
        if (!m) return Step::found;
        if (board_.choices(*m) == 0) return Step::exhausted;
        for (auto p : board_.paths_of(*m)) {
            if (!board_.available(p)) continue;
            board_.select(p);
            chosen_.push_back(p);
            const auto s = dfs();
            if (s != Step::exhausted) return s;
            chosen_.pop_back();
            board_.unselect(p);
        }
        return Step::exhausted;
    }

    Board board_;
    Clock clock_;
    std::vector<std::uint32_t> chosen_;
};

class WeightedSearch {
  public:
    WeightedSearch(const Graph& g, const WeightMap& w, const SearchBudget& b) : board_(g), clock_(b) {
        for (const auto& p : board_.conflicts().paths) cost_.push_back(weight_of(w, p));
    }

    WeightedResult run() {
        WeightedResult r;
        if (board_.member_count() % 2 == 0) dfs(0.0);
        r.nodes = clock_.nodes();
        if (found_) {
            for (auto p : best_) r.decomposition.push_back(board_.conflicts().paths[p]);
            std::sort(r.decomposition.begin(), r.decomposition.end());
            r.cost = best_cost_;
        }
        if (out_of_budget_) {
            r.verdict = Verdict::budget_exhausted;
        } else {
            r.verdict = found_ ? Verdict::feasible : Verdict::infeasible;
        }
        return r;
    }

  private:
    double lower_bound(double cost) const {
        double bound = cost;
        for (MemberId m = 0; m < board_.member_count(); ++m) {
            if (board_.covered(m)) continue;
            double cheapest = std::numeric_limits<double>::infinity();
            for (auto p : board_.paths_of(m))
                if (board_.available(p)) cheapest = std::min(cheapest, cost_[p]);
            bound += cheapest / 2;
        }
        return bound;
    }

    void dfs(double cost) {
        if (out_of_budget_) return;
        if (!clock_.tick()) {
            out_of_budget_ = true;
            return;
        }
        const auto m = board_.most_constrained();
        if (!m) {
            if (!found_ || cost < best_cost_) found_ = true, best_cost_ = cost, best_ = chosen_;
            return;
        }
        if (board_.choices(*m) == 0) return;
        if (found_ && lower_bound(cost) >= best_cost_) return;

        std::vector<std::uint32_t> options;
        for (auto p : board_.paths_of(*m))
            if (board_.available(p)) options.push_back(p);
        std::stable_sort(options.begin(), options.end(), [&](auto x, auto y) { return cost_[x] < cost_[y]; });
        for (auto p : options) {
            board_.select(p);
            chosen_.push_back(p);
            dfs(cost + cost_[p]);
            chosen_.pop_back();
            board_.unselect(p);
            if (out_of_budget_) return;
        }
    }

    Board board_;
    Clock clock_;
    std::vector<double> cost_;
    std::vector<std::uint32_t> chosen_, best_;
    double best_cost_ = 0;
    bool found_ = false;
    bool out_of_budget_ = false;
};

// Partitions ignore conflicts except as the objective. A path is usable while
// both of its members are uncovered.
class MinConflictSearch {
  public:
    MinConflictSearch(const Graph& g, const SearchBudget& b)
        : g_(g), h_(build_conflict_graph(g)), clock_(b), by_member_(g.member_count()) {
        for (std::uint32_t p = 0; p < h_.paths.size(); ++p) {
            by_member_[h_.paths[p].first].push_back(p);
            by_member_[h_.paths[p].second].push_back(p);
        }
        covered_.assign(g.member_count(), false);
        against_.assign(h_.paths.size(), 0);
    }

    MinConflictResult run() {
        MinConflictResult r;
        const auto start = perfect_matching(line_graph_as_graph(g_));
        if (!start) {
            r.status = MinConflictResult::Status::no_partition;
            return r;
        }
        // The matching is a first incumbent.
        const auto paths = enumerate_two_paths(g_);
        for (auto k : *start) {
            const auto it = std::lower_bound(h_.paths.begin(), h_.paths.end(), paths[k]);
            best_.push_back(static_cast<std::uint32_t>(it - h_.paths.begin()));
        }
        Decomposition first;
        for (auto p : best_) first.push_back(h_.paths[p]);
        best_value_ = count_conflicts(first);

        if (best_value_ > 0) dfs(0);
        r.status = out_of_budget_ ? MinConflictResult::Status::budget_exhausted : MinConflictResult::Status::optimal;
        for (auto p : best_) r.partition.push_back(h_.paths[p]);
        std::sort(r.partition.begin(), r.partition.end());
        r.conflicts = best_value_;
        r.nodes = clock_.nodes();
        return r;
    }

  private:
    bool usable(std::uint32_t p) const { return !covered_[h_.paths[p].first] && !covered_[h_.paths[p].second]; }

    void dfs(std::size_t value) {
        if (out_of_budget_ || best_value_ == 0) return;
        if (!clock_.tick()) {
            out_of_budget_ = true;
            return;
        }
        // Branch on the uncovered member with the fewest usable paths, and bound
        // by the cheapest way to cover every uncovered member.
        std::optional<MemberId> pick;
        std::size_t pick_options = 0;
        std::size_t halves = 0;
        for (MemberId m = 0; m < g_.member_count(); ++m) {
            if (covered_[m]) continue;
            std::size_t options = 0, cheapest = std::numeric_limits<std::size_t>::max();
            for (auto p : by_member_[m]) {
                if (!usable(p)) continue;
                ++options;
                cheapest = std::min(cheapest, against_[p]);
            }
            if (options == 0) return;
            halves += cheapest;
            if (!pick || options < pick_options) pick = m, pick_options = options;
        }
        if (!pick) {
            if (value < best_value_) best_value_ = value, best_ = chosen_;
            return;
        }
        if (value + (halves + 1) / 2 >= best_value_) return;

        std::vector<std::uint32_t> options;
        for (auto p : by_member_[*pick])
            if (usable(p)) options.push_back(p);
        std::stable_sort(options.begin(), options.end(), [&](auto x, auto y) { return against_[x] < against_[y]; });
        for (auto p : options) {
            const std::size_t added = against_[p];
            covered_[h_.paths[p].first] = covered_[h_.paths[p].second] = true;
            for (auto q : h_.adjacency[p]) ++against_[q];
            chosen_.push_back(p);
            dfs(value + added);
            chosen_.pop_back();
            for (auto q : h_.adjacency[p]) --against_[q];
            covered_[h_.paths[p].first] = covered_[h_.paths[p].second] = false;
            if (out_of_budget_ || best_value_ == 0) return;
        }
    }

    const Graph& g_;
    ConflictGraph h_;
    Clock clock_;
    std::vector<std::vector<std::uint32_t>> by_member_;
    std::vector<bool> covered_;
    std::vector<std::size_t> against_;  // conflicts with the chosen paths
    std::vector<std::uint32_t> chosen_, best_;
    std::size_t best_value_ = 0;
    bool out_of_budget_ = false;
};

}  // namespace

ExactResult solve_exact(const Graph& g, const SearchBudget& budget) { return ExactSearch(g, budget).run(); }

WeightedResult solve_weighted(const Graph& g, const WeightMap& w, const SearchBudget& budget) {
    return WeightedSearch(g, w, budget).run();
}

MinConflictResult solve_min_conflicts(const Graph& g, const SearchBudget& budget) {
    return MinConflictSearch(g, budget).run();
}

}  // namespace ad2pd
