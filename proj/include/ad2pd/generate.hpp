#pragma once

#include <cstdint>
#include <random>

#include "ad2pd/graph.hpp"
#include "ad2pd/reduction.hpp"

namespace ad2pd {

/// Seeded generator with a fixed output sequence: std::mt19937_64 (its output is
/// pinned by the C++ standard), bounded draws as next() % n, reals from the top
/// 53 bits. Standard distributions are avoided since their output varies by library.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform-ish in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n) { return next() % n; }
    /// In [0, 1).
    double real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    bool chance(double p) { return real() < p; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

  private:
    std::mt19937_64 engine_;
};

/// C_n on vertices 0..n-1.
Graph generate_cycle(std::size_t n, bool directed = true);

/// Simple SP-digraph with ops + 1 arcs from random series/parallel merges.
/// Parallel merges of two parts that both hold the direct source-sink arc fall
/// back to series. Arc order and vertex labels are shuffled.
Graph generate_sp(std::size_t ops, Rng& rng, double parallel_probability = 0.5);

enum class RandomKind { undirected, oriented, directed };

/// Each vertex pair independently with probability p. `oriented` picks one
/// direction per chosen pair; `directed` draws each ordered pair separately.
Graph generate_random(std::size_t n, double p, RandomKind kind, Rng& rng);

/// Random 3-CNF, three distinct variables per clause, random signs.
CnfFormula generate_cnf(std::size_t variables, std::size_t clauses, Rng& rng);

}  // namespace ad2pd
