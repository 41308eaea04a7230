#pragma once

// Deterministic randomness for experiments. The generator is SplitMix64
// with the standard constants; given the same master seed the edge draws,
// and therefore every derived statistic, are identical across runs and
// platforms. Trial t of an experiment with master seed S runs on its own
// SplitMix64 stream seeded with output t of the master stream, a value
// available in closed form, so trials can be regenerated in isolation and
// in any order. Seeding trial streams with raw equidistant states instead
// would make consecutive trials share almost all of their draws (SplitMix64
// states one gamma apart produce shifted copies of the same sequence);
// passing the state through the output mixer is what decorrelates them.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "subpath/errors.hpp"
#include "subpath/graph.hpp"
#include "subpath/numeric.hpp"

namespace subpath {

namespace detail {

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace detail

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() { return detail::mix64(state_ += 0x9E3779B97F4A7C15ULL); }

    // Uniform draw from {0, ..., bound-1}, exact via rejection: values in
    // the partial block at the top of the 64-bit range are redrawn.
    std::uint64_t next_below(std::uint64_t bound) {
        SUBPATH_CHECK(bound > 0, "next_below: bound must be positive");
        std::uint64_t reject_below = (0 - bound) % bound; // 2^64 mod bound
        std::uint64_t u = next();
        while (u < reject_below) u = next();
        return u % bound;
    }

    // Exact Bernoulli(num/den); consumes at least one draw even when the
    // outcome is forced (num = 0 or num = den).
    bool bernoulli(std::uint64_t num, std::uint64_t den) {
        SUBPATH_CHECK(num <= den, "bernoulli: probability above 1");
        return next_below(den) < num;
    }

  private:
    std::uint64_t state_;
};

// Stream seeded with output number `trial` (0-based) of the master
// stream: mix64(S + (t+1)*gamma) is exactly that output, computed without
// stepping through the earlier trials.
inline SplitMix64 trial_stream(std::uint64_t master_seed, std::uint64_t trial) {
    return SplitMix64(detail::mix64(master_seed + (trial + 1) * 0x9E3779B97F4A7C15ULL));
}

// Splits a rational in [0,1] into the (num, den) pair bernoulli() expects.
inline std::pair<std::uint64_t, std::uint64_t> bernoulli_fraction(const Rational& p) {
    Rational q = p;
    q.canonicalize(); // callers may hand over an unreduced fraction
    if (q < 0 || q > 1)
        throw input_error("probability must lie in [0,1], got " + q.get_str());
    if (!q.get_den().fits_ulong_p())
        throw input_error("probability denominator exceeds the 64-bit draw range");
    return {q.get_num().get_ui(), q.get_den().get_ui()};
}

// G(n, num/den): one Bernoulli draw per vertex pair, pairs visited in
// lexicographic order (0,1), (0,2), ..., (n-2,n-1).
inline Graph gnp_graph(int n, std::uint64_t num, std::uint64_t den, SplitMix64& rng) {
    if (n < 0) throw input_error("gnp_graph: n must be >= 0");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++)
            if (rng.bernoulli(num, den)) edges.emplace_back(i, j);
    return Graph(n, edges);
}

// Standard decoding: the sequence lists n-2 vertex labels in [0, n); the
// smallest leaf not in the remaining sequence is joined to the next label.
inline Graph tree_from_pruefer(const std::vector<int>& seq) {
    int n = (int)seq.size() + 2;
    std::vector<int> degree((std::size_t)n, 1);
    for (int v : seq) {
        if (v < 0 || v >= n)
            throw input_error("tree_from_pruefer: label " + std::to_string(v) +
                              " out of range for n=" + std::to_string(n));
        degree[(std::size_t)v]++;
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve((std::size_t)(n - 1));
    int ptr = 0;
    while (degree[(std::size_t)ptr] != 1) ptr++;
    int leaf = ptr;
    for (int v : seq) {
        edges.emplace_back(leaf, v);
        if (--degree[(std::size_t)v] == 1 && v < ptr) {
            leaf = v;
        } else {
            while (degree[(std::size_t)++ptr] != 1) {}
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return Graph(n, edges);
}

// Uniform random tree on n vertices via a uniform sequence.
inline Graph random_tree(int n, SplitMix64& rng) {
    if (n < 1) throw input_error("random_tree: n must be >= 1");
    if (n == 1) return Graph(1, {});
    if (n == 2) return Graph(2, {{0, 1}});
    std::vector<int> seq((std::size_t)(n - 2));
    for (int& v : seq) v = (int)rng.next_below((std::uint64_t)n);
    return tree_from_pruefer(seq);
}

// Random connected graph: a uniform spanning tree plus an independent
// Bernoulli(num/den) draw for every remaining vertex pair, pairs in
// lexicographic order.
inline Graph random_connected_graph(int n, std::uint64_t num, std::uint64_t den,
                                    SplitMix64& rng) {
    Graph t = random_tree(n, rng);
    std::vector<std::pair<int, int>> edges(t.edges().begin(), t.edges().end());
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++) {
            if (t.has_edge(i, j)) continue;
            if (rng.bernoulli(num, den)) edges.emplace_back(i, j);
        }
    return Graph(n, edges);
}

} // namespace subpath
