#pragma once

// Exact closed forms for subpath numbers of the standard families: trees,
// cycles, unicyclic graphs, complete and complete bipartite graphs, the
// G(n,p) expectation, ladders, and the hexagonal-chain bounds. Everything
// is exact integer/rational arithmetic; fractional coefficients are handled
// over a common denominator with a divisibility check so a transcription
// slip fails loudly instead of rounding.

#include <queue>
#include <utility>
#include <vector>

#include "subpath/errors.hpp"
#include "subpath/graph.hpp"
#include "subpath/numeric.hpp"

namespace subpath {

inline BigCount pn_tree(long long n) {
    if (n < 1) throw input_error("pn_tree: n must be >= 1, got " + std::to_string(n));
    return binomial(n + 1, 2);
}

inline BigCount pn_cycle(long long n) {
    if (n < 3) throw input_error("pn_cycle: n must be >= 3, got " + std::to_string(n));
    BigCount v((long)n);
    return v * v;
}

// Component sizes n_1..n_g of the forest left after deleting the cycle
// edges, one component per cycle vertex.
inline BigCount pn_unicyclic(const std::vector<long long>& component_sizes) {
    if (component_sizes.size() < 3)
        throw input_error("pn_unicyclic: need >= 3 components (cycle length >= 3), got " +
                          std::to_string(component_sizes.size()));
    BigCount n = 0, drop = 0;
    for (long long s : component_sizes) {
        if (s < 1)
            throw input_error("pn_unicyclic: component sizes must be >= 1, got " +
                              std::to_string(s));
        n += (long)s;
        drop += binomial(s, 2);
    }
    return n + 2 * binomial(n, 2) - drop;
}

// Locates the unique cycle of a unicyclic graph by stripping degree-1
// vertices, then sizes the pendant forest hanging off each cycle vertex.
// Sizes are reported in cycle order starting from the smallest cycle vertex
// id, walking toward its smaller cycle neighbor.
inline std::vector<long long> unicyclic_component_sizes(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3 || g.edge_count() != n || !stats(g).connected)
        throw input_error("unicyclic_component_sizes: graph is not unicyclic "
                          "(need connected with m = n)");

    std::vector<int> deg((std::size_t)n);
    std::queue<int> leaves;
    for (int v = 0; v < n; v++) {
        deg[(std::size_t)v] = g.degree(v);
        if (deg[(std::size_t)v] == 1) leaves.push(v);
    }
    std::vector<char> stripped((std::size_t)n, 0);
    while (!leaves.empty()) {
        int v = leaves.front();
        leaves.pop();
        stripped[(std::size_t)v] = 1;
        for (int w : g.neighbors(v))
            if (!stripped[(std::size_t)w] && --deg[(std::size_t)w] == 1)
                leaves.push(w);
    }

    std::vector<int> cycle;
    int start = -1;
    for (int v = 0; v < n; v++)
        if (!stripped[(std::size_t)v]) {
            start = v;
            break;
        }
    SUBPATH_CHECK(start >= 0, "unicyclic graph lost its cycle");
    int prev = -1, cur = start;
    do {
        cycle.push_back(cur);
        int next = -1;
        for (int w : g.neighbors(cur))
            if (!stripped[(std::size_t)w] && w != prev && (next == -1 || w < next))
                next = w;
        prev = cur;
        cur = next;
    } while (cur != start);

    std::vector<long long> sizes;
    sizes.reserve(cycle.size());
    for (int c : cycle) {
        long long count = 1;
        std::queue<int> q;
        std::vector<char> seen((std::size_t)n, 0);
        seen[(std::size_t)c] = 1;
        q.push(c);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v))
                if (stripped[(std::size_t)w] && !seen[(std::size_t)w]) {
                    seen[(std::size_t)w] = 1;
                    count++;
                    q.push(w);
                }
        }
        sizes.push_back(count);
    }
    return sizes;
}

inline BigCount pn_unicyclic(const Graph& g) {
    return pn_unicyclic(unicyclic_component_sizes(g));
}

inline BigCount pn_complete(long long n) {
    if (n < 1) throw input_error("pn_complete: n must be >= 1, got " + std::to_string(n));
    // sum of falling factorials n!/(n-k)! for k = 1..n, then (sum + n)/2
    BigCount falling = 1, sum = 0;
    for (long long k = 1; k <= n; k++) {
        falling *= (long)(n - k + 1);
        sum += falling;
    }
    return half_exact(sum + (long)n, "pn_complete parity");
}

inline Rational expected_pn(long long n, const Rational& p) {
    if (n < 1) throw input_error("expected_pn: n must be >= 1, got " + std::to_string(n));
    if (p < 0 || p > 1)
        throw input_error("expected_pn: p must lie in [0,1], got " + p.get_str());
    BigCount falling = 1;
    Rational pw = 1, sum = 0;
    for (long long k = 1; k <= n; k++) {
        falling *= (long)(n - k + 1);
        sum += Rational(falling) * pw;
        pw *= p;
    }
    return (sum + (long)n) / 2;
}

// Statement form of the K_{a,b} formula. Paths alternate sides, so a path
// between two vertices of one side with k vertices of the other side picks
// its k-1 interior same-side vertices from the a-2 (resp. b-2) vertices that
// are not endpoints; binomials with impossible ranges vanish and the printed
// summation limits are kept as-is.
inline BigCount pn_complete_bipartite(long long a, long long b) {
    if (a < 1 || b < 1)
        throw input_error("pn_complete_bipartite: sides must be >= 1, got " +
                          std::to_string(a) + "," + std::to_string(b));
    if (a > b) std::swap(a, b);

    BigCount s1 = 0, s2 = 0, s3 = 0;
    for (long long k = 1; k <= a; k++)
        s1 += binomial(b, (unsigned long)k) * factorial((unsigned long)k) *
              binomial(a - 2, (unsigned long)(k - 1)) * factorial((unsigned long)(k - 1));
    s1 *= binomial(a, 2);
    for (long long k = 1; k <= a + 1; k++)
        s2 += binomial(a, (unsigned long)k) * factorial((unsigned long)k) *
              binomial(b - 2, (unsigned long)(k - 1)) * factorial((unsigned long)(k - 1));
    s2 *= binomial(b, 2);
    for (long long k = 1; k <= a; k++) {
        BigCount f = factorial((unsigned long)(k - 1));
        s3 += binomial(a - 1, (unsigned long)(k - 1)) *
              binomial(b - 1, (unsigned long)(k - 1)) * f * f;
    }
    s3 *= BigCount((long)a) * BigCount((long)b);
    return s1 + s2 + s3 + (long)(a + b);
}

inline BigCount pn_ladder(long long k) {
    if (k < 2) throw input_error("pn_ladder: k must be >= 2, got " + std::to_string(k));
    BigCount kk((long)k);
    BigCount numer = 108 * pow2((unsigned long)k) - kk * kk * kk - 12 * kk * kk -
                     56 * kk - 99;
    SUBPATH_CHECK(numer > 0 && numer % 3 == 0, "pn_ladder divisibility");
    return numer / 3;
}

inline std::pair<BigCount, BigCount> hexagonal_bounds(long long k) {
    if (k < 2)
        throw input_error("hexagonal_bounds: k must be >= 2, got " + std::to_string(k));
    BigCount kk((long)k);
    BigCount lo3 = 432 * pow2((unsigned long)k) - 5 * kk * kk * kk - 63 * kk * kk -
                   265 * kk - 423;
    BigCount hi2 = 288 * pow2((unsigned long)k) - 3 * kk * kk * kk - 43 * kk * kk -
                   176 * kk - 282;
    SUBPATH_CHECK(lo3 > 0 && lo3 % 3 == 0, "hexagonal lower bound divisibility");
    SUBPATH_CHECK(hi2 > 0 && hi2 % 2 == 0, "hexagonal upper bound divisibility");
    BigCount lower = lo3 / 3, upper = hi2 / 2;
    SUBPATH_CHECK(lower <= upper, "hexagonal bounds ordering");
    return {lower, upper};
}

} // namespace subpath
