#pragma once

// Deliberately naive reference counter for use in tests only. It walks
// every injective vertex sequence (no adjacency pruning whatsoever, the
// recursion explores all n!/(n-k)! prefixes) and tallies the ones whose
// consecutive vertices are all adjacent. Slow on purpose: it shares no
// code path, no pruning idea, and no data structure with the production
// counter, so agreement between the two is meaningful evidence.

#include <functional>
#include <vector>

#include "subpath/graph.hpp"
#include "subpath/numeric.hpp"

namespace oracle {

namespace detail {

inline void extend(const subpath::Graph& g, std::vector<int>& seq,
                   std::vector<char>& used, bool path_ok,
                   std::vector<long long>& ordered_by_length) {
    if (seq.size() >= 2 && path_ok) ordered_by_length[seq.size() - 1]++;
    if (seq.size() == (std::size_t)g.vertex_count()) return;
    for (int v = 0; v < g.vertex_count(); v++) {
        if (used[(std::size_t)v]) continue;
        bool ok = path_ok && (seq.empty() || g.has_edge(seq.back(), v));
        used[(std::size_t)v] = 1;
        seq.push_back(v);
        extend(g, seq, used, ok, ordered_by_length);
        seq.pop_back();
        used[(std::size_t)v] = 0;
    }
}

} // namespace detail

// ordered_by_length[l] = number of ordered paths with l edges, l >= 1
inline std::vector<long long> ordered_path_counts(const subpath::Graph& g) {
    std::vector<long long> counts((std::size_t)g.vertex_count() + 1, 0);
    std::vector<int> seq;
    std::vector<char> used((std::size_t)g.vertex_count(), 0);
    detail::extend(g, seq, used, true, counts);
    return counts;
}

inline subpath::BigCount pn(const subpath::Graph& g) {
    long long ordered = 0;
    for (long long c : ordered_path_counts(g)) ordered += c;
    subpath::BigCount total((long)ordered);
    return subpath::half_exact(total, "oracle ordered total parity") +
           (long)g.vertex_count();
}

// paths with the given endpoints, counted once each (enumerated from x)
inline subpath::BigCount paths_between(const subpath::Graph& g, int x, int y) {
    long long found = 0;
    std::vector<int> seq{x};
    std::vector<char> used((std::size_t)g.vertex_count(), 0);
    used[(std::size_t)x] = 1;
    std::function<void(bool)> walk = [&](bool path_ok) {
        if (path_ok && seq.size() >= 2 && seq.back() == y) found++;
        if (seq.size() == (std::size_t)g.vertex_count()) return;
        for (int v = 0; v < g.vertex_count(); v++) {
            if (used[(std::size_t)v]) continue;
            bool ok = path_ok && g.has_edge(seq.back(), v);
            used[(std::size_t)v] = 1;
            seq.push_back(v);
            walk(ok);
            seq.pop_back();
            used[(std::size_t)v] = 0;
        }
    };
    walk(true);
    return subpath::BigCount((long)found);
}

} // namespace oracle
