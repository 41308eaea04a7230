#pragma once

// Exact subpath counting by exhaustive depth-first path extension. Every
// path of length >= 1 is reached from both of its endpoints, so the ordered
// totals are halved and the n trivial paths added separately. Work is
// partitioned by start vertex; per-worker tallies accumulate in machine
// words and spill into arbitrary precision, and the final reduction is a
// commutative exact sum, so results do not depend on the worker count.

#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <thread>
#include <vector>

#include "subpath/errors.hpp"
#include "subpath/graph.hpp"
#include "subpath/numeric.hpp"

namespace subpath {

struct CountOptions {
    int threads = 0; // 0: take SUBPATH_THREADS from the env, else hardware concurrency
    std::optional<std::uint64_t> budget; // cap on extension steps; unlimited if absent
};

struct LengthProfile {
    std::vector<BigCount> counts; // counts[l] = number of paths with l edges; size max(n,1)

    BigCount at(std::size_t l) const {
        return l < counts.size() ? counts[l] : BigCount(0);
    }
    BigCount total() const {
        BigCount t = 0;
        for (const auto& c : counts) t += c;
        return t;
    }
};

namespace detail {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SUBPATH_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? (int)hw : 1;
}

// Shared step budget. Workers draw quota in chunks so the hot loop pays a
// single decrement; enforcement is exact to chunk granularity.
struct SharedBudget {
    std::atomic<long long> remaining;
};

struct Quota {
    SharedBudget* shared = nullptr; // null = unlimited
    long long local = 0;
    static constexpr long long kChunk = 1024;

    bool take() {
        if (!shared) return true;
        if (local == 0) {
            long long before = shared->remaining.fetch_sub(kChunk);
            if (before <= 0) return false;
            local = std::min(before, kChunk);
        }
        local--;
        return true;
    }
};

inline void bump(std::uint64_t* small, BigCount* big, int slot) {
    if (++small[slot] == UINT64_MAX) {
        big[slot] += (unsigned long)small[slot];
        small[slot] = 0;
    }
}

// Bitmask engine for n <= 64: one word of visited state, one adjacency row
// per vertex (built here, not part of the Graph interface).
class Engine64 {
public:
    struct Scratch {
        explicit Scratch(int) {}
        std::array<std::uint64_t, 65> avail;
        std::array<int, 65> vert;
    };

    explicit Engine64(const Graph& g) : rows_((std::size_t)g.vertex_count(), 0) {
        for (auto [u, v] : g.edges()) {
            rows_[(std::size_t)u] |= 1ULL << v;
            rows_[(std::size_t)v] |= 1ULL << u;
        }
    }

    // Tallies ordered paths from s by length; false when the budget ran out.
    bool run_start(int s, std::uint64_t* small, BigCount* big, Quota& q,
                   Scratch& sc) const {
        std::uint64_t visited = 1ULL << s;
        int d = 0;
        sc.vert[0] = s;
        sc.avail[0] = rows_[(std::size_t)s];
        while (true) {
            std::uint64_t a = sc.avail[(std::size_t)d];
            if (a == 0) {
                if (d == 0) return true;
                visited &= ~(1ULL << sc.vert[(std::size_t)d]);
                d--;
                continue;
            }
            int u = std::countr_zero(a);
            sc.avail[(std::size_t)d] = a & (a - 1);
            if (!q.take()) return false;
            d++;
            bump(small, big, d);
            sc.vert[(std::size_t)d] = u;
            visited |= 1ULL << u;
            sc.avail[(std::size_t)d] = rows_[(std::size_t)u] & ~visited;
        }
    }

    // Paths from x that end at y; arrivals are counted and not extended.
    bool run_between(int x, int y, std::uint64_t* small, BigCount* big,
                     Quota& q, Scratch& sc) const {
        std::uint64_t visited = 1ULL << x;
        std::uint64_t ybit = 1ULL << y;
        int d = 0;
        sc.vert[0] = x;
        sc.avail[0] = rows_[(std::size_t)x];
        while (true) {
            std::uint64_t a = sc.avail[(std::size_t)d];
            if (a == 0) {
                if (d == 0) return true;
                visited &= ~(1ULL << sc.vert[(std::size_t)d]);
                d--;
                continue;
            }
            int u = std::countr_zero(a);
            sc.avail[(std::size_t)d] = a & (a - 1);
            if (!q.take()) return false;
            if ((1ULL << u) == ybit) {
                bump(small, big, 0);
                continue;
            }
            d++;
            sc.vert[(std::size_t)d] = u;
            visited |= 1ULL << u;
            sc.avail[(std::size_t)d] = rows_[(std::size_t)u] & ~visited;
        }
    }

private:
    std::vector<std::uint64_t> rows_;
};

// Fallback engine for arbitrary n: byte-flag visited set, index cursors
// into the sorted neighbor lists.
class EngineGeneral {
public:
    struct Scratch {
        explicit Scratch(int n)
            : visited((std::size_t)n, 0), vert((std::size_t)n + 1, 0),
              idx((std::size_t)n + 1, 0) {}
        std::vector<char> visited;
        std::vector<int> vert;
        std::vector<int> idx;
    };

    explicit EngineGeneral(const Graph& g) : g_(g) {}

    bool run_start(int s, std::uint64_t* small, BigCount* big, Quota& q,
                   Scratch& sc) const {
        std::fill(sc.visited.begin(), sc.visited.end(), 0);
        int d = 0;
        sc.vert[0] = s;
        sc.idx[0] = 0;
        sc.visited[(std::size_t)s] = 1;
        while (true) {
            const auto& nb = g_.neighbors(sc.vert[(std::size_t)d]);
            int& i = sc.idx[(std::size_t)d];
            while (i < (int)nb.size() && sc.visited[(std::size_t)nb[(std::size_t)i]]) i++;
            if (i == (int)nb.size()) {
                if (d == 0) return true;
                sc.visited[(std::size_t)sc.vert[(std::size_t)d]] = 0;
                d--;
                continue;
            }
            int u = nb[(std::size_t)i++];
            if (!q.take()) return false;
            d++;
            bump(small, big, d);
            sc.vert[(std::size_t)d] = u;
            sc.visited[(std::size_t)u] = 1;
            sc.idx[(std::size_t)d] = 0;
        }
    }

    bool run_between(int x, int y, std::uint64_t* small, BigCount* big,
                     Quota& q, Scratch& sc) const {
        std::fill(sc.visited.begin(), sc.visited.end(), 0);
        int d = 0;
        sc.vert[0] = x;
        sc.idx[0] = 0;
        sc.visited[(std::size_t)x] = 1;
        while (true) {
            const auto& nb = g_.neighbors(sc.vert[(std::size_t)d]);
            int& i = sc.idx[(std::size_t)d];
            while (i < (int)nb.size() && sc.visited[(std::size_t)nb[(std::size_t)i]]) i++;
            if (i == (int)nb.size()) {
                if (d == 0) return true;
                sc.visited[(std::size_t)sc.vert[(std::size_t)d]] = 0;
                d--;
                continue;
            }
            int u = nb[(std::size_t)i++];
            if (!q.take()) return false;
            if (u == y) {
                bump(small, big, 0);
                continue;
            }
            d++;
            sc.vert[(std::size_t)d] = u;
            sc.visited[(std::size_t)u] = 1;
            sc.idx[(std::size_t)d] = 0;
        }
    }

private:
    const Graph& g_;
};

template <class Engine>
std::vector<BigCount> ordered_counts(const Engine& eng, int n, int threads,
                                     SharedBudget* budget) {
    std::vector<std::vector<BigCount>> results((std::size_t)threads);
    std::atomic<int> next{0};
    std::atomic<bool> exhausted{false};

    auto work = [&](int w) {
        std::vector<BigCount> big((std::size_t)n + 1);
        std::vector<std::uint64_t> small((std::size_t)n + 1, 0);
        typename Engine::Scratch sc(n);
        Quota q{budget, 0};
        while (!exhausted.load(std::memory_order_relaxed)) {
            int s = next.fetch_add(1);
            if (s >= n) break;
            if (!eng.run_start(s, small.data(), big.data(), q, sc)) {
                exhausted.store(true);
                break;
            }
        }
        for (int l = 0; l <= n; l++) big[(std::size_t)l] += (unsigned long)small[(std::size_t)l];
        results[(std::size_t)w] = std::move(big);
    };

    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve((std::size_t)threads);
        for (int w = 0; w < threads; w++) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    if (exhausted) throw budget_error("node budget exhausted during path enumeration");

    std::vector<BigCount> totals((std::size_t)n + 1);
    for (auto& part : results)
        for (int l = 0; l <= n; l++) totals[(std::size_t)l] += part[(std::size_t)l];
    return totals;
}

} // namespace detail

inline LengthProfile length_profile(const Graph& g, const CountOptions& opts = {}) {
    int n = g.vertex_count();
    LengthProfile p;
    p.counts.assign((std::size_t)std::max(n, 1), 0);
    if (n == 0) return p;
    p.counts[0] = n;
    if (g.edge_count() == 0) return p;

    int threads = std::min(detail::resolve_threads(opts.threads), n);
    detail::SharedBudget shared{};
    detail::SharedBudget* bp = nullptr;
    if (opts.budget) {
        shared.remaining = (long long)std::min<std::uint64_t>(*opts.budget, INT64_MAX);
        bp = &shared;
    }
    std::vector<BigCount> ordered =
        n <= 64 ? detail::ordered_counts(detail::Engine64(g), n, threads, bp)
                : detail::ordered_counts(detail::EngineGeneral(g), n, threads, bp);
    SUBPATH_CHECK(ordered[(std::size_t)n] == 0, "path length exceeded n-1");
    for (int l = 1; l < n; l++)
        p.counts[(std::size_t)l] = half_exact(ordered[(std::size_t)l],
                                              "ordered path count must be even");
    return p;
}

inline BigCount count_subpaths(const Graph& g, const CountOptions& opts = {}) {
    return length_profile(g, opts).total();
}

// Closed-form profile entries for lengths 0..3 from degree statistics:
// n, m, sum of C(d_i,2), and M2 - M1 + m - 3t.
inline std::array<BigCount, 4> profile_closed_small(const Graph& g) {
    GraphStats st = stats(g);
    BigCount pn2 = 0;
    for (int d : st.degree_sequence) pn2 += binomial((long long)d, 2);
    BigCount pn3 = BigCount((unsigned long)st.m2) - BigCount((unsigned long)st.m1) +
                   (long)st.m - 3 * BigCount((long)st.triangles);
    SUBPATH_CHECK(pn3 >= 0, "closed-form pn3 must be non-negative");
    return {BigCount(st.n), BigCount((long)st.m), pn2, pn3};
}

inline BigCount count_paths_between(const Graph& g, int x, int y,
                                    const CountOptions& opts = {}) {
    int n = g.vertex_count();
    if (x < 0 || x >= n || y < 0 || y >= n)
        throw input_error("count_paths_between: vertex out of range");
    if (x == y)
        throw input_error("count_paths_between: endpoints must differ (x=y=" +
                          std::to_string(x) + ")");

    detail::SharedBudget shared{};
    detail::SharedBudget* bp = nullptr;
    if (opts.budget) {
        shared.remaining = (long long)std::min<std::uint64_t>(*opts.budget, INT64_MAX);
        bp = &shared;
    }
    detail::Quota q{bp, 0};
    std::uint64_t small = 0;
    BigCount big = 0;
    bool ok;
    if (n <= 64) {
        detail::Engine64 eng(g);
        detail::Engine64::Scratch sc(n);
        ok = eng.run_between(x, y, &small, &big, q, sc);
    } else {
        detail::EngineGeneral eng(g);
        detail::EngineGeneral::Scratch sc(n);
        ok = eng.run_between(x, y, &small, &big, q, sc);
    }
    if (!ok) throw budget_error("node budget exhausted during path enumeration");
    big += (unsigned long)small;
    return big;
}

} // namespace subpath
