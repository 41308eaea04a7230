#pragma once

// Search and experiment drivers built on the exact counter: stream scans
// over graph6 catalogues with filters and objectives, exhaustive
// verification of extremal claims (bipartite maximizers, unicyclic
// extremes), seeded Monte Carlo estimation of the G(n,p) expectation, and
// the explicit cubic minimizer construction. Reports carry enough data to
// re-check every claim; none of the drivers prints or exits by itself.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <istream>
#include <limits>
#include <mutex>
#include <queue>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "subpath/chains.hpp"
#include "subpath/count.hpp"
#include "subpath/errors.hpp"
#include "subpath/formulas.hpp"
#include "subpath/graph.hpp"
#include "subpath/numeric.hpp"
#include "subpath/rng.hpp"

namespace subpath {

enum class ScanFilter { none, connected, bipartite, triangle_free, cubic };

inline ScanFilter parse_filter(const std::string& name) {
    if (name == "none") return ScanFilter::none;
    if (name == "connected") return ScanFilter::connected;
    if (name == "bipartite") return ScanFilter::bipartite;
    if (name == "triangle-free") return ScanFilter::triangle_free;
    if (name == "cubic") return ScanFilter::cubic;
    throw input_error("unknown filter '" + name +
                      "' (expected none|connected|bipartite|triangle-free|cubic)");
}

inline const char* filter_name(ScanFilter f) {
    switch (f) {
    case ScanFilter::none: return "none";
    case ScanFilter::connected: return "connected";
    case ScanFilter::bipartite: return "bipartite";
    case ScanFilter::triangle_free: return "triangle-free";
    case ScanFilter::cubic: return "cubic";
    }
    return "none";
}

inline bool passes_filter(const Graph& g, ScanFilter f) {
    switch (f) {
    case ScanFilter::none: return true;
    case ScanFilter::connected: return stats(g).connected;
    case ScanFilter::bipartite: return stats(g).bipartition.has_value();
    case ScanFilter::triangle_free: return stats(g).triangles == 0;
    case ScanFilter::cubic: {
        for (int v = 0; v < g.vertex_count(); v++)
            if (g.degree(v) != 3) return false;
        return true;
    }
    }
    return true;
}

struct ScanOptions {
    std::string objective = "max"; // "min" or "max"
    ScanFilter filter = ScanFilter::none;
    int top = 10;
    CountOptions count;
};

struct ScanEntry {
    std::string graph6;
    BigCount value;
};

struct ScanReport {
    std::string objective;
    std::string filter;
    long long lines_read = 0;     // non-blank input lines
    long long graphs_scanned = 0; // graphs passing the filter
    BigCount extremal_value;
    std::vector<std::string> extremal_graphs; // every attainer, in input order
    std::vector<ScanEntry> top;               // ranked, ties broken by input order
};

namespace detail {

struct StreamedGraph {
    std::string line;
    Graph graph;
};

// Reads graph6 lines (blank lines skipped, errors reported with 1-based
// line numbers) and keeps those passing the filter.
inline std::vector<StreamedGraph> read_graph6_stream(std::istream& in, ScanFilter filter,
                                                     long long* nonblank_lines = nullptr) {
    std::vector<StreamedGraph> out;
    std::string line;
    long long line_no = 0, kept_lines = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        kept_lines++;
        Graph g = [&] {
            try {
                return parse_graph6(line);
            } catch (const input_error& e) {
                throw input_error("line " + std::to_string(line_no) + ": " + e.what());
            }
        }();
        if (passes_filter(g, filter)) out.push_back({line, std::move(g)});
    }
    if (nonblank_lines) *nonblank_lines = kept_lines;
    return out;
}

// Evaluates pn for each graph, optionally with a worker pool; results are
// stored by input index so the outcome is independent of thread count.
inline std::vector<BigCount> evaluate_all(const std::vector<StreamedGraph>& graphs,
                                          const CountOptions& opts) {
    std::vector<BigCount> values(graphs.size());
    int threads = detail::resolve_threads(opts.threads);
    if (threads > (int)graphs.size()) threads = (int)graphs.size();
    CountOptions per_graph = opts;

    if (threads <= 1) {
        for (std::size_t i = 0; i < graphs.size(); i++)
            values[i] = count_subpaths(graphs[i].graph, per_graph);
        return values;
    }

    per_graph.threads = 1;
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        try {
            while (true) {
                std::size_t i = cursor.fetch_add(1);
                if (i >= graphs.size()) return;
                values[i] = count_subpaths(graphs[i].graph, per_graph);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            cursor.store(graphs.size());
        }
    };
    std::vector<std::thread> pool;
    pool.reserve((std::size_t)threads);
    for (int t = 0; t < threads; t++) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return values;
}

// Ranks evaluated graphs under the objective; ties fall back to input
// position so the report is reproducible.
inline ScanReport rank_scan(const std::vector<StreamedGraph>& graphs,
                            const std::vector<BigCount>& values,
                            const std::string& objective, ScanFilter filter,
                            long long lines_read, int top) {
    ScanReport report;
    report.objective = objective;
    report.filter = filter_name(filter);
    report.lines_read = lines_read;
    report.graphs_scanned = (long long)graphs.size();

    const bool want_max = objective == "max";
    std::vector<std::size_t> order(graphs.size());
    for (std::size_t i = 0; i < order.size(); i++) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (values[x] != values[y])
            return want_max ? values[x] > values[y] : values[x] < values[y];
        return x < y;
    });

    report.extremal_value = values[order[0]];
    for (std::size_t i = 0; i < graphs.size(); i++)
        if (values[i] == report.extremal_value)
            report.extremal_graphs.push_back(graphs[i].line);
    std::size_t keep = std::min((std::size_t)top, order.size());
    for (std::size_t r = 0; r < keep; r++)
        report.top.push_back({graphs[order[r]].line, values[order[r]]});
    return report;
}

} // namespace detail

inline ScanReport scan_stream(std::istream& in, const ScanOptions& opts) {
    if (opts.objective != "min" && opts.objective != "max")
        throw input_error("objective must be 'min' or 'max', got '" + opts.objective + "'");
    if (opts.top < 1) throw input_error("top must be >= 1");

    long long lines_read = 0;
    auto graphs = detail::read_graph6_stream(in, opts.filter, &lines_read);
    if (graphs.empty())
        throw input_error(std::string("no graphs to scan") +
                          (opts.filter == ScanFilter::none ? "" : " after filtering"));
    std::vector<BigCount> values = detail::evaluate_all(graphs, opts.count);
    return detail::rank_scan(graphs, values, opts.objective, opts.filter, lines_read,
                             opts.top);
}

namespace detail {

// Canonical code of the subtree rooted at r, parent edge excluded:
// children codes sorted and wrapped in parentheses, so two rooted trees
// get the same code exactly when they are isomorphic as rooted trees.
inline std::string rooted_code(const Graph& t, int r, int parent) {
    std::vector<std::string> kids;
    for (int w : t.neighbors(r))
        if (w != parent) kids.push_back(rooted_code(t, w, r));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const std::string& k : kids) out += k;
    out += ')';
    return out;
}

inline std::vector<int> tree_centers(const Graph& t) {
    int n = t.vertex_count();
    if (n <= 2) {
        std::vector<int> all;
        for (int v = 0; v < n; v++) all.push_back(v);
        return all;
    }
    std::vector<int> deg((std::size_t)n);
    std::vector<char> removed((std::size_t)n, 0);
    std::vector<int> layer;
    for (int v = 0; v < n; v++) {
        deg[(std::size_t)v] = t.degree(v);
        if (deg[(std::size_t)v] == 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[(std::size_t)v] = 1;
            remaining--;
            for (int w : t.neighbors(v))
                if (!removed[(std::size_t)w] && --deg[(std::size_t)w] == 1)
                    next.push_back(w);
        }
        layer = std::move(next);
    }
    std::vector<int> centers;
    for (int v = 0; v < n; v++)
        if (!removed[(std::size_t)v]) centers.push_back(v);
    return centers;
}

// Isomorphism-invariant code of a free tree: rooted at the center, or at
// the virtual midpoint of the central edge when there are two centers.
// The center count is prefixed so the two formats cannot collide.
inline std::string tree_code(const Graph& t) {
    std::vector<int> centers = tree_centers(t);
    if (centers.size() == 1) return "1:" + rooted_code(t, centers[0], -1);
    SUBPATH_CHECK(centers.size() == 2, "tree has one or two centers");
    std::string s1 = rooted_code(t, centers[0], centers[1]);
    std::string s2 = rooted_code(t, centers[1], centers[0]);
    if (s2 < s1) std::swap(s1, s2);
    return "2:(" + s1 + s2 + ")";
}

inline Graph grow_leaf(const Graph& t, int attach) {
    std::vector<std::pair<int, int>> edges(t.edges().begin(), t.edges().end());
    edges.emplace_back(attach, t.vertex_count());
    return Graph(t.vertex_count() + 1, edges);
}

} // namespace detail

// One representative per isomorphism class of trees on n vertices, built
// by leaf extension with canonical-code deduplication at every size.
inline std::vector<Graph> distinct_trees(int n) {
    if (n < 1) throw input_error("distinct_trees: n must be >= 1, got " + std::to_string(n));
    std::vector<Graph> cur;
    cur.push_back(Graph(1, {}));
    for (int size = 2; size <= n; size++) {
        std::vector<Graph> next;
        std::unordered_set<std::string> seen;
        for (const Graph& t : cur)
            for (int v = 0; v < t.vertex_count(); v++) {
                Graph grown = detail::grow_leaf(t, v);
                if (seen.insert(detail::tree_code(grown)).second)
                    next.push_back(std::move(grown));
            }
        cur = std::move(next);
    }
    return cur;
}

struct BipartiteMaxReport {
    int n = 0;
    long long graphs_scanned = 0;
    BigCount max_value;
    std::vector<std::string> maximizers; // graph6, input order
    BigCount runner_up_value;            // largest value below the maximum, 0 if none
    bool unique_maximizer = false;
    bool maximizer_is_balanced_biclique = false;
    BigCount formula_value; // closed form for K_{floor(n/2), ceil(n/2)}
    bool value_matches_formula = false;
};

// Checks, without any isomorphism testing, that a graph is the complete
// bipartite graph with part sizes floor(n/2) and ceil(n/2): connected,
// 2-colorable with parts of those sizes, and every cross pair an edge.
inline bool is_balanced_biclique(const Graph& g) {
    int n = g.vertex_count();
    if (n < 2) return false;
    GraphStats st = stats(g);
    if (!st.connected || !st.bipartition) return false;
    long long x = (long long)st.bipartition->first.size();
    long long y = (long long)st.bipartition->second.size();
    if (x > y) std::swap(x, y);
    return x == n / 2 && y == n - n / 2 && (long long)st.m == x * y;
}

// Scans a catalogue of every bipartite graph on n vertices and checks that
// the balanced complete bipartite graph is the unique maximizer.
inline BipartiteMaxReport verify_bipartite_max(int n, std::istream& catalogue,
                                               const CountOptions& opts = {}) {
    if (n < 2) throw input_error("verify_bipartite_max: n must be >= 2");
    BipartiteMaxReport rep;
    rep.n = n;
    auto graphs = detail::read_graph6_stream(catalogue, ScanFilter::none);
    if (graphs.empty()) throw input_error("verify_bipartite_max: empty catalogue");
    rep.graphs_scanned = (long long)graphs.size();

    std::vector<BigCount> values = detail::evaluate_all(graphs, opts);
    std::size_t best = 0;
    for (std::size_t i = 0; i < graphs.size(); i++) {
        if (graphs[i].graph.vertex_count() != n)
            throw input_error("verify_bipartite_max: catalogue graph with " +
                              std::to_string(graphs[i].graph.vertex_count()) +
                              " vertices, expected " + std::to_string(n));
        if (values[i] > values[best]) best = i;
    }
    rep.max_value = values[best];
    rep.runner_up_value = 0;
    bool structural = true;
    for (std::size_t i = 0; i < graphs.size(); i++) {
        if (values[i] == rep.max_value) {
            rep.maximizers.push_back(graphs[i].line);
            structural = structural && is_balanced_biclique(graphs[i].graph);
        } else if (values[i] > rep.runner_up_value) {
            rep.runner_up_value = values[i];
        }
    }
    rep.unique_maximizer = rep.maximizers.size() == 1;
    rep.maximizer_is_balanced_biclique = structural;
    rep.formula_value = pn_complete_bipartite(n / 2, n - n / 2);
    rep.value_matches_formula = rep.max_value == rep.formula_value;
    return rep;
}

struct UnicyclicExtremesReport {
    int n = 0;
    long long sequences_scanned = 0;
    long long distinct_trees = 0;
    long long graphs_evaluated = 0;
    BigCount max_value;
    bool max_is_n_squared = false;
    bool max_only_on_cycle = false; // every maximizer is 2-regular
    BigCount min_value;
    bool min_matches_pattern = false; // every minimizer: triangle with one long limb
    bool formula_matches_count = false;
    std::vector<std::vector<long long>> minimizer_component_sizes; // sorted, deduped
};

// Every unicyclic graph on n vertices arises as a tree plus one extra
// edge. Trees are enumerated through all n^(n-2) label sequences, reduced
// to one representative per isomorphism class, and each representative is
// completed by every non-edge. Along the way the closed form is replayed
// against the generic counter on every graph.
inline UnicyclicExtremesReport verify_unicyclic_extremes(int n,
                                                         const CountOptions& opts = {}) {
    if (n < 3)
        throw input_error("verify_unicyclic_extremes: n must be >= 3, got " +
                          std::to_string(n));
    if (n > 10)
        throw input_error("verify_unicyclic_extremes: n above 10 is not tractable here");

    UnicyclicExtremesReport rep;
    rep.n = n;
    rep.formula_matches_count = true;
    rep.max_only_on_cycle = true;
    rep.min_matches_pattern = true;

    std::vector<Graph> trees;
    std::unordered_set<std::string> codes;
    std::vector<int> seq((std::size_t)(n - 2), 0);
    while (true) {
        Graph t = tree_from_pruefer(seq);
        rep.sequences_scanned++;
        if (codes.insert(detail::tree_code(t)).second) trees.push_back(std::move(t));
        int pos = (int)seq.size() - 1;
        while (pos >= 0 && seq[(std::size_t)pos] == n - 1) seq[(std::size_t)pos--] = 0;
        if (pos < 0) break;
        seq[(std::size_t)pos]++;
    }
    rep.distinct_trees = (long long)trees.size();

    bool first = true;
    std::vector<std::vector<long long>> min_patterns;
    auto consider = [&](const Graph& g) {
        BigCount counted = count_subpaths(g, opts);
        std::vector<long long> sizes = unicyclic_component_sizes(g);
        if (pn_unicyclic(sizes) != counted) rep.formula_matches_count = false;
        rep.graphs_evaluated++;

        bool is_cycle = true;
        for (int v = 0; v < g.vertex_count(); v++)
            if (g.degree(v) != 2) is_cycle = false;
        std::sort(sizes.begin(), sizes.end());

        if (first || counted > rep.max_value) {
            rep.max_value = counted;
            rep.max_only_on_cycle = true;
        }
        if (counted == rep.max_value && !is_cycle) rep.max_only_on_cycle = false;

        if (first || counted < rep.min_value) {
            rep.min_value = counted;
            min_patterns.clear();
        }
        if (counted == rep.min_value) min_patterns.push_back(sizes);
        first = false;
    };

    for (const Graph& t : trees)
        for (int u = 0; u < n; u++)
            for (int v = u + 1; v < n; v++)
                if (!t.has_edge(u, v)) consider(add_edge(t, u, v));

    BigCount nn((long)n);
    rep.max_is_n_squared = rep.max_value == nn * nn;
    std::sort(min_patterns.begin(), min_patterns.end());
    min_patterns.erase(std::unique(min_patterns.begin(), min_patterns.end()),
                       min_patterns.end());
    rep.minimizer_component_sizes = min_patterns;
    std::vector<long long> expected = {1, 1, (long long)n - 2};
    for (const auto& sizes : min_patterns)
        if (sizes != expected) rep.min_matches_pattern = false;
    return rep;
}

struct MonteCarloResult {
    int n = 0;
    Rational p;
    long long trials = 0;
    std::uint64_t seed = 0;
    BigCount sum;         // sum of sampled subpath numbers
    BigCount sum_squares; // sum of their squares
    Rational sample_mean_exact;
    Rational sample_variance_exact; // Bessel-corrected, 0 when trials < 2
    Rational exact_expectation;
    std::string sample_mean;   // 12 significant digits
    std::string sample_stddev; // 12 significant digits
    std::string exact_expectation_decimal;
    bool within_four_se = false; // |mean - E| <= 4 * stddev / sqrt(trials), exact test
};

// Samples G(n, p) `trials` times on per-trial streams derived from the
// master seed and compares the sample mean against the exact expectation.
// The 4-standard-error test is evaluated in integer arithmetic, no
// floating point anywhere.
inline MonteCarloResult monte_carlo_pn(int n, const Rational& p, long long trials,
                                       std::uint64_t seed, const CountOptions& opts = {}) {
    if (n < 1) throw input_error("monte_carlo_pn: n must be >= 1");
    if (trials < 1) throw input_error("monte_carlo_pn: trials must be >= 1");
    auto [num, den] = bernoulli_fraction(p);

    MonteCarloResult res;
    res.n = n;
    res.p = p;
    res.trials = trials;
    res.seed = seed;
    res.sum = 0;
    res.sum_squares = 0;
    for (long long t = 0; t < trials; t++) {
        SplitMix64 rng = trial_stream(seed, (std::uint64_t)t);
        Graph g = gnp_graph(n, num, den, rng);
        BigCount pn = count_subpaths(g, opts);
        res.sum += pn;
        res.sum_squares += pn * pn;
    }

    BigCount tt((long)trials);
    res.sample_mean_exact = Rational(res.sum, tt);
    res.sample_mean_exact.canonicalize();
    if (trials >= 2) {
        BigCount spread = tt * res.sum_squares - res.sum * res.sum;
        SUBPATH_CHECK(spread >= 0, "sample variance non-negative");
        BigCount denom = tt * (long)(trials - 1);
        res.sample_variance_exact = Rational(spread, denom);
        res.sample_variance_exact.canonicalize();
    } else {
        res.sample_variance_exact = 0;
    }
    res.exact_expectation = expected_pn(n, p);
    res.sample_mean = decimal_string(res.sample_mean_exact);
    res.sample_stddev = sqrt_decimal_string(res.sample_variance_exact);
    res.exact_expectation_decimal = decimal_string(res.exact_expectation);

    // (sum*den - trials*num_E)^2 * (trials-1) <= 16 * den^2 * (trials*sumsq - sum^2)
    BigCount e_num = res.exact_expectation.get_num();
    BigCount e_den = res.exact_expectation.get_den();
    BigCount lhs = res.sum * e_den - tt * e_num;
    lhs = lhs * lhs;
    if (trials >= 2) {
        BigCount spread = tt * res.sum_squares - res.sum * res.sum;
        res.within_four_se = lhs * (tt - 1L) <= 16 * e_den * e_den * spread;
    } else {
        res.within_four_se = lhs == 0;
    }
    return res;
}

// Length of a shortest cycle, 0 for a forest: for each edge, the distance
// between its endpoints after removing it closes the shortest cycle
// through that edge.
inline int girth(const Graph& g) {
    int best = std::numeric_limits<int>::max();
    int n = g.vertex_count();
    for (auto [u, v] : g.edges()) {
        Graph h = remove_edge(g, u, v);
        std::vector<int> dist((std::size_t)n, -1);
        std::queue<int> q;
        dist[(std::size_t)u] = 0;
        q.push(u);
        while (!q.empty() && dist[(std::size_t)v] == -1) {
            int x = q.front();
            q.pop();
            for (int w : h.neighbors(x))
                if (dist[(std::size_t)w] == -1) {
                    dist[(std::size_t)w] = dist[(std::size_t)x] + 1;
                    q.push(w);
                }
        }
        if (dist[(std::size_t)v] != -1) best = std::min(best, dist[(std::size_t)v] + 1);
    }
    return best == std::numeric_limits<int>::max() ? 0 : best;
}

inline bool is_cubic(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); v++)
        if (g.degree(v) != 3) return false;
    return g.vertex_count() > 0;
}

// The Petersen graph is the unique connected 3-regular graph on 10
// vertices with girth 5, so this signature identifies it exactly.
inline bool is_petersen(const Graph& g) {
    return g.vertex_count() == 10 && is_cubic(g) && stats(g).connected && girth(g) == 5;
}

// Conjectured minimizer of the subpath number among connected cubic graphs
// on n vertices (n even, n >= 10): a chain of K4-minus-an-edge blocks
// bridged in a row, capped at each end. The 5-vertex cap is K4 with one
// edge subdivided; the 7-vertex cap is K4 minus an edge with a triangle
// glued to the two degree-2 vertices. n = 2 (mod 4) uses two 5-caps,
// n = 0 (mod 4) one 5-cap and one 7-cap.
inline Graph build_cubic_minimizer(int n) {
    if (n < 10 || n % 2 != 0)
        throw input_error("build_cubic_minimizer: n must be even and >= 10, got " +
                          std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    int next = 0;

    auto cap5 = [&]() {
        int a = next, b = next + 1, c = next + 2, d = next + 3, s = next + 4;
        next += 5;
        edges.insert(edges.end(), {{a, c}, {a, d}, {b, c}, {b, d}, {c, d}, {a, s}, {b, s}});
        return s;
    };
    auto cap7 = [&]() {
        int a = next, b = next + 1, c = next + 2, d = next + 3;
        int x = next + 4, y = next + 5, z = next + 6;
        next += 7;
        edges.insert(edges.end(), {{a, b}, {a, c}, {a, d}, {b, c}, {b, d}, {c, x}, {d, y},
                                   {x, y}, {x, z}, {y, z}});
        return z;
    };
    auto middle_block = [&]() {
        int p = next, q = next + 1, r = next + 2, s = next + 3;
        next += 4;
        edges.insert(edges.end(), {{p, q}, {p, r}, {p, s}, {q, r}, {q, s}});
        return std::pair{r, s};
    };

    int blocks = (n % 4 == 2) ? (n - 10) / 4 : (n - 12) / 4;
    int attach = cap5();
    for (int i = 0; i < blocks; i++) {
        auto [left, right] = middle_block();
        edges.emplace_back(attach, left);
        attach = right;
    }
    int tail = (n % 4 == 2) ? cap5() : cap7();
    edges.emplace_back(attach, tail);

    SUBPATH_CHECK(next == n, "cubic minimizer vertex count");
    Graph g(n, edges);
    SUBPATH_CHECK(is_cubic(g) && stats(g).connected, "cubic minimizer regularity");
    return g;
}

// Sweeps a catalogue of all connected cubic graphs on n vertices and
// returns the (min report, max report) pair. Every line must decode to a
// connected 3-regular graph of the right order; anything else is an input
// error, not a silent skip.
inline std::pair<ScanReport, ScanReport> cubic_extremes(std::istream& catalogue, int n,
                                                        const CountOptions& opts = {},
                                                        int top = 10) {
    long long lines_read = 0;
    auto graphs = detail::read_graph6_stream(catalogue, ScanFilter::none, &lines_read);
    if (graphs.empty()) throw input_error("cubic_extremes: empty catalogue");
    for (std::size_t i = 0; i < graphs.size(); i++) {
        const Graph& g = graphs[i].graph;
        if (g.vertex_count() != n || !is_cubic(g) || !stats(g).connected)
            throw input_error("cubic_extremes: graph " + std::to_string(i + 1) +
                              " is not a connected cubic graph on " + std::to_string(n) +
                              " vertices");
    }
    std::vector<BigCount> values = detail::evaluate_all(graphs, opts);
    return {detail::rank_scan(graphs, values, "min", ScanFilter::cubic, lines_read, top),
            detail::rank_scan(graphs, values, "max", ScanFilter::cubic, lines_read, top)};
}

} // namespace subpath
