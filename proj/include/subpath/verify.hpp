#pragma once

// Self-check suites: each one replays a closed form or an extremal claim
// against the generic exact counter over an exhaustive range, and reports
// structured pass/fail cases instead of asserting. The CLI `verify`
// command and the acceptance harness both run through these.

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "subpath/chains.hpp"
#include "subpath/count.hpp"
#include "subpath/errors.hpp"
#include "subpath/explore.hpp"
#include "subpath/formulas.hpp"
#include "subpath/graph.hpp"

namespace subpath {

struct CaseResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CaseResult> cases;

    bool passed() const {
        for (const CaseResult& c : cases)
            if (!c.pass) return false;
        return !cases.empty();
    }
};

namespace detail {

// All chain specs with exactly k cycles and at most max_n vertices. The
// free slots are the shared end arcs and the interior arc pairs; every
// slot ranges over >= 1 with the total vertex budget enforced.
template <typename F>
inline void for_each_chain_spec(int k, long long max_n, F&& fn) {
    int slots = 2 * (k - 2) + 2;
    long long budget = max_n - 2;
    if (budget < slots) return;
    std::vector<long long> v((std::size_t)slots, 1);
    std::function<void(int, long long)> rec = [&](int pos, long long left) {
        long long reserve = slots - pos - 1; // later slots still need 1 each
        for (long long val = 1; val <= left - reserve; val++) {
            v[(std::size_t)pos] = val;
            if (pos + 1 < slots) {
                rec(pos + 1, left - val);
            } else {
                std::vector<long long> a((std::size_t)k), b((std::size_t)k);
                a[0] = b[0] = v[0];
                a[(std::size_t)(k - 1)] = b[(std::size_t)(k - 1)] =
                    v[(std::size_t)(slots - 1)];
                for (int i = 1; i + 1 < k; i++) {
                    a[(std::size_t)i] = v[(std::size_t)(2 * i - 1)];
                    b[(std::size_t)i] = v[(std::size_t)(2 * i)];
                }
                fn(ChainSpec{std::move(a), std::move(b)});
            }
        }
    };
    rec(0, budget);
}

inline std::ifstream open_catalogue(const std::string& dir, const std::string& file) {
    std::filesystem::path path = std::filesystem::path(dir) / file;
    std::ifstream in(path);
    if (!in) throw input_error("cannot open catalogue file " + path.string());
    return in;
}

inline CaseResult make_case(std::string name, bool pass, std::string detail) {
    return CaseResult{std::move(name), pass, std::move(detail)};
}

} // namespace detail

// Closed form vs generic counter on every tree shape up to max_n vertices.
inline SuiteResult verify_trees(int max_n = 9, const CountOptions& opts = {}) {
    SuiteResult res{"trees", {}};
    for (int n = 1; n <= max_n; n++) {
        BigCount want = pn_tree(n);
        long long checked = 0, bad = 0;
        for (const Graph& t : distinct_trees(n)) {
            checked++;
            if (count_subpaths(t, opts) != want) bad++;
        }
        std::ostringstream d;
        d << checked << " trees, expected " << want.get_str();
        if (bad) d << ", " << bad << " mismatches";
        res.cases.push_back(detail::make_case("n=" + std::to_string(n), bad == 0, d.str()));
    }
    return res;
}

inline SuiteResult verify_cycles(int max_n = 12, const CountOptions& opts = {}) {
    SuiteResult res{"cycles", {}};
    for (int n = 3; n <= max_n; n++) {
        BigCount want = pn_cycle(n);
        BigCount got = count_subpaths(cycle_graph(n), opts);
        res.cases.push_back(detail::make_case(
            "n=" + std::to_string(n), got == want,
            "counted " + got.get_str() + ", formula " + want.get_str()));
    }
    return res;
}

inline SuiteResult verify_unicyclic(int max_n = 9, const CountOptions& opts = {}) {
    SuiteResult res{"unicyclic", {}};
    for (int n = 3; n <= max_n; n++) {
        UnicyclicExtremesReport rep = verify_unicyclic_extremes(n, opts);
        bool pass = rep.formula_matches_count && rep.max_is_n_squared &&
                    rep.max_only_on_cycle && rep.min_matches_pattern;
        std::ostringstream d;
        d << rep.graphs_evaluated << " graphs from " << rep.distinct_trees
          << " trees, max " << rep.max_value.get_str() << ", min "
          << rep.min_value.get_str();
        if (!rep.formula_matches_count) d << ", formula mismatch";
        if (!rep.max_is_n_squared || !rep.max_only_on_cycle) d << ", max not the cycle";
        if (!rep.min_matches_pattern) d << ", unexpected minimizer shape";
        res.cases.push_back(detail::make_case("n=" + std::to_string(n), pass, d.str()));
    }
    return res;
}

inline SuiteResult verify_complete(int max_n = 8, const CountOptions& opts = {}) {
    SuiteResult res{"complete", {}};
    for (int n = 1; n <= max_n; n++) {
        BigCount want = pn_complete(n);
        BigCount got = count_subpaths(complete_graph(n), opts);
        res.cases.push_back(detail::make_case(
            "n=" + std::to_string(n), got == want,
            "counted " + got.get_str() + ", formula " + want.get_str()));
    }
    return res;
}

inline SuiteResult verify_biclique(int max_sum = 10, const CountOptions& opts = {}) {
    SuiteResult res{"biclique", {}};
    for (int a = 1; a <= max_sum / 2; a++)
        for (int b = a; a + b <= max_sum; b++) {
            BigCount want = pn_complete_bipartite(a, b);
            BigCount got = count_subpaths(complete_bipartite_graph(a, b), opts);
            res.cases.push_back(detail::make_case(
                "a=" + std::to_string(a) + ",b=" + std::to_string(b), got == want,
                "counted " + got.get_str() + ", formula " + want.get_str()));
        }
    return res;
}

inline SuiteResult verify_chains(int max_n = 18, int max_k = 5,
                                 const CountOptions& opts = {}) {
    SuiteResult res{"chains", {}};
    for (int k = 2; k <= max_k; k++) {
        long long checked = 0, bad = 0;
        detail::for_each_chain_spec(k, max_n, [&](const ChainSpec& s) {
            checked++;
            if (pn_chain(s) != count_subpaths(chain_graph(s), opts)) bad++;
        });
        std::ostringstream d;
        d << checked << " specs with at most " << max_n << " vertices";
        if (bad) d << ", " << bad << " mismatches";
        res.cases.push_back(detail::make_case("k=" + std::to_string(k), bad == 0, d.str()));
    }
    return res;
}

// The ladder with k rungs is the chain of k four-cycles whose interior
// arcs are all split 1+1; the dedicated formula, the chain formula, and
// the generic counter must agree.
inline ChainSpec ladder_spec(int k) {
    std::vector<long long> a((std::size_t)k, 1);
    a.front() = 2;
    a.back() = 2;
    return ChainSpec{a, a};
}

inline SuiteResult verify_ladder(int max_k = 5, const CountOptions& opts = {}) {
    SuiteResult res{"ladder", {}};
    for (int k = 2; k <= max_k; k++) {
        ChainSpec s = ladder_spec(k);
        BigCount formula = pn_ladder(k);
        BigCount via_chain = pn_chain(s);
        BigCount counted = count_subpaths(chain_graph(s), opts);
        bool pass = formula == via_chain && formula == counted;
        res.cases.push_back(detail::make_case(
            "k=" + std::to_string(k), pass,
            "formula " + formula.get_str() + ", chain " + via_chain.get_str() +
                ", counted " + counted.get_str()));
    }
    return res;
}

// Hexagonal chains are the six-cycle families. The published bounds must
// match the true extremes of the full family sweep, the lower bound must
// be attained by the straight chain (every interior arc split 2+2) and the
// upper bound by the spiral (every interior arc split 1+3).
inline SuiteResult verify_hex(int max_k = 4, const CountOptions& opts = {}) {
    SuiteResult res{"hex", {}};
    for (int k = 2; k <= max_k; k++) {
        auto [lower, upper] = hexagonal_bounds(k);
        std::vector<long long> lengths((std::size_t)k, 6);
        bool pass = true;
        std::ostringstream d;
        d << "bounds [" << lower.get_str() << ", " << upper.get_str() << "]";

        std::vector<long long> straight((std::size_t)k, 2);
        straight.front() = 4;
        straight.back() = 4;
        std::vector<long long> spiral_a = straight, spiral_b = straight;
        for (int i = 1; i + 1 < k; i++) {
            spiral_a[(std::size_t)i] = 1;
            spiral_b[(std::size_t)i] = 3;
        }
        BigCount straight_pn = pn_chain(ChainSpec{straight, straight});
        BigCount spiral_pn = pn_chain(ChainSpec{spiral_a, spiral_b});
        if (straight_pn != lower) {
            pass = false;
            d << ", straight chain gives " << straight_pn.get_str();
        }
        if (spiral_pn != upper) {
            pass = false;
            d << ", spiral gives " << spiral_pn.get_str();
        }

        if (k >= 3) {
            FamilyExtremes ex = extremal_in_family(lengths);
            d << ", family of " << ex.family_size;
            if (ex.min_value != lower || ex.max_value != upper) {
                pass = false;
                d << ", sweep extremes [" << ex.min_value.get_str() << ", "
                  << ex.max_value.get_str() << "]";
            }
            if (!ex.maximizers_all_kink || !ex.minimizers_all_near_linear) {
                pass = false;
                d << ", extremal shapes unexpected";
            }
        }
        BigCount counted = count_subpaths(chain_graph(ChainSpec{straight, straight}), opts);
        if (counted != straight_pn) {
            pass = false;
            d << ", counter disagrees on the straight chain";
        }
        res.cases.push_back(detail::make_case("k=" + std::to_string(k), pass, d.str()));
    }
    return res;
}

inline SuiteResult verify_bipartite_max_suite(int max_n = 8, const std::string& data_dir =
                                                                 "data/catalogues",
                                              const CountOptions& opts = {}) {
    SuiteResult res{"bipartite-max", {}};
    for (int n = 2; n <= max_n; n++) {
        std::ifstream in =
            detail::open_catalogue(data_dir, "bipartite_n" + std::to_string(n) + ".g6");
        BipartiteMaxReport rep = verify_bipartite_max(n, in, opts);
        bool pass = rep.unique_maximizer && rep.maximizer_is_balanced_biclique &&
                    rep.value_matches_formula;
        std::ostringstream d;
        d << rep.graphs_scanned << " graphs, max " << rep.max_value.get_str()
          << ", runner-up " << rep.runner_up_value.get_str();
        if (!rep.unique_maximizer) d << ", maximizer not unique";
        if (!rep.maximizer_is_balanced_biclique) d << ", maximizer not the balanced biclique";
        if (!rep.value_matches_formula)
            d << ", formula gives " << rep.formula_value.get_str();
        res.cases.push_back(detail::make_case("n=" + std::to_string(n), pass, d.str()));
    }
    return res;
}

// Cubic extremes from the catalogues: the Petersen graph is the unique
// maximizer at n=10, and the block-chain construction attains the minimum
// wherever a catalogue is available. A unique catalogue minimizer with the
// same subpath number as the construction pins the minimizer's isomorphism
// type without any isomorphism testing.
inline SuiteResult verify_cubic_suite(int max_n = 12,
                                      const std::string& data_dir = "data/catalogues",
                                      const CountOptions& opts = {}) {
    SuiteResult res{"cubic", {}};
    for (int n = 10; n <= max_n; n += 2) {
        std::ifstream in =
            detail::open_catalogue(data_dir, "cubic_n" + std::to_string(n) + ".g6");
        auto [min_report, max_report] = cubic_extremes(in, n, opts);
        std::ostringstream d;
        bool pass = true;
        d << min_report.graphs_scanned << " graphs, min "
          << min_report.extremal_value.get_str() << ", max "
          << max_report.extremal_value.get_str();

        BigCount built = count_subpaths(build_cubic_minimizer(n), opts);
        if (built != min_report.extremal_value) {
            pass = false;
            d << ", construction gives " << built.get_str();
        }
        if (min_report.extremal_graphs.size() != 1) {
            pass = false;
            d << ", " << min_report.extremal_graphs.size() << " minimizers";
        }
        if (n == 10) {
            bool petersen = max_report.extremal_graphs.size() == 1 &&
                            is_petersen(parse_graph6(max_report.extremal_graphs.front()));
            if (!petersen) {
                pass = false;
                d << ", maximizer is not the Petersen graph";
            } else {
                d << ", max attained by the Petersen graph";
            }
        }
        res.cases.push_back(detail::make_case("n=" + std::to_string(n), pass, d.str()));
    }
    return res;
}

// Dispatch by suite name; max_size < 0 selects the default sweep size.
inline SuiteResult run_suite(const std::string& name, int max_size = -1,
                             const std::string& data_dir = "data/catalogues",
                             const CountOptions& opts = {}) {
    auto size = [&](int def) { return max_size < 0 ? def : max_size; };
    if (name == "trees") return verify_trees(size(9), opts);
    if (name == "cycles") return verify_cycles(size(12), opts);
    if (name == "unicyclic") return verify_unicyclic(size(9), opts);
    if (name == "complete") return verify_complete(size(8), opts);
    if (name == "biclique") return verify_biclique(size(10), opts);
    if (name == "chains") return verify_chains(size(18), 5, opts);
    if (name == "ladder") return verify_ladder(size(5), opts);
    if (name == "hex") return verify_hex(size(4), opts);
    if (name == "bipartite-max") return verify_bipartite_max_suite(size(8), data_dir, opts);
    if (name == "cubic") return verify_cubic_suite(size(12), data_dir, opts);
    throw input_error("unknown suite '" + name +
                      "' (expected trees|cycles|unicyclic|complete|biclique|chains|"
                      "ladder|hex|bipartite-max|cubic)");
}

inline const std::vector<std::string>& all_suites() {
    static const std::vector<std::string> names = {
        "trees",  "cycles", "unicyclic", "complete",      "biclique",
        "chains", "ladder", "hex",       "bipartite-max", "cubic"};
    return names;
}

} // namespace subpath
