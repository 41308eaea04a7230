#pragma once

// Chains of cycles sharing no vertices, consecutive cycles joined by an
// edge ("rung"). A chain of k cycles is described by the two arc-length
// sequences a_1..a_k and b_1..b_k: cycle i decomposes into an upper arc of
// a_i edges and a lower arc of b_i edges between its rung endpoints, the
// end cycles count their single arc twice (a_1 = b_1, a_k = b_k). Cycle
// lengths are g_1 = a_1 + 2, g_k = a_k + 2, and g_i = a_i + b_i + 2 in the
// interior. The subpath number of any such chain has a closed form, which
// is what pn_chain evaluates; chain_graph builds the labeled graph so the
// formula can be checked against the generic counter.

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "subpath/errors.hpp"
#include "subpath/graph.hpp"
#include "subpath/numeric.hpp"

namespace subpath {

struct ChainSpec {
    std::vector<long long> a; // upper arc lengths, a[0] == b[0], a[k-1] == b[k-1]
    std::vector<long long> b; // lower arc lengths

    int k() const { return (int)a.size(); }

    long long cycle_length(int i) const {
        if (i == 0 || i == k() - 1) return a[(std::size_t)i] + 2;
        return a[(std::size_t)i] + b[(std::size_t)i] + 2;
    }

    std::vector<long long> cycle_lengths() const {
        std::vector<long long> g((std::size_t)k());
        for (int i = 0; i < k(); i++) g[(std::size_t)i] = cycle_length(i);
        return g;
    }

    long long vertex_count() const {
        long long n = a.front() + a.back() + 2;
        for (int i = 1; i + 1 < k(); i++) n += a[(std::size_t)i] + b[(std::size_t)i];
        return n;
    }

    long long edge_count() const { return vertex_count() + k() - 1; }
};

inline ChainSpec make_chain_spec(std::vector<long long> a, std::vector<long long> b) {
    if (a.size() != b.size())
        throw input_error("chain spec: arc sequences differ in length (" +
                          std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
    if (a.size() < 2)
        throw input_error("chain spec: need at least 2 cycles, got " +
                          std::to_string(a.size()));
    for (std::size_t i = 0; i < a.size(); i++)
        if (a[i] < 1 || b[i] < 1)
            throw input_error("chain spec: arc lengths must be >= 1, got a_" +
                              std::to_string(i + 1) + "=" + std::to_string(a[i]) +
                              ", b_" + std::to_string(i + 1) + "=" + std::to_string(b[i]));
    if (a.front() != b.front() || a.back() != b.back())
        throw input_error("chain spec: end cycles have a single arc, so a_1 = b_1 "
                          "and a_k = b_k are required");
    return ChainSpec{std::move(a), std::move(b)};
}

inline std::string to_string(const ChainSpec& s) {
    std::ostringstream out;
    for (int i = 0; i < s.k(); i++) out << (i ? "," : "") << s.a[(std::size_t)i];
    out << ';';
    for (int i = 0; i < s.k(); i++) out << (i ? "," : "") << s.b[(std::size_t)i];
    return out.str();
}

// Accepts the text form "a_1,...,a_k;b_1,...,b_k", e.g. "4,4;4,4".
inline ChainSpec parse_chain_spec(const std::string& text) {
    auto semi = text.find(';');
    if (semi == std::string::npos || text.find(';', semi + 1) != std::string::npos)
        throw input_error("chain spec '" + text + "': expected exactly one ';'");
    auto parse_list = [&](const std::string& part) {
        std::vector<long long> out;
        std::string token;
        std::istringstream in(part);
        while (std::getline(in, token, ',')) {
            std::size_t pos = 0;
            long long v = 0;
            try {
                v = std::stoll(token, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (token.empty() || pos != token.size())
                throw input_error("chain spec '" + text + "': bad arc length '" +
                                  token + "'");
            out.push_back(v);
        }
        if (!part.empty() && part.back() == ',')
            throw input_error("chain spec '" + text + "': trailing comma");
        return out;
    };
    return make_chain_spec(parse_list(text.substr(0, semi)),
                           parse_list(text.substr(semi + 1)));
}

// Deterministic labeling: rung endpoints first (u_i = 2(i-1) on the upper
// side, v_i = 2(i-1)+1 on the lower side for rungs i = 1..k-1), then the
// arc-interior vertices in construction order: first cycle's arc, then for
// each interior cycle the upper arc followed by the lower arc, then the
// last cycle's arc.
inline Graph chain_graph(const ChainSpec& s) {
    long long n_ll = s.vertex_count();
    if (n_ll > 10'000'000)
        throw input_error("chain_graph: " + std::to_string(n_ll) +
                          " vertices is too large to materialize");
    int k = s.k();
    int n = (int)n_ll;
    std::vector<std::pair<int, int>> edges;
    edges.reserve((std::size_t)s.edge_count());

    auto u = [](int i) { return 2 * (i - 1); };     // rung i, upper endpoint (1-based)
    auto v = [](int i) { return 2 * (i - 1) + 1; }; // rung i, lower endpoint

    for (int i = 1; i <= k - 1; i++) edges.emplace_back(u(i), v(i));

    int next_id = 2 * (k - 1);
    auto add_arc = [&](int from, int to, long long len) {
        // path of `len` edges between existing vertices, len-1 fresh interior ids
        int cur = from;
        for (long long step = 1; step < len; step++) {
            edges.emplace_back(cur, next_id);
            cur = next_id++;
        }
        edges.emplace_back(cur, to);
    };

    add_arc(u(1), v(1), s.a.front() + 1);
    for (int i = 2; i <= k - 1; i++) {
        add_arc(u(i - 1), u(i), s.a[(std::size_t)(i - 1)]);
        add_arc(v(i - 1), v(i), s.b[(std::size_t)(i - 1)]);
    }
    add_arc(u(k - 1), v(k - 1), s.a.back() + 1);

    SUBPATH_CHECK(next_id == n, "chain_graph vertex count");
    return Graph(n, edges);
}

// Closed form for the subpath number of a chain. Terms group the paths by
// which rungs they cross and which cycle(s) hold their endpoints; the
// correction subtracts the overcounted all-rung traversals between the two
// end arcs, and each path is produced twice before the final halving is
// folded into the term structure.
inline BigCount pn_chain(const ChainSpec& s) {
    const int k = s.k();
    auto A = [&](int i) { return BigCount((long)s.a[(std::size_t)(i - 1)]); };
    auto B = [&](int i) { return BigCount((long)s.b[(std::size_t)(i - 1)]); };

    BigCount total = 0;
    for (int i = 1; i <= k; i++)
        for (int j = i + 1; j <= k; j++)
            total += (A(i) * B(j) + B(i) * A(j)) * pow2((unsigned long)(j - i - 1)) *
                     (long)(i + 1) * (long)(k - j + 2);
    total -= A(1) * A(k) * pow2((unsigned long)k);

    for (int i = 2; i <= k - 1; i++)
        for (int j = i + 1; j <= k - 1; j++)
            total += (A(i) * A(j) + B(i) * B(j)) * pow2((unsigned long)(j - i - 1)) *
                     (long)(i + 1) * (long)(k - j + 2);

    for (int i = 2; i <= k - 1; i++)
        total += (binomial(A(i) + 1, 2) + binomial(B(i) + 1, 2)) *
                 (long)(1 + (long long)i * (k - i + 1));

    total += (binomial(A(1) + 2, 2) + binomial(A(k) + 2, 2)) * (long)(k + 1);

    for (int i = 2; i <= k - 1; i++)
        total += (A(i) + 1) * (B(i) + 1) * (long)(k + 1);

    total -= (long)((long long)(k - 1) * (k + 1));
    total += (long)s.vertex_count();
    SUBPATH_CHECK(total > 0, "pn_chain positivity");
    return total;
}

// Interior cycle i is "linear" when its arcs match (a_i = b_i),
// "almost linear" when they differ by exactly one, and a "kink" when one
// arc is a single edge. The predicates overlap (a_i=1, b_i=1 is both linear
// and a kink), so each is exposed as its own flag; `tag` reports the first
// match in the order linear, almost-linear, kink, other.
struct CycleClass {
    long long a = 0;
    long long b = 0;
    long long length = 0;
    bool linear = false;
    bool almost_linear = false;
    bool kink = false;
    std::string tag;
};

struct ChainClass {
    bool degenerate = false; // k = 2: no interior cycles, every predicate vacuous
    bool linear = false;
    bool almost_linear = false;
    bool kink_chain = false;
    std::string tag;
    std::vector<CycleClass> interior; // cycles 2..k-1 in order
};

inline ChainClass classify_chain(const ChainSpec& s) {
    ChainClass c;
    const int k = s.k();
    for (int i = 2; i <= k - 1; i++) {
        CycleClass cc;
        cc.a = s.a[(std::size_t)(i - 1)];
        cc.b = s.b[(std::size_t)(i - 1)];
        cc.length = s.cycle_length(i - 1);
        cc.linear = cc.a == cc.b;
        cc.almost_linear = (cc.a > cc.b ? cc.a - cc.b : cc.b - cc.a) == 1;
        cc.kink = cc.a == 1 || cc.b == 1;
        cc.tag = cc.linear         ? "linear"
                 : cc.almost_linear ? "almost-linear"
                 : cc.kink          ? "kink"
                                    : "other";
        c.interior.push_back(std::move(cc));
    }
    if (k == 2) {
        c.degenerate = true;
        c.linear = true;
        c.kink_chain = true;
        c.tag = "degenerate";
        return c;
    }
    c.linear = std::all_of(c.interior.begin(), c.interior.end(),
                           [](const CycleClass& cc) { return cc.linear; });
    c.almost_linear =
        !c.linear && std::all_of(c.interior.begin(), c.interior.end(),
                                 [](const CycleClass& cc) {
                                     return cc.linear || cc.almost_linear;
                                 });
    c.kink_chain = std::all_of(c.interior.begin(), c.interior.end(),
                               [](const CycleClass& cc) { return cc.kink; });
    c.tag = c.linear         ? "linear"
            : c.almost_linear ? "almost-linear"
            : c.kink_chain    ? "kink-chain"
                              : "other";
    return c;
}

namespace detail {

// Orbit of a spec under relabelings that preserve the cycle-length
// sequence: swapping the two arc sequences, and, when the length sequence
// is a palindrome, reversing the chain (optionally combined with the swap).
inline std::vector<ChainSpec> spec_orbit(const ChainSpec& s, bool palindrome) {
    std::vector<ChainSpec> orbit;
    orbit.push_back(s);
    orbit.push_back(ChainSpec{s.b, s.a});
    if (palindrome) {
        ChainSpec r{s.a, s.b};
        std::reverse(r.a.begin(), r.a.end());
        std::reverse(r.b.begin(), r.b.end());
        orbit.push_back(r);
        orbit.push_back(ChainSpec{r.b, r.a});
    }
    return orbit;
}

inline bool spec_less(const ChainSpec& x, const ChainSpec& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
}

} // namespace detail

// All chains with the given cycle-length sequence, as arc splits. By
// default every split is listed; with dedupe=true only the representative
// of each symmetry orbit (lexicographically smallest (a;b)) is kept.
inline std::vector<ChainSpec> enumerate_family(const std::vector<long long>& lengths,
                                               bool dedupe = false) {
    const int k = (int)lengths.size();
    if (k < 2)
        throw input_error("enumerate_family: need at least 2 cycle lengths, got " +
                          std::to_string(k));
    for (int i = 0; i < k; i++) {
        bool end = i == 0 || i == k - 1;
        if (lengths[(std::size_t)i] < (end ? 3 : 4))
            throw input_error("enumerate_family: cycle length " +
                              std::to_string(lengths[(std::size_t)i]) + " at position " +
                              std::to_string(i + 1) + " is below the minimum (" +
                              (end ? "3 for end cycles" : "4 for interior cycles") + ")");
    }
    bool palindrome = std::equal(lengths.begin(), lengths.end(), lengths.rbegin());

    std::vector<long long> a((std::size_t)k), b((std::size_t)k);
    a[0] = b[0] = lengths[0] - 2;
    a[(std::size_t)(k - 1)] = b[(std::size_t)(k - 1)] = lengths[(std::size_t)(k - 1)] - 2;

    std::vector<ChainSpec> out;
    // odometer over the interior splits a_i in 1..g_i-3
    std::vector<long long> split((std::size_t)std::max(0, k - 2), 1);
    while (true) {
        for (int i = 1; i + 1 < k; i++) {
            a[(std::size_t)i] = split[(std::size_t)(i - 1)];
            b[(std::size_t)i] = lengths[(std::size_t)i] - 2 - a[(std::size_t)i];
        }
        ChainSpec s{a, b};
        if (!dedupe) {
            out.push_back(s);
        } else {
            bool minimal = true;
            for (const ChainSpec& t : detail::spec_orbit(s, palindrome))
                if (detail::spec_less(t, s)) {
                    minimal = false;
                    break;
                }
            if (minimal) out.push_back(s);
        }
        int pos = (int)split.size() - 1;
        while (pos >= 0 && split[(std::size_t)pos] == lengths[(std::size_t)(pos + 1)] - 3) {
            split[(std::size_t)pos] = 1;
            pos--;
        }
        if (pos < 0) break;
        split[(std::size_t)pos]++;
    }
    return out;
}

struct FamilyExtremes {
    std::vector<long long> cycle_lengths;
    long long family_size = 0;
    BigCount min_value;
    BigCount max_value;
    std::vector<ChainSpec> minimizers;
    std::vector<ChainSpec> maximizers;
    bool maximizers_all_kink = false;
    bool minimizers_all_near_linear = false; // linear or almost-linear
};

// Sweeps the full (undeduplicated) family for a fixed cycle-length
// sequence and reports the extreme specs. Requires k >= 3 and every cycle
// length >= 4 so that the interior split is never forced and the kink /
// linear predicates are meaningful.
inline FamilyExtremes extremal_in_family(const std::vector<long long>& lengths) {
    if (lengths.size() < 3)
        throw input_error("extremal_in_family: need at least 3 cycles, got " +
                          std::to_string(lengths.size()));
    for (long long g : lengths)
        if (g < 4)
            throw input_error("extremal_in_family: all cycle lengths must be >= 4, got " +
                              std::to_string(g));

    FamilyExtremes ex;
    ex.cycle_lengths = lengths;
    for (ChainSpec& s : enumerate_family(lengths, false)) {
        BigCount value = pn_chain(s);
        ex.family_size++;
        if (ex.family_size == 1 || value < ex.min_value) {
            ex.min_value = value;
            ex.minimizers.clear();
        }
        if (value == ex.min_value) ex.minimizers.push_back(s);
        if (ex.family_size == 1 || value > ex.max_value) {
            ex.max_value = value;
            ex.maximizers.clear();
        }
        if (value == ex.max_value) ex.maximizers.push_back(s);
    }
    ex.maximizers_all_kink =
        std::all_of(ex.maximizers.begin(), ex.maximizers.end(),
                    [](const ChainSpec& s) { return classify_chain(s).kink_chain; });
    ex.minimizers_all_near_linear =
        std::all_of(ex.minimizers.begin(), ex.minimizers.end(), [](const ChainSpec& s) {
            ChainClass c = classify_chain(s);
            return c.linear || c.almost_linear;
        });
    return ex;
}

} // namespace subpath
