#pragma once

// Undirected simple graphs with immutable, sorted adjacency. Vertex ids are
// 0-based and contiguous. Mutation happens by building a new graph
// (add_edge / remove_edge return copies).
//
// Two text formats are supported:
//   - edge lists: one "u v" pair per line, '#' comments, blank lines, and an
//     optional leading "n=<int>" directive for isolated trailing vertices;
//   - graph6: the standard printable encoding, one graph per line, with the
//     optional ">>graph6<<" header accepted on input and never emitted.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "subpath/errors.hpp"

namespace subpath {

class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
        if (n < 0) throw input_error("vertex count must be non-negative");
        adj_.resize((std::size_t)n);
        edges_.reserve(edge_list.size());
        for (auto [u, v] : edge_list) {
            check_vertex(u);
            check_vertex(v);
            if (u == v)
                throw input_error("self-loop " + std::to_string(u) + "-" +
                                  std::to_string(v) + " not allowed");
            if (u > v) std::swap(u, v);
            edges_.emplace_back(u, v);
        }
        std::sort(edges_.begin(), edges_.end());
        for (std::size_t i = 1; i < edges_.size(); i++)
            if (edges_[i] == edges_[i - 1])
                throw input_error("duplicate edge " +
                                  std::to_string(edges_[i].first) + "-" +
                                  std::to_string(edges_[i].second));
        for (auto [u, v] : edges_) {
            adj_[(std::size_t)u].push_back(v);
            adj_[(std::size_t)v].push_back(u);
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }

    int vertex_count() const { return n_; }
    long long edge_count() const { return (long long)edges_.size(); }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[(std::size_t)v];
    }

    int degree(int v) const { return (int)neighbors(v).size(); }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        const auto& nb = adj_[(std::size_t)u];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    // Lexicographically sorted, each edge once with first < second.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw input_error("vertex " + std::to_string(v) +
                              " out of range (n=" + std::to_string(n_) + ")");
    }

    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
};

// ---------------------------------------------------------------- builders

inline Graph path_graph(int n) {
    if (n < 1) throw input_error("path_graph: n must be >= 1, got " + std::to_string(n));
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; i++) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw input_error("cycle_graph: n must be >= 3, got " + std::to_string(n));
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; i++) e.emplace_back(i, i + 1);
    e.emplace_back(n - 1, 0);
    return Graph(n, std::move(e));
}

inline Graph complete_graph(int n) {
    if (n < 1) throw input_error("complete_graph: n must be >= 1, got " + std::to_string(n));
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

inline Graph complete_bipartite_graph(int a, int b) {
    if (a < 1 || b < 1)
        throw input_error("complete_bipartite_graph: sides must be >= 1, got " +
                          std::to_string(a) + "," + std::to_string(b));
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; i++)
        for (int j = 0; j < b; j++) e.emplace_back(i, a + j);
    return Graph(a + b, std::move(e));
}

inline Graph add_edge(const Graph& g, int u, int v) {
    if (u == v)
        throw input_error("add_edge: self-loop " + std::to_string(u) + "-" +
                          std::to_string(v));
    if (g.has_edge(u, v))
        throw input_error("add_edge: edge " + std::to_string(u) + "-" +
                          std::to_string(v) + " already present");
    auto e = g.edges();
    e.emplace_back(std::min(u, v), std::max(u, v));
    return Graph(g.vertex_count(), std::move(e));
}

inline Graph remove_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v))
        throw input_error("remove_edge: edge " + std::to_string(u) + "-" +
                          std::to_string(v) + " not present");
    std::vector<std::pair<int, int>> e;
    e.reserve(g.edges().size() - 1);
    auto dropped = std::make_pair(std::min(u, v), std::max(u, v));
    for (auto& p : g.edges())
        if (p != dropped) e.push_back(p);
    return Graph(g.vertex_count(), std::move(e));
}

// ------------------------------------------------------------- edge lists

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool saw_content = false;
    std::optional<long long> declared_n;
    long long max_id = -1;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;

    auto fail = [&](const std::string& what) {
        throw input_error(what + " (line " + std::to_string(lineno) + ")");
    };

    while (std::getline(in, line)) {
        lineno++;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;

        if (!saw_content && line.compare(first, 2, "n=") == 0) {
            saw_content = true;
            std::string v = line.substr(first + 2);
            try {
                std::size_t used = 0;
                declared_n = std::stoll(v, &used);
                if (used != v.size() || *declared_n < 0) fail("bad n= directive");
            } catch (const input_error&) {
                throw;
            } catch (...) {
                fail("bad n= directive");
            }
            if (*declared_n > 50'000'000) fail("declared n too large");
            continue;
        }
        saw_content = true;

        std::istringstream ls(line);
        long long u, v;
        std::string extra;
        if (!(ls >> u >> v) || (ls >> extra))
            fail("malformed edge line '" + line + "'");
        if (u < 0 || v < 0) fail("negative vertex id");
        if (u > 50'000'000 || v > 50'000'000) fail("vertex id too large");
        if (u == v) fail("self-loop " + std::to_string(u) + "-" + std::to_string(v));
        if (declared_n && (u >= *declared_n || v >= *declared_n))
            fail("vertex id " + std::to_string(std::max(u, v)) +
                 " >= declared n=" + std::to_string(*declared_n));
        max_id = std::max({max_id, u, v});
        auto e = std::make_pair((int)std::min(u, v), (int)std::max(u, v));
        if (!seen.insert(e).second)
            fail("duplicate edge " + std::to_string(e.first) + "-" +
                 std::to_string(e.second));
        edges.push_back(e);
    }

    long long n = declared_n ? *declared_n : max_id + 1;
    return Graph((int)n, std::move(edges));
}

inline std::string format_edge_list(const Graph& g) {
    std::string out = "n=" + std::to_string(g.vertex_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

// ----------------------------------------------------------------- graph6
//
// Adjacency bits run over the upper triangle in column order: (0,1), (0,2),
// (1,2), (0,3), ... Six bits per byte, most significant first, offset by 63.

inline std::string encode_graph6(const Graph& g) {
    long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out += (char)(n + 63);
    } else if (n <= 258047) {
        out += '~';
        for (int s = 12; s >= 0; s -= 6) out += (char)(((n >> s) & 63) + 63);
    } else if (n <= 68719476735LL) {
        out += "~~";
        for (int s = 30; s >= 0; s -= 6) out += (char)(((n >> s) & 63) + 63);
    } else {
        throw input_error("graph too large for graph6 (n > 2^36-1)");
    }

    int bit = 5;
    char cur = 0;
    for (int j = 1; j < n; j++)
        for (int i = 0; i < j; i++) {
            if (g.has_edge(i, j)) cur |= (char)(1 << bit);
            if (--bit < 0) {
                out += (char)(cur + 63);
                bit = 5;
                cur = 0;
            }
        }
    if (bit != 5) out += (char)(cur + 63);
    return out;
}

inline Graph parse_graph6(const std::string& line_in) {
    std::string line = line_in;
    if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
    if (line.empty()) throw input_error("graph6: empty line");

    std::size_t pos = 0;
    auto next_byte = [&]() -> long long {
        if (pos >= line.size()) throw input_error("graph6: truncated header");
        unsigned char c = (unsigned char)line[pos++];
        if (c < 63 || c > 126)
            throw input_error("graph6: invalid character at position " +
                              std::to_string(pos));
        return c - 63;
    };

    long long n;
    if (line[0] != '~') {
        n = next_byte();
    } else if (line.size() >= 2 && line[1] != '~') {
        pos = 1;
        n = 0;
        for (int i = 0; i < 3; i++) n = (n << 6) | next_byte();
    } else {
        pos = 2;
        n = 0;
        for (int i = 0; i < 6; i++) n = (n << 6) | next_byte();
    }
    if (n > 2'000'000'000LL)
        throw input_error("graph6: header declares n=" + std::to_string(n) +
                          ", too large to materialize");

    unsigned long long bits = (unsigned long long)n * (n - 1) / 2;
    std::size_t need = (std::size_t)((bits + 5) / 6);
    if (line.size() - pos < need) throw input_error("graph6: truncated bit vector");
    if (line.size() - pos > need)
        throw input_error("graph6: trailing garbage after " +
                          std::to_string(need) + " adjacency bytes");

    std::vector<std::pair<int, int>> edges;
    int i = 0, j = 1;
    unsigned long long k = 0;
    while (k < bits) {
        long long v = next_byte();
        for (int b = 5; b >= 0 && k < bits; b--, k++) {
            if ((v >> b) & 1) edges.emplace_back(i, j);
            if (++i == j) {
                i = 0;
                j++;
            }
        }
        // padding bits in the final byte are ignored
    }
    return Graph((int)n, std::move(edges));
}

// ------------------------------------------------------------------ stats

struct GraphStats {
    int n = 0;
    long long m = 0;
    std::vector<int> degree_sequence; // ascending
    unsigned long long m1 = 0;        // first Zagreb index, sum of d^2
    unsigned long long m2 = 0;        // second Zagreb index, sum over edges of d_u*d_v
    long long triangles = 0;
    bool connected = false;
    std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition;
    std::vector<int> odd_cycle; // witness, non-empty iff not bipartite
};

inline GraphStats stats(const Graph& g) {
    GraphStats st;
    st.n = g.vertex_count();
    st.m = g.edge_count();

    st.degree_sequence.reserve((std::size_t)st.n);
    for (int v = 0; v < st.n; v++) st.degree_sequence.push_back(g.degree(v));
    for (int d : st.degree_sequence)
        st.m1 += (unsigned long long)d * (unsigned long long)d;
    std::sort(st.degree_sequence.begin(), st.degree_sequence.end());

    for (auto [u, v] : g.edges()) {
        st.m2 += (unsigned long long)g.degree(u) * (unsigned long long)g.degree(v);
        // common neighbors above v count each triangle exactly once
        const auto& nu = g.neighbors(u);
        const auto& nv = g.neighbors(v);
        auto iu = std::upper_bound(nu.begin(), nu.end(), v);
        auto iv = std::upper_bound(nv.begin(), nv.end(), v);
        while (iu != nu.end() && iv != nv.end()) {
            if (*iu < *iv) ++iu;
            else if (*iv < *iu) ++iv;
            else {
                st.triangles++;
                ++iu;
                ++iv;
            }
        }
    }

    // one BFS pass for components, 2-coloring, and an odd-cycle witness
    std::vector<int> color((std::size_t)st.n, -1), parent((std::size_t)st.n, -1);
    std::vector<int> depth((std::size_t)st.n, 0);
    int components = 0;
    bool bipartite = true;
    for (int s = 0; s < st.n && bipartite; s++) {
        if (color[(std::size_t)s] != -1) continue;
        components++;
        color[(std::size_t)s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty() && bipartite) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (color[(std::size_t)w] == -1) {
                    color[(std::size_t)w] = color[(std::size_t)u] ^ 1;
                    parent[(std::size_t)w] = u;
                    depth[(std::size_t)w] = depth[(std::size_t)u] + 1;
                    q.push(w);
                } else if (color[(std::size_t)w] == color[(std::size_t)u]) {
                    bipartite = false;
                    // climb to the common ancestor to close an odd cycle
                    int x = u, y = w;
                    std::vector<int> xs, ys;
                    while (depth[(std::size_t)x] > depth[(std::size_t)y]) {
                        xs.push_back(x);
                        x = parent[(std::size_t)x];
                    }
                    while (depth[(std::size_t)y] > depth[(std::size_t)x]) {
                        ys.push_back(y);
                        y = parent[(std::size_t)y];
                    }
                    while (x != y) {
                        xs.push_back(x);
                        ys.push_back(y);
                        x = parent[(std::size_t)x];
                        y = parent[(std::size_t)y];
                    }
                    st.odd_cycle = xs;
                    st.odd_cycle.push_back(x);
                    st.odd_cycle.insert(st.odd_cycle.end(), ys.rbegin(), ys.rend());
                    SUBPATH_CHECK(st.odd_cycle.size() % 2 == 1, "odd cycle witness parity");
                    break;
                }
            }
        }
    }
    st.connected = components <= 1;
    if (!bipartite) {
        // finish component labelling for connectivity
        std::vector<char> seen((std::size_t)st.n, 0);
        components = 0;
        for (int s = 0; s < st.n; s++) {
            if (seen[(std::size_t)s]) continue;
            components++;
            std::queue<int> q;
            q.push(s);
            seen[(std::size_t)s] = 1;
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                for (int w : g.neighbors(u))
                    if (!seen[(std::size_t)w]) {
                        seen[(std::size_t)w] = 1;
                        q.push(w);
                    }
            }
        }
        st.connected = components <= 1;
    } else {
        std::pair<std::vector<int>, std::vector<int>> parts;
        for (int v = 0; v < st.n; v++)
            (color[(std::size_t)v] == 1 ? parts.second : parts.first).push_back(v);
        st.bipartition = std::move(parts);
    }
    return st;
}

} // namespace subpath
