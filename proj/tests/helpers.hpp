#pragma once

// Test-only helpers and independent oracles.  The oracles deliberately use
// different data structures and algorithms (edge sets, dense int matrices,
// literal definitional loops) from the bit-packed implementation they check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <utility>
#include <vector>

#include "skewq/skewq.hpp"

namespace testutil {

/// Build a graph from 1-based edge pairs, matching the labels used in the
/// text formats.
inline skewq::Graph g1(int n, std::initializer_list<std::pair<int, int>> edges) {
    skewq::Graph g(n);
    for (auto [i, j] : edges) g.add_edge(i - 1, j - 1);
    return g;
}

/// Edges as 1-based pairs in lexicographic order.
inline std::vector<std::pair<int, int>> edges1(const skewq::Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (auto [i, j] : skewq::edges(g)) out.emplace_back(i + 1, j + 1);
    return out;
}

inline skewq::Graph complete_graph(int n) {
    skewq::Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

/// All graphs on n vertices, enumerated by edge mask.
inline void for_each_graph(int n, const std::function<void(const skewq::Graph&)>& fn) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        skewq::Graph g(n);
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if ((mask >> bit) & 1) g.add_edge(i, j);
        fn(g);
    }
}

// ---------------------------------------------------------------------------
// set-of-edges graph oracle

struct NaiveGraph {
    int n = 0;
    std::set<std::pair<int, int>> edges;  // i < j, 0-based

    static NaiveGraph from(const skewq::Graph& g) {
        NaiveGraph out{g.vertex_count(), {}};
        for (auto e : skewq::edges(g)) out.edges.insert(e);
        return out;
    }

    skewq::Graph to_graph() const {
        skewq::Graph g(n);
        for (auto [i, j] : edges) g.add_edge(i, j);
        return g;
    }

    bool has(int i, int j) const {
        if (i > j) std::swap(i, j);
        return edges.count({i, j}) > 0;
    }

    std::set<int> nbhd(int v) const {
        std::set<int> out;
        for (auto [i, j] : edges) {
            if (i == v) out.insert(j);
            if (j == v) out.insert(i);
        }
        return out;
    }
};

/// Mutation straight from the definition: new edges at v are the complement
/// of the old neighborhood; everything else is kept.
inline NaiveGraph naive_mutate(const NaiveGraph& g, int v) {
    NaiveGraph out{g.n, {}};
    const std::set<int> nb = g.nbhd(v);
    for (int w = 0; w < g.n; ++w) {
        if (w == v || nb.count(w)) continue;
        out.edges.insert({std::min(v, w), std::max(v, w)});
    }
    for (auto [i, j] : g.edges)
        if (i != v && j != v) out.edges.insert({i, j});
    return out;
}

/// Relative mutation straight from the definition: new edges at v go to the
/// symmetric difference of the two neighborhoods.
inline NaiveGraph naive_relative_mutate(const NaiveGraph& g, int v, int u) {
    NaiveGraph out{g.n, {}};
    const std::set<int> nv = g.nbhd(v), nu = g.nbhd(u);
    for (int w = 0; w < g.n; ++w) {
        if (w == v) continue;
        const bool in_u = nu.count(w) > 0, in_v = nv.count(w) > 0;
        if (in_u != in_v) out.edges.insert({std::min(v, w), std::max(v, w)});
    }
    for (auto [i, j] : g.edges)
        if (i != v && j != v) out.edges.insert({i, j});
    return out;
}

// ---------------------------------------------------------------------------
// dense integer GF(2) elimination oracle

inline std::vector<std::vector<int>> to_int_matrix(const skewq::BitMatrix& m) {
    std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols(), 0));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out[r][c] = m.get(r, c) ? 1 : 0;
    return out;
}

inline int naive_rank_gf2(std::vector<std::vector<int>> m) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c]) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[rank]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || !m[r][c]) continue;
            for (int k = 0; k < cols; ++k) m[r][k] ^= m[rank][k];
        }
        ++rank;
    }
    return rank;
}

// ---------------------------------------------------------------------------
// point-scheme oracles from the literal definitions

/// Generator test by non-edge parity: the triple qualifies exactly when an
/// odd number of its three pairs are non-edges.
inline bool naive_generator(const skewq::Graph& g, int i, int j, int k) {
    const int non_edges = !g.has_edge(i, j) + !g.has_edge(i, k) + !g.has_edge(j, k);
    return non_edges % 2 == 1;
}

/// Literal facet test: every extension triple must be a generator.
inline bool naive_is_p1_facet(const skewq::Graph& g, int i, int j) {
    for (int k = 0; k < g.vertex_count(); ++k) {
        if (k == i || k == j) continue;
        if (!naive_generator(g, i, j, k)) return false;
    }
    return true;
}

inline int naive_ell(const skewq::Graph& g) {
    if (g.vertex_count() < 3) return 0;
    int count = 0;
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i + 1; j < g.vertex_count(); ++j)
            if (naive_is_p1_facet(g, i, j)) ++count;
    return count;
}

/// Facet enumeration by scanning all 2^n subsets for maximal faces.
inline std::vector<std::set<int>> naive_facets(const skewq::Graph& g) {
    const int n = g.vertex_count();
    const std::uint64_t total = std::uint64_t{1} << n;
    auto is_face = [&](std::uint64_t mask) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) vs.push_back(v);
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b)
                for (std::size_t c = b + 1; c < vs.size(); ++c)
                    if (naive_generator(g, vs[a], vs[b], vs[c])) return false;
        return true;
    };
    std::vector<std::set<int>> out;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (!is_face(mask)) continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v)
            if (!((mask >> v) & 1) && is_face(mask | (std::uint64_t{1} << v))) maximal = false;
        if (!maximal) continue;
        std::set<int> f;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) f.insert(v);
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace testutil
