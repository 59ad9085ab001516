#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "skewq/errors.hpp"

namespace skewq {

using word_t = std::uint64_t;

inline constexpr int kWordBits = 64;

inline int words_for_bits(int bits) { return (bits + kWordBits - 1) / kWordBits; }

inline std::uint64_t choose2(std::uint64_t m) { return m < 2 ? 0 : m * (m - 1) / 2; }

class Graph;

namespace detail {

inline void check_vertex(int v, int n) {
    if (v < 0 || v >= n)
        throw precondition_error("vertex out of range: " + std::to_string(v + 1));
}

void mutate_inplace(Graph& g, int v);
void relative_mutate_inplace(Graph& g, int v, int u);

}  // namespace detail

/// Bit-packed subset of a vertex range [0, n).
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int n) : n_(n), bits_(words_for_bits(n), 0) {
        if (n < 0) throw precondition_error("negative vertex count");
    }

    VertexSet(int n, std::initializer_list<int> vertices) : VertexSet(n) {
        for (int v : vertices) insert(v);
    }

    int universe_size() const { return n_; }

    bool contains(int v) const {
        detail::check_vertex(v, n_);
        return (bits_[v / kWordBits] >> (v % kWordBits)) & 1u;
    }

    void insert(int v) {
        detail::check_vertex(v, n_);
        bits_[v / kWordBits] |= word_t{1} << (v % kWordBits);
    }

    void erase(int v) {
        detail::check_vertex(v, n_);
        bits_[v / kWordBits] &= ~(word_t{1} << (v % kWordBits));
    }

    int size() const {
        int c = 0;
        for (word_t w : bits_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        return std::all_of(bits_.begin(), bits_.end(), [](word_t w) { return w == 0; });
    }

    /// Members in ascending order.
    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::size_t wi = 0; wi < bits_.size(); ++wi) {
            word_t w = bits_[wi];
            while (w) {
                out.push_back(static_cast<int>(wi) * kWordBits + std::countr_zero(w));
                w &= w - 1;
            }
        }
        return out;
    }

    const std::vector<word_t>& words() const { return bits_; }

    bool operator==(const VertexSet&) const = default;

private:
    int n_ = 0;
    std::vector<word_t> bits_;
};

/// Simple undirected graph on vertices 0..n-1 with bit-packed adjacency
/// rows.  Vertices are 0-based everywhere in the library; the 1-based
/// convention of the text formats is confined to the parse/format layer.
/// Rows stay symmetric and loop-free through every operation.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n)
        : n_(n), words_(words_for_bits(n)), rows_(static_cast<std::size_t>(n) * words_, 0) {
        if (n < 0) throw precondition_error("negative vertex count");
    }

    Graph(int n, std::initializer_list<std::pair<int, int>> edge_list) : Graph(n) {
        for (auto [u, v] : edge_list) add_edge(u, v);
    }

    int vertex_count() const { return n_; }
    int words_per_row() const { return words_; }

    bool has_edge(int u, int v) const {
        detail::check_vertex(u, n_);
        detail::check_vertex(v, n_);
        return (row(u)[v / kWordBits] >> (v % kWordBits)) & 1u;
    }

    void add_edge(int u, int v) { set_edge(u, v, true); }
    void remove_edge(int u, int v) { set_edge(u, v, false); }

    void set_edge(int u, int v, bool present) {
        detail::check_vertex(u, n_);
        detail::check_vertex(v, n_);
        if (u == v) throw precondition_error("loops are not allowed");
        const word_t bu = word_t{1} << (u % kWordBits);
        const word_t bv = word_t{1} << (v % kWordBits);
        if (present) {
            row_mut(u)[v / kWordBits] |= bv;
            row_mut(v)[u / kWordBits] |= bu;
        } else {
            row_mut(u)[v / kWordBits] &= ~bv;
            row_mut(v)[u / kWordBits] &= ~bu;
        }
    }

    int degree(int v) const {
        detail::check_vertex(v, n_);
        int c = 0;
        const word_t* r = row(v);
        for (int w = 0; w < words_; ++w) c += std::popcount(r[w]);
        return c;
    }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(degree(v));
        return twice / 2;
    }

    const word_t* row(int v) const { return rows_.data() + static_cast<std::size_t>(v) * words_; }

    /// Mask of valid vertex bits in word `wi` of a row.
    word_t word_mask(int wi) const {
        const int full = n_ / kWordBits;
        if (wi < full) return ~word_t{0};
        const int rem = n_ % kWordBits;
        return rem ? ((word_t{1} << rem) - 1) : 0;
    }

    bool operator==(const Graph&) const = default;

private:
    word_t* row_mut(int v) { return rows_.data() + static_cast<std::size_t>(v) * words_; }

    int n_ = 0;
    int words_ = 0;
    std::vector<word_t> rows_;

    friend void detail::mutate_inplace(Graph&, int);
    friend void detail::relative_mutate_inplace(Graph&, int, int);
};

/// Symmetric n-by-n sign matrix with entries in {+1, -1} and unit diagonal.
class EpsilonMatrix {
public:
    explicit EpsilonMatrix(int n)
        : n_(n), entries_(static_cast<std::size_t>(n) * n, -1) {
        if (n <= 0) throw precondition_error("epsilon matrix needs a positive size");
        for (int i = 0; i < n; ++i) entries_[idx(i, i)] = 1;
    }

    static EpsilonMatrix from_entries(int n, const std::vector<int>& entries) {
        if (n <= 0) throw precondition_error("epsilon matrix needs a positive size");
        if (entries.size() != static_cast<std::size_t>(n) * n)
            throw precondition_error("invalid epsilon: wrong entry count");
        EpsilonMatrix e(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const int s = entries[static_cast<std::size_t>(i) * n + j];
                if (s != 1 && s != -1)
                    throw precondition_error("invalid epsilon: entries must be +1 or -1");
                e.entries_[e.idx(i, j)] = static_cast<signed char>(s);
            }
        for (int i = 0; i < n; ++i) {
            if (e.sign(i, i) != 1)
                throw precondition_error("invalid epsilon: diagonal entry is not +1");
            for (int j = i + 1; j < n; ++j)
                if (e.sign(i, j) != e.sign(j, i))
                    throw precondition_error("invalid epsilon: matrix is not symmetric");
        }
        return e;
    }

    int size() const { return n_; }

    int sign(int i, int j) const {
        detail::check_vertex(i, n_);
        detail::check_vertex(j, n_);
        return entries_[idx(i, j)];
    }

    void set_sign(int i, int j, int s) {
        detail::check_vertex(i, n_);
        detail::check_vertex(j, n_);
        if (s != 1 && s != -1) throw precondition_error("invalid epsilon: sign must be +1 or -1");
        if (i == j && s != 1) throw precondition_error("invalid epsilon: diagonal entry is not +1");
        entries_[idx(i, j)] = static_cast<signed char>(s);
        entries_[idx(j, i)] = static_cast<signed char>(s);
    }

    bool operator==(const EpsilonMatrix&) const = default;

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

    int n_ = 0;
    std::vector<signed char> entries_;
};

/// Edge ij present exactly when the sign at (i, j) is +1.
inline Graph graph_from_epsilon(const EpsilonMatrix& eps) {
    const int n = eps.size();
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (eps.sign(i, j) == 1) g.add_edge(i, j);
    return g;
}

inline EpsilonMatrix epsilon_from_graph(const Graph& g) {
    const int n = g.vertex_count();
    EpsilonMatrix e(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.set_sign(i, j, g.has_edge(i, j) ? 1 : -1);
    return e;
}

/// Disjoint union of `a` isolated edges and `b` isolated vertices, laid out
/// as edges (0,1), (2,3), ..., (2a-2, 2a-1) followed by the isolated
/// vertices 2a..2a+b-1.
inline Graph canonical_disjoint(int a, int b) {
    if (a < 0 || b < 0) throw precondition_error("negative count");
    Graph g(2 * a + b);
    for (int i = 0; i < a; ++i) g.add_edge(2 * i, 2 * i + 1);
    return g;
}

inline VertexSet neighborhood(const Graph& g, int v) {
    detail::check_vertex(v, g.vertex_count());
    VertexSet out(g.vertex_count());
    const word_t* r = g.row(v);
    for (int wi = 0; wi < g.words_per_row(); ++wi) {
        word_t w = r[wi];
        while (w) {
            out.insert(wi * kWordBits + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

inline VertexSet isolated_vertices(const Graph& g) {
    VertexSet out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) out.insert(v);
    return out;
}

/// Edges vw with N(v) = {w} and N(w) = {v}, in lexicographic order.
inline std::vector<std::pair<int, int>> isolated_edges(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < n; ++v) {
        if (deg[static_cast<std::size_t>(v)] != 1) continue;
        for (int w = v + 1; w < n; ++w)
            if (g.has_edge(v, w) && deg[static_cast<std::size_t>(w)] == 1) out.emplace_back(v, w);
    }
    return out;
}

/// Edges in lexicographic order, smaller endpoint first.
inline std::vector<std::pair<int, int>> edges(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i + 1; j < g.vertex_count(); ++j)
            if (g.has_edge(i, j)) out.emplace_back(i, j);
    return out;
}

/// Result of deleting vertices with compact relabeling: surviving vertices
/// keep their relative order and are renumbered 0..n-|W|-1.
struct Relabeling {
    Graph graph;
    std::vector<int> old_to_new;  // -1 for removed vertices
    std::vector<int> new_to_old;
};

inline Relabeling remove_vertices(const Graph& g, const VertexSet& w) {
    const int n = g.vertex_count();
    if (w.universe_size() != n)
        throw precondition_error("vertex set does not match the graph's vertex range");
    Relabeling out;
    out.old_to_new.assign(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        if (w.contains(v)) continue;
        out.old_to_new[static_cast<std::size_t>(v)] = static_cast<int>(out.new_to_old.size());
        out.new_to_old.push_back(v);
    }
    out.graph = Graph(static_cast<int>(out.new_to_old.size()));
    for (std::size_t a = 0; a < out.new_to_old.size(); ++a)
        for (std::size_t b = a + 1; b < out.new_to_old.size(); ++b)
            if (g.has_edge(out.new_to_old[a], out.new_to_old[b]))
                out.graph.add_edge(static_cast<int>(a), static_cast<int>(b));
    return out;
}

/// Rebuild the graph under a vertex bijection old -> new.
inline Graph relabel(const Graph& g, const std::vector<int>& old_to_new) {
    const int n = g.vertex_count();
    if (old_to_new.size() != static_cast<std::size_t>(n))
        throw precondition_error("relabeling has wrong size");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int img : old_to_new) {
        if (img < 0 || img >= n || seen[static_cast<std::size_t>(img)])
            throw precondition_error("relabeling is not a bijection");
        seen[static_cast<std::size_t>(img)] = true;
    }
    Graph out(n);
    for (auto [i, j] : edges(g))
        out.add_edge(old_to_new[static_cast<std::size_t>(i)], old_to_new[static_cast<std::size_t>(j)]);
    return out;
}

inline std::uint64_t graph_hash(const Graph& g) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int wi = 0; wi < g.words_per_row(); ++wi) mix(g.row(v)[wi]);
    return h;
}

}  // namespace skewq
