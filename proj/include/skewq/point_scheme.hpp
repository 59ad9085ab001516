#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "skewq/classify.hpp"
#include "skewq/graph.hpp"

namespace skewq {

/// Set of 3-element vertex subsets, bit-packed by combinatorial index.
class TripleSet {
public:
    TripleSet() = default;

    explicit TripleSet(int n)
        : n_(n), bits_(words_for_bits(static_cast<int>(triple_count(n))), 0) {
        if (n < 0) throw precondition_error("negative vertex count");
    }

    int universe_size() const { return n_; }

    bool contains(int a, int b, int c) const { return test(index_of(a, b, c)); }

    void insert(int a, int b, int c) {
        const std::size_t i = index_of(a, b, c);
        if (!test(i)) {
            bits_[i / kWordBits] |= word_t{1} << (i % kWordBits);
            ++count_;
        }
    }

    std::size_t size() const { return count_; }

    /// Triples in lexicographic order, each sorted ascending.
    std::vector<std::array<int, 3>> to_vector() const {
        std::vector<std::array<int, 3>> out;
        out.reserve(count_);
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                for (int k = j + 1; k < n_; ++k)
                    if (contains(i, j, k)) out.push_back({i, j, k});
        return out;
    }

    bool operator==(const TripleSet&) const = default;

private:
    static std::size_t triple_count(int n) {
        return static_cast<std::size_t>(n) * (n > 1 ? n - 1 : 0) * (n > 2 ? n - 2 : 0) / 6;
    }

    std::size_t index_of(int a, int b, int c) const {
        detail::check_vertex(a, n_);
        detail::check_vertex(b, n_);
        detail::check_vertex(c, n_);
        int i = a, j = b, k = c;
        if (i > j) std::swap(i, j);
        if (j > k) std::swap(j, k);
        if (i > j) std::swap(i, j);
        if (i == j || j == k) throw precondition_error("triple needs three distinct vertices");
        return static_cast<std::size_t>(k) * (k - 1) * (k - 2) / 6 +
               static_cast<std::size_t>(j) * (j - 1) / 2 + static_cast<std::size_t>(i);
    }

    bool test(std::size_t i) const { return (bits_[i / kWordBits] >> (i % kWordBits)) & 1u; }

    int n_ = 0;
    std::vector<word_t> bits_;
    std::size_t count_ = 0;
};

namespace detail {

/// Generator by the edge-pattern route: no edge among the three pairs, or
/// exactly two edges meeting at a common vertex with the opposite pair
/// missing.
inline bool generator_by_edges(const Graph& g, int i, int j, int k) {
    const bool ij = g.has_edge(i, j);
    const bool ik = g.has_edge(i, k);
    const bool jk = g.has_edge(j, k);
    if (!ij && !ik && !jk) return true;
    if (ij && ik && !jk) return true;
    if (ij && jk && !ik) return true;
    if (ik && jk && !ij) return true;
    return false;
}

/// Generator by the sign route: the product of the three pair signs is -1.
inline bool generator_by_signs(const EpsilonMatrix& e, int i, int j, int k) {
    return e.sign(i, j) * e.sign(j, k) * e.sign(k, i) == -1;
}

}  // namespace detail

/// Generators of the Stanley-Reisner ideal attached to the graph: the cubic
/// monomial x_i x_j x_k is a generator exactly when the triple qualifies.
/// Debug builds cross-check the edge-pattern route against the sign route on
/// every call.
inline TripleSet sr_generators(const Graph& g) {
    const int n = g.vertex_count();
    TripleSet out(n);
#ifndef NDEBUG
    const EpsilonMatrix eps = n > 0 ? epsilon_from_graph(g) : EpsilonMatrix(1);
#endif
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const bool gen = detail::generator_by_edges(g, i, j, k);
                assert(gen == detail::generator_by_signs(eps, i, j, k));
                if (gen) out.insert(i, j, k);
            }
    return out;
}

/// True when every triple {i, j, k} over the remaining vertices is a
/// generator, i.e. {i, j} is a maximal face of size 2.  Over the full vertex
/// range this collapses to a row identity: for an edge the two neighborhood
/// rows must xor to the full vertex set, for a non-edge they must be equal.
inline bool is_p1_facet(const Graph& g, int i, int j) {
    const int n = g.vertex_count();
    detail::check_vertex(i, n);
    detail::check_vertex(j, n);
    if (i == j) throw precondition_error("facet test needs two distinct vertices");
    const word_t* ri = g.row(i);
    const word_t* rj = g.row(j);
    if (g.has_edge(i, j)) {
        for (int wi = 0; wi < g.words_per_row(); ++wi)
            if ((ri[wi] ^ rj[wi]) != g.word_mask(wi)) return false;
        return true;
    }
    for (int wi = 0; wi < g.words_per_row(); ++wi)
        if (ri[wi] != rj[wi]) return false;
    return true;
}

/// Number of irreducible components of the point scheme isomorphic to the
/// projective line.  Degenerate for fewer than three vertices: reported as 0
/// (no cubic monomials exist there).
inline int count_p1_components(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3) return 0;
    int count = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (is_p1_facet(g, i, j)) ++count;
    return count;
}

/// Unordered pairs with equal non-empty neighborhoods, in lexicographic
/// order.  Such pairs are never adjacent.
inline std::vector<std::pair<int, int>> j_pairs(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i) {
        if (g.degree(i) == 0) continue;
        for (int j = i + 1; j < n; ++j) {
            bool equal = true;
            for (int wi = 0; wi < g.words_per_row() && equal; ++wi)
                equal = g.row(i)[wi] == g.row(j)[wi];
            if (equal) out.emplace_back(i, j);
        }
    }
    return out;
}

/// Closed form for the line-component count, valid exactly when the graph
/// has an isolated vertex: j(G) + C(i(G), 2).
inline int ell_closed_form(const Graph& g) {
    const VertexSet iso = isolated_vertices(g);
    if (iso.empty())
        throw precondition_error("closed form needs an isolated vertex");
    return static_cast<int>(j_pairs(g).size() + choose2(static_cast<std::uint64_t>(iso.size())));
}

/// Maximal face of the associated simplicial complex; the component it cuts
/// out is a projective subspace of dimension |F| - 1.
struct Facet {
    VertexSet vertices;
    int dimension = 0;

    bool operator==(const Facet&) const = default;
};

/// All facets: maximal vertex subsets containing no generator triple.
/// Depth-first search over include/exclude decisions with generator-triple
/// pruning; capped because the facet count can grow exponentially.  Sorted
/// by descending size, then lexicographically by complement.
inline std::vector<Facet> components(const Graph& g, int size_cap = 12) {
    const int n = g.vertex_count();
    if (n > size_cap)
        throw cap_error("size cap exceeded: n=" + std::to_string(n) + " with cap " +
                        std::to_string(size_cap));
    std::vector<Facet> out;
    if (n == 0) return out;
    const TripleSet gens = sr_generators(g);

    std::vector<int> chosen;
    std::uint64_t chosen_mask = 0;
    auto can_add = [&](int v) {
        for (std::size_t a = 0; a < chosen.size(); ++a)
            for (std::size_t b = a + 1; b < chosen.size(); ++b)
                if (gens.contains(chosen[a], chosen[b], v)) return false;
        return true;
    };
    std::function<void(int)> dfs = [&](int v) {
        if (v == n) {
            for (int w = 0; w < n; ++w)
                if (!((chosen_mask >> w) & 1) && can_add(w)) return;  // extendable
            VertexSet f(n);
            for (int w : chosen) f.insert(w);
            out.push_back({std::move(f), static_cast<int>(chosen.size()) - 1});
            return;
        }
        if (can_add(v)) {
            chosen.push_back(v);
            chosen_mask |= std::uint64_t{1} << v;
            dfs(v + 1);
            chosen.pop_back();
            chosen_mask &= ~(std::uint64_t{1} << v);
        }
        dfs(v + 1);
    };
    dfs(0);

    std::sort(out.begin(), out.end(), [n](const Facet& a, const Facet& b) {
        if (a.dimension != b.dimension) return a.dimension > b.dimension;
        // lexicographic on the complements (the vanishing coordinate sets)
        for (int v = 0; v < n; ++v) {
            const bool av = !a.vertices.contains(v);
            const bool bv = !b.vertices.contains(v);
            if (av != bv) return av;
        }
        return false;
    });
    return out;
}

/// One round of neighborhood merging: take the lexicographically smallest
/// pair with equal non-empty neighborhoods, gather every vertex sharing that
/// neighborhood, and mutate each of them (ascending) with respect to the
/// smallest.  Strictly decreases j and never decreases the line-component
/// count.
inline Graph j_reduction_step(const Graph& g) {
    if (isolated_vertices(g).empty())
        throw precondition_error("j reduction needs an isolated vertex");
    const std::vector<std::pair<int, int>> J = j_pairs(g);
    if (J.empty()) throw precondition_error("j reduction needs j(G) > 0");
    const int u1 = J.front().first;
    std::vector<int> orbit;
    for (int u = 0; u < g.vertex_count(); ++u) {
        bool equal = true;
        for (int wi = 0; wi < g.words_per_row() && equal; ++wi)
            equal = g.row(u)[wi] == g.row(u1)[wi];
        if (equal) orbit.push_back(u);
    }
    Graph out = g;
    for (std::size_t i = 1; i < orbit.size(); ++i)
        detail::relative_mutate_inplace(out, orbit[i], u1);
    return out;
}

struct PointSchemeReport {
    int n = 0;
    TripleSet generators;
    int ell = 0;
    std::vector<std::pair<int, int>> j_pairs;
    int j_count = 0;
    int iso_count = 0;
    std::vector<std::pair<int, int>> p1_facets;
    int r = 0;
    std::uint64_t bound = 0;  // C(r+1, 2)
    bool bound_holds = false;
};

/// Full point-scheme summary.  Needs at least three vertices; when an
/// isolated vertex exists the facet count is cross-checked against the
/// closed form.
inline PointSchemeReport point_scheme_report(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3) throw precondition_error("point scheme report needs at least three vertices");
    PointSchemeReport rep;
    rep.n = n;
    rep.generators = sr_generators(g);
    rep.j_pairs = j_pairs(g);
    rep.j_count = static_cast<int>(rep.j_pairs.size());
    rep.iso_count = isolated_vertices(g).size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (is_p1_facet(g, i, j)) rep.p1_facets.emplace_back(i, j);
    rep.ell = static_cast<int>(rep.p1_facets.size());
    if (rep.iso_count > 0) {
        const int closed = ell_closed_form(g);
        if (closed != rep.ell)
            throw inconsistency_error("line-component routes disagree: facets give " +
                                      std::to_string(rep.ell) + ", closed form gives " +
                                      std::to_string(closed));
    }
    rep.r = classify(g).r;
    rep.bound = choose2(static_cast<std::uint64_t>(rep.r) + 1);
    rep.bound_holds = static_cast<std::uint64_t>(rep.ell) <= rep.bound;
    return rep;
}

}  // namespace skewq
