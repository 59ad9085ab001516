#pragma once

#include <string>
#include <utility>
#include <vector>

#include "skewq/graph.hpp"

namespace skewq {

namespace detail {

/// Complement every edge at v: vw becomes an edge exactly when it was not,
/// for all w != v.  Edges not incident to v are untouched.
inline void mutate_inplace(Graph& g, int v) {
    check_vertex(v, g.n_);
    word_t* rv = g.row_mut(v);
    for (int wi = 0; wi < g.words_; ++wi) rv[wi] ^= g.word_mask(wi);
    rv[v / kWordBits] &= ~(word_t{1} << (v % kWordBits));
    const word_t bv = word_t{1} << (v % kWordBits);
    for (int w = 0; w < g.n_; ++w)
        if (w != v) g.row_mut(w)[v / kWordBits] ^= bv;
}

/// Replace N(v) by the symmetric difference N(v) xor N(u), minus v itself.
inline void relative_mutate_inplace(Graph& g, int v, int u) {
    check_vertex(v, g.n_);
    check_vertex(u, g.n_);
    if (u == v) throw precondition_error("relative mutation needs two distinct vertices");
    word_t* rv = g.row_mut(v);
    const word_t* ru = g.row(u);
    for (int wi = 0; wi < g.words_; ++wi) rv[wi] ^= ru[wi];
    rv[v / kWordBits] &= ~(word_t{1} << (v % kWordBits));
    // the column of v changes exactly where the row of v changed
    const word_t bv = word_t{1} << (v % kWordBits);
    for (int wi = 0; wi < g.words_; ++wi) {
        word_t diff = ru[wi];
        if (wi == v / kWordBits) diff &= ~bv;
        while (diff) {
            const int w = wi * kWordBits + std::countr_zero(diff);
            diff &= diff - 1;
            g.row_mut(w)[v / kWordBits] ^= bv;
        }
    }
}

}  // namespace detail

inline Graph mutate(const Graph& g, int v) {
    Graph out = g;
    detail::mutate_inplace(out, v);
    return out;
}

inline Graph relative_mutate(const Graph& g, int v, int u) {
    Graph out = g;
    detail::relative_mutate_inplace(out, v, u);
    return out;
}

/// Category-preserving wrapper: relative mutation is only admissible when
/// the graph has an isolated vertex distinct from both v and u.
inline Graph checked_relative_mutate(const Graph& g, int v, int u) {
    detail::check_vertex(v, g.vertex_count());
    detail::check_vertex(u, g.vertex_count());
    bool witness = false;
    for (int w = 0; w < g.vertex_count() && !witness; ++w)
        witness = w != v && w != u && g.degree(w) == 0;
    if (!witness)
        throw precondition_error(
            "relative mutation needs an isolated vertex distinct from both endpoints");
    return relative_mutate(g, v, u);
}

inline bool is_isolated_edge(const Graph& g, int v, int w) {
    detail::check_vertex(v, g.vertex_count());
    detail::check_vertex(w, g.vertex_count());
    return v != w && g.has_edge(v, w) && g.degree(v) == 1 && g.degree(w) == 1;
}

/// Delete both endpoints of an isolated edge (with compact relabeling).
inline Relabeling knoerrer_reduce(const Graph& g, int v, int w) {
    if (!is_isolated_edge(g, v, w))
        throw precondition_error("not an isolated edge: " + std::to_string(v + 1) + " " +
                                 std::to_string(w + 1));
    return remove_vertices(g, VertexSet(g.vertex_count(), {v, w}));
}

/// Delete one of two distinct isolated vertices; v is removed, w kept.  The
/// caller accounts for the doubling with multiplier 2 in traces.
inline Relabeling two_points_reduce(const Graph& g, int v, int w) {
    detail::check_vertex(v, g.vertex_count());
    detail::check_vertex(w, g.vertex_count());
    if (v == w) throw precondition_error("two points reduction needs two distinct vertices");
    if (g.degree(v) != 0 || g.degree(w) != 0)
        throw precondition_error("not isolated: both vertices must have empty neighborhoods");
    return remove_vertices(g, VertexSet(g.vertex_count(), {v}));
}

enum class OpKind { Mutate, RelativeMutate, Knoerrer, TwoPoints };

/// One graph operation.  Vertex labels refer to the graph state at the
/// moment of application (reductions relabel compactly, so later steps use
/// the new labels).
struct Operation {
    OpKind kind = OpKind::Mutate;
    int v = -1;  // mutation target / knoerrer endpoint / removed vertex
    int u = -1;  // relative-mutation source / knoerrer endpoint / kept vertex

    static Operation make_mutate(int v) { return {OpKind::Mutate, v, -1}; }
    static Operation make_relative_mutate(int v, int u) { return {OpKind::RelativeMutate, v, u}; }
    static Operation make_knoerrer(int v, int w) { return {OpKind::Knoerrer, v, w}; }
    static Operation make_two_points(int removed, int kept) {
        return {OpKind::TwoPoints, removed, kept};
    }

    bool operator==(const Operation&) const = default;
};

struct TraceStep {
    Operation op;
    int multiplier = 1;  // 2 exactly on two-points steps

    bool operator==(const TraceStep&) const = default;
};

struct ReductionTrace {
    Graph initial;
    std::vector<TraceStep> steps;
    Graph final_graph;

    bool operator==(const ReductionTrace&) const = default;
};

struct ReplayResult {
    Graph graph;
    int two_points_steps = 0;  // accumulated multiplier is 2^two_points_steps
};

/// Apply the operations in order, enforcing each step's precondition.
inline ReplayResult replay_ops(const Graph& initial, const std::vector<TraceStep>& steps) {
    ReplayResult out{initial, 0};
    for (std::size_t k = 0; k < steps.size(); ++k) {
        const Operation& op = steps[k].op;
        try {
            switch (op.kind) {
                case OpKind::Mutate:
                    detail::mutate_inplace(out.graph, op.v);
                    break;
                case OpKind::RelativeMutate:
                    detail::relative_mutate_inplace(out.graph, op.v, op.u);
                    break;
                case OpKind::Knoerrer:
                    out.graph = knoerrer_reduce(out.graph, op.v, op.u).graph;
                    break;
                case OpKind::TwoPoints:
                    out.graph = two_points_reduce(out.graph, op.v, op.u).graph;
                    ++out.two_points_steps;
                    break;
            }
        } catch (const precondition_error& e) {
            throw precondition_error("inapplicable step " + std::to_string(k + 1) + ": " +
                                     e.what());
        }
    }
    return out;
}

inline ReplayResult replay(const ReductionTrace& trace) {
    return replay_ops(trace.initial, trace.steps);
}

/// Build a trace from an operation list: multipliers are assigned from the
/// step kinds and the final graph is computed by replay.
inline ReductionTrace make_trace(const Graph& initial, const std::vector<Operation>& ops) {
    ReductionTrace trace;
    trace.initial = initial;
    trace.steps.reserve(ops.size());
    for (const Operation& op : ops)
        trace.steps.push_back({op, op.kind == OpKind::TwoPoints ? 2 : 1});
    trace.final_graph = replay_ops(initial, trace.steps).graph;
    return trace;
}

/// Mutate at every member of the original N(v) in ascending order; in the
/// result v is isolated.  Already-isolated v yields an empty operation list.
inline std::pair<Graph, std::vector<Operation>> isolate_vertex(const Graph& g, int v) {
    detail::check_vertex(v, g.vertex_count());
    Graph out = g;
    std::vector<Operation> ops;
    for (int u : neighborhood(g, v).to_vector()) {
        detail::mutate_inplace(out, u);
        ops.push_back(Operation::make_mutate(u));
    }
    return {std::move(out), std::move(ops)};
}

}  // namespace skewq
