#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "skewq/mutation.hpp"

namespace skewq {

/// Result of the constructive reduction: the input graph is equivalent to
/// the disjoint union of `alpha` isolated edges and `beta` isolated vertices
/// (2*alpha + beta = n, beta >= 1).  `to_canonical` is a vertex bijection
/// with relabel(trace.final_graph, to_canonical) == canonical_disjoint(alpha, beta).
struct NormalForm {
    int alpha = 0;
    int beta = 0;
    ReductionTrace trace;
    std::vector<int> to_canonical;
};

/// Reduce to normal form with mutations followed by relative mutations.
///
/// Phase 1 isolates a pivot vertex (minimum degree, smallest label on ties)
/// by mutating at each of its original neighbors in ascending order.
///
/// Phase 2 grows a processed zone, kept a disjoint union of isolated edges
/// and isolated vertices at all times, absorbing the remaining vertices in
/// ascending order.  For each new vertex v, its edges into the zone are
/// broken with relative mutations:
///   - zone edge xy with v adjacent to exactly one endpoint: mutate v with
///     respect to the other endpoint;
///   - zone edge xy with v adjacent to both: mutate v with respect to x,
///     then y (x < y);
///   - zone-isolated neighbors u1 < u2 < ... < ur of v: mutate each of
///     u2..ur with respect to u1, after which v--u1 is the only edge left
///     and v pairs up with u1.  With no such neighbor, v joins the zone
///     isolated.
/// The pivot never gains an edge, so beta >= 1 throughout.
inline NormalForm reduce_to_normal_form(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw precondition_error("reduction needs at least one vertex");

    Graph work = g;
    std::vector<TraceStep> steps;

    int pivot = 0;
    for (int v = 1; v < n; ++v)
        if (work.degree(v) < work.degree(pivot)) pivot = v;
    for (int u : neighborhood(work, pivot).to_vector()) {
        detail::mutate_inplace(work, u);
        steps.push_back({Operation::make_mutate(u), 1});
    }

    std::vector<std::pair<int, int>> pairs;  // zone edges, x < y, ordered by x
    std::vector<int> iso = {pivot};          // zone-isolated vertices, ascending

    auto emit = [&](int v, int u) {
        detail::relative_mutate_inplace(work, v, u);
        steps.push_back({Operation::make_relative_mutate(v, u), 1});
    };

    for (int v = 0; v < n; ++v) {
        if (v == pivot) continue;

        std::vector<int> one_sided, two_sided_x, two_sided_y;
        for (auto [x, y] : pairs) {
            const bool ax = work.has_edge(v, x);
            const bool ay = work.has_edge(v, y);
            if (ax && !ay) one_sided.push_back(y);
            if (!ax && ay) one_sided.push_back(x);
            if (ax && ay) {
                two_sided_x.push_back(x);
                two_sided_y.push_back(y);
            }
        }
        std::vector<int> adj_iso;
        for (int u : iso)
            if (work.has_edge(v, u)) adj_iso.push_back(u);

        for (int other : one_sided) emit(v, other);
        for (std::size_t i = 0; i < two_sided_x.size(); ++i) {
            emit(v, two_sided_x[i]);
            emit(v, two_sided_y[i]);
        }
        for (std::size_t j = 1; j < adj_iso.size(); ++j) emit(adj_iso[j], adj_iso[0]);

        if (adj_iso.empty()) {
            iso.insert(std::lower_bound(iso.begin(), iso.end(), v), v);
        } else {
            const int mate = adj_iso[0];
            iso.erase(std::find(iso.begin(), iso.end(), mate));
            const std::pair<int, int> p = std::minmax(v, mate);
            pairs.insert(std::lower_bound(pairs.begin(), pairs.end(), p), p);
        }
    }

    NormalForm nf;
    nf.alpha = static_cast<int>(pairs.size());
    nf.beta = static_cast<int>(iso.size());
    nf.to_canonical.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        nf.to_canonical[static_cast<std::size_t>(pairs[i].first)] = static_cast<int>(2 * i);
        nf.to_canonical[static_cast<std::size_t>(pairs[i].second)] = static_cast<int>(2 * i + 1);
    }
    for (std::size_t j = 0; j < iso.size(); ++j)
        nf.to_canonical[static_cast<std::size_t>(iso[j])] = 2 * nf.alpha + static_cast<int>(j);
    nf.trace = ReductionTrace{g, std::move(steps), std::move(work)};
    return nf;
}

}  // namespace skewq
