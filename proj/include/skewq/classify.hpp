#pragma once

#include <cstdint>
#include <string>

#include "skewq/bitmatrix.hpp"
#include "skewq/normal_form.hpp"

namespace skewq {

inline std::string category_descriptor(int r) {
    if (r == 0) return "D^b(mod k)";
    if (r <= 62) return "D^b(mod k^" + std::to_string(std::uint64_t{1} << r) + ")";
    return "D^b(mod k^(2^" + std::to_string(r) + "))";
}

/// Structure of the stable category attached to a sign graph.  The category
/// is equivalent to the bounded derived category of modules over a product
/// of 2^r copies of the base field; there are 2^r indecomposable
/// non-projective objects up to isomorphism and degree shift.
struct Classification {
    int r = 0;
    int alpha = 0;
    int beta = 0;
    int indecomposables_exponent = 0;  // the count is 2^r
    std::string category;              // e.g. "D^b(mod k^4)"
    bool is_isolated_singularity = true;
    ReductionTrace trace;
};

/// Compute r by two independent routes -- the GF(2) nullity of the bordered
/// adjacency matrix, and beta - 1 from the graph reduction -- and insist
/// they agree.  A disagreement is an implementation bug, never bad input.
inline Classification classify(const Graph& g) {
    if (g.vertex_count() < 1) throw precondition_error("classification needs at least one vertex");
    NormalForm nf = reduce_to_normal_form(g);
    const int via_reduction = nf.beta - 1;
    const int via_kernel = nullity(bordered_matrix(g));
    if (via_reduction != via_kernel)
        throw inconsistency_error("classification routes disagree: reduction gives r=" +
                                  std::to_string(via_reduction) + ", kernel gives r=" +
                                  std::to_string(via_kernel));
    Classification c;
    c.r = via_kernel;
    c.alpha = nf.alpha;
    c.beta = nf.beta;
    c.indecomposables_exponent = c.r;
    c.category = category_descriptor(c.r);
    c.is_isolated_singularity = true;
    c.trace = std::move(nf.trace);
    return c;
}

inline int indecomposable_count_exponent(const Graph& g) { return classify(g).r; }

}  // namespace skewq
