#pragma once

#include "qpb2/table.hpp"

namespace qpb2 {

/* The positive roots of B2 with their (y1, y2)-degrees:
 * alpha1 -> (1,0), alpha2 -> (0,1), alpha1+alpha2 -> (1,1),
 * theta = alpha1+2alpha2 -> (1,2). */
struct RootDatum {
    int a1;
    int a2;
};

inline constexpr RootDatum positive_roots[4] = {{1, 0}, {0, 1}, {1, 1}, {1, 2}};

/* Ground truth for the N-side characters: graded dimensions of the span of
 * PBW monomials in the four root generators with modes <= -1, graded by
 * (sum of |mode|, total y1-degree, total y2-degree), for weights <= qmax.
 * Computed naively, one root at a time, via exact-part-count partition DP --
 * deliberately independent of the series and enumeration machinery. */
GradedDimTable pbw_graded_dims(int qmax);

}  // namespace qpb2
