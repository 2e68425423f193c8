#pragma once

#include "qpb2/series.hpp"

namespace qpb2 {

/* Graded dimensions: (weight m, y1-degree r1, y2-degree r2) -> dim of the
 * homogeneous subspace. Absent keys mean dimension 0. Shares the coefficient
 * map shape (and hence the renderers) with TruncatedSeries. */
using GradedDimTable = std::map<Key, bigint>;

/* the table read as its generating function, truncated at qmax */
TruncatedSeries to_series(const GradedDimTable& t, int qmax);

}  // namespace qpb2
