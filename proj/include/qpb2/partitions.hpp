#pragma once

#include <limits>
#include <vector>

namespace qpb2 {

/* A partition is a weakly decreasing list of positive parts; the empty
 * partition is {}. Charge-types and dual-charge-types are partitions of the
 * total charge $r_i$ of one color, and the two are conjugates of each other. */
using Partition = std::vector<int>;

/* sentinel for "no cap" in partitions_of */
inline constexpr int no_cap = std::numeric_limits<int>::max();

bool is_partition(const Partition& p);

int psum(const Partition& p);

/* Conjugate partition: part $j$ of the result counts the parts $\geq j$.
 * An involution; swaps largest part and length. */
Partition conjugate(const Partition& p);

/* All partitions of n with parts <= max_part and length <= max_len, each
 * exactly once, in lexicographically descending order. */
std::vector<Partition> partitions_of(int n, int max_part = no_cap,
                                     int max_len = no_cap);

}  // namespace qpb2
