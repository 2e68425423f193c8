#include "qpb2/oracle.hpp"

#include <stdexcept>
#include <vector>

namespace qpb2 {

GradedDimTable pbw_graded_dims(int qmax) {
    if (qmax < 0) throw std::invalid_argument("pbw_graded_dims: qmax >= 0");

    /* pe[j][t] = partitions of j into exactly t parts:
     * pe(j,t) = pe(j-1,t-1) + pe(j-t,t) (peel a part 1 / subtract 1 from all) */
    std::vector<std::vector<bigint>> pe(qmax + 1,
                                        std::vector<bigint>(qmax + 1, 0));
    pe[0][0] = 1;
    for (int j = 1; j <= qmax; ++j)
        for (int t = 1; t <= j; ++t)
            pe[j][t] = pe[j - 1][t - 1] + pe[j - t][t];

    /* One root at a time: a root of degree (a1, a2) contributes, for every
     * partition of j into t parts (its modes, all <= -1), the shift
     * (j, t*a1, t*a2). */
    GradedDimTable table;
    table[{0, 0, 0}] = 1;
    for (const auto& root : positive_roots) {
        GradedDimTable next;
        for (const auto& [k, c] : table) {
            for (int j = 0; k.m + j <= qmax; ++j) {
                for (int t = 0; t <= j; ++t) {
                    if (pe[j][t] == 0) continue;
                    next[{k.m + j, k.r1 + t * root.a1, k.r2 + t * root.a2}] +=
                        c * pe[j][t];
                }
            }
        }
        table = std::move(next);
    }
    return table;
}

}  // namespace qpb2
