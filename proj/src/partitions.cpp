#include "qpb2/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace qpb2 {

bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

int psum(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

Partition conjugate(const Partition& p) {
    Partition c;
    if (p.empty()) return c;
    c.reserve(p[0]);
    for (int j = 1; j <= p[0]; ++j) {
        int n = 0;
        for (int x : p) {
            if (x >= j)
                ++n;
            else
                break;
        }
        c.push_back(n);
    }
    return c;
}

namespace {

void rec(int rem, int max_part, int slots, Partition& acc,
         std::vector<Partition>& out) {
    if (rem == 0) {
        out.push_back(acc);
        return;
    }
    if (slots == 0) return;
    /* largest admissible part first gives lexicographically descending order */
    for (int part = std::min(rem, max_part); part >= 1; --part) {
        acc.push_back(part);
        rec(rem - part, part, slots - 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_part, int max_len) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
    if (max_part < 0 || max_len < 0)
        throw std::invalid_argument("partitions_of: caps must be >= 0");
    std::vector<Partition> out;
    Partition acc;
    rec(n, std::min(max_part, n), std::min(max_len, n), acc, out);
    return out;
}

}  // namespace qpb2
