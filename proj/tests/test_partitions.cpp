#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "qpb2/partitions.hpp"

using namespace qpb2;

TEST_CASE("is_partition accepts weakly decreasing positive parts") {
    CHECK(is_partition({}));
    CHECK(is_partition({5}));
    CHECK(is_partition({4, 3, 3, 2}));
    CHECK(is_partition({1, 1, 1}));
    CHECK_FALSE(is_partition({3, 4}));
    CHECK_FALSE(is_partition({2, 0}));
    CHECK_FALSE(is_partition({-1}));
}

TEST_CASE("conjugate on pinned examples") {
    CHECK(conjugate({4, 3, 3, 2}) == Partition{4, 4, 3, 1});
    CHECK(conjugate({4, 3, 2, 1}) == Partition{4, 3, 2, 1});
    CHECK(conjugate({}) == Partition{});
    CHECK(conjugate({1, 1, 1, 1}) == Partition{4});
    CHECK(conjugate({4}) == Partition{1, 1, 1, 1});
}

TEST_CASE("conjugate is an involution on every partition of n <= 20") {
    for (int n = 0; n <= 20; ++n) {
        for (const auto& p : partitions_of(n)) {
            Partition c = conjugate(p);
            CHECK(is_partition(c));
            CHECK(psum(c) == n);
            CHECK(conjugate(c) == p);
        }
    }
}

TEST_CASE("conjugate swaps largest part and length") {
    for (int n = 1; n <= 15; ++n) {
        for (const auto& p : partitions_of(n)) {
            Partition c = conjugate(p);
            CHECK(c.size() == static_cast<size_t>(p[0]));
            CHECK(c[0] == static_cast<int>(p.size()));
        }
    }
}

TEST_CASE("partitions_of(4) in lexicographically descending order") {
    std::vector<Partition> want = {
        {4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    CHECK(partitions_of(4) == want);
}

TEST_CASE("partitions_of respects max_part and max_len") {
    CHECK(partitions_of(4, 2) ==
          std::vector<Partition>{{2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    CHECK(partitions_of(4, no_cap, 2) ==
          std::vector<Partition>{{4}, {3, 1}, {2, 2}});
    CHECK(partitions_of(4, 2, 2) == std::vector<Partition>{{2, 2}});
    CHECK(partitions_of(5, 3, 2) == std::vector<Partition>{{3, 2}});
    CHECK(partitions_of(0) == std::vector<Partition>{{}});
    CHECK(partitions_of(3, 0).empty());
    CHECK(partitions_of(3, no_cap, 0).empty());
    CHECK(partitions_of(0, 0, 0) == std::vector<Partition>{{}});
}

/* p(n) for n = 0..20 */
static const long long pn[] = {1,  1,  2,   3,   5,   7,   11,  15,  22,  30, 42,
                               56, 77, 101, 135, 176, 231, 297, 385, 490, 627};

TEST_CASE("partition counts match the classical table") {
    for (int n = 0; n <= 20; ++n) {
        auto all = partitions_of(n);
        CHECK(static_cast<long long>(all.size()) == pn[n]);
        std::set<Partition> distinct(all.begin(), all.end());
        CHECK(distinct.size() == all.size());
        for (const auto& p : all) {
            CHECK(is_partition(p));
            CHECK(psum(p) == n);
        }
    }
}

TEST_CASE("caps filter exactly") {
    for (int n = 0; n <= 12; ++n) {
        auto all = partitions_of(n);
        for (int cap = 0; cap <= 6; ++cap) {
            size_t by_part = 0, by_len = 0;
            for (const auto& p : all) {
                if (p.empty() || p[0] <= cap) ++by_part;
                if (static_cast<int>(p.size()) <= cap) ++by_len;
            }
            CHECK(partitions_of(n, cap).size() == by_part);
            CHECK(partitions_of(n, no_cap, cap).size() == by_len);
        }
    }
}

TEST_CASE("invalid arguments are rejected") {
    CHECK_THROWS_AS(partitions_of(-1), std::invalid_argument);
    CHECK_THROWS_AS(partitions_of(3, -2), std::invalid_argument);
    CHECK_THROWS_AS(partitions_of(3, 2, -1), std::invalid_argument);
}
