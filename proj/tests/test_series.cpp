#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qpb2/partitions.hpp"
#include "qpb2/series.hpp"

using namespace qpb2;

static TruncatedSeries random_series(std::mt19937& rng, int qmax, int mcap) {
    std::uniform_int_distribution<int> dm(0, mcap), dr(0, 3), dc(-4, 4);
    std::uniform_int_distribution<int> dn(1, 8);
    TruncatedSeries s;
    s.qmax = qmax;
    int n = dn(rng);
    for (int i = 0; i < n; ++i)
        add_term(s, {dm(rng), dr(rng), dr(rng)}, dc(rng));
    return s;
}

/* evaluation at a point is a ring homomorphism; on polynomial data (all
 * q-degrees of the product below the truncation) it must commute with mul */
static bigint eval(const TruncatedSeries& s, int q, int u1, int u2) {
    bigint total = 0;
    for (const auto& [k, v] : s.coeffs) {
        bigint t = v;
        for (int i = 0; i < k.m; ++i) t *= q;
        for (int i = 0; i < k.r1; ++i) t *= u1;
        for (int i = 0; i < k.r2; ++i) t *= u2;
        total += t;
    }
    return total;
}

TEST_CASE("one and coeff") {
    TruncatedSeries s = one(5);
    CHECK(s.qmax == 5);
    CHECK(coeff(s, {0, 0, 0}) == 1);
    CHECK(coeff(s, {1, 0, 0}) == 0);
    CHECK(s.coeffs.size() == 1);
    CHECK_THROWS_AS(one(-1), std::invalid_argument);
}

TEST_CASE("add_term merges, cancels and truncates") {
    TruncatedSeries s = one(4);
    add_term(s, {2, 1, 0}, 3);
    add_term(s, {2, 1, 0}, -3);
    CHECK(coeff(s, {2, 1, 0}) == 0);
    CHECK(s.coeffs.size() == 1);  /* cancelled term is erased */
    add_term(s, {5, 0, 0}, 7);    /* beyond qmax: dropped */
    CHECK(s.coeffs.size() == 1);
    add_term(s, {4, 2, 2}, 0);    /* zero: dropped */
    CHECK(s.coeffs.size() == 1);
    CHECK_THROWS_AS(add_term(s, {-1, 0, 0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(add_term(s, {0, -1, 0}, 1), std::invalid_argument);
}

TEST_CASE("add and subtract against coefficientwise oracle") {
    std::mt19937 rng(20260818);
    for (int trial = 0; trial < 50; ++trial) {
        TruncatedSeries a = random_series(rng, 8, 8);
        TruncatedSeries b = random_series(rng, 8, 8);
        TruncatedSeries s = add(a, b);
        TruncatedSeries d = subtract(a, b);
        for (int m = 0; m <= 8; ++m)
            for (int r1 = 0; r1 <= 3; ++r1)
                for (int r2 = 0; r2 <= 3; ++r2) {
                    Key k{m, r1, r2};
                    CHECK(coeff(s, k) == coeff(a, k) + coeff(b, k));
                    CHECK(coeff(d, k) == coeff(a, k) - coeff(b, k));
                }
        CHECK(eq_upto(add(a, negate(a)), subtract(a, a), 8));
        CHECK(eq_upto(subtract(a, a), TruncatedSeries{8, {}}, 8));
    }
}

TEST_CASE("mul agrees with evaluation homomorphism on polynomial data") {
    std::mt19937 rng(4242);
    const int pts[5][3] = {{1, 1, 1}, {2, 1, 1}, {2, 3, 5}, {3, 2, 1}, {-2, 3, -1}};
    for (int trial = 0; trial < 40; ++trial) {
        TruncatedSeries a = random_series(rng, 8, 4);
        TruncatedSeries b = random_series(rng, 8, 4);
        TruncatedSeries p = mul(a, b);  /* degrees <= 4+4, nothing truncated */
        for (const auto& pt : pts)
            CHECK(eval(p, pt[0], pt[1], pt[2]) ==
                  eval(a, pt[0], pt[1], pt[2]) * eval(b, pt[0], pt[1], pt[2]));
    }
}

TEST_CASE("ring laws for mul") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 20; ++trial) {
        TruncatedSeries a = random_series(rng, 8, 8);
        TruncatedSeries b = random_series(rng, 8, 8);
        TruncatedSeries c = random_series(rng, 8, 8);
        CHECK(eq_upto(mul(a, b), mul(b, a), 8));
        CHECK(eq_upto(mul(mul(a, b), c), mul(a, mul(b, c)), 8));
        CHECK(eq_upto(mul(a, add(b, c)), add(mul(a, b), mul(a, c)), 8));
        CHECK(eq_upto(mul(a, one(8)), a, 8));
    }
}

TEST_CASE("mul truncates above qmax") {
    TruncatedSeries a;
    a.qmax = 8;
    add_term(a, {5, 0, 0}, 1);
    TruncatedSeries b;
    b.qmax = 8;
    add_term(b, {6, 0, 0}, 1);
    CHECK(mul(a, b).coeffs.empty());
}

TEST_CASE("usage errors on truncation mismatch") {
    TruncatedSeries a = one(4), b = one(5);
    CHECK_THROWS_AS(add(a, b), std::invalid_argument);
    CHECK_THROWS_AS(subtract(a, b), std::invalid_argument);
    CHECK_THROWS_AS(mul(a, b), std::invalid_argument);
    CHECK_THROWS_AS(eq_upto(a, b, 5), std::invalid_argument);
    CHECK_THROWS_AS(eq_upto(a, a, -1), std::invalid_argument);
}

TEST_CASE("mul_geometric satisfies its defining relation") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        TruncatedSeries a = random_series(rng, 10, 10);
        int m = 1 + trial % 4, a1 = trial % 3, a2 = (trial / 3) % 3;
        TruncatedSeries r = mul_geometric(a, m, a1, a2);
        /* r * (1 - q^m y1^a1 y2^a2) == a up to the truncation */
        TruncatedSeries g;
        g.qmax = 10;
        add_term(g, {0, 0, 0}, 1);
        add_term(g, {m, a1, a2}, -1);
        CHECK(eq_upto(mul(r, g), a, 10));
    }
    CHECK_THROWS_AS(mul_geometric(one(4), 0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(mul_geometric(one(4), 1, -1, 0), std::invalid_argument);
}

TEST_CASE("mul_geometric of 1 by q is the geometric series") {
    TruncatedSeries s = mul_geometric(one(6), 1, 0, 0);
    for (int m = 0; m <= 6; ++m) CHECK(coeff(s, {m, 0, 0}) == 1);
    CHECK(s.coeffs.size() == 7);
}

TEST_CASE("inverse q-Pochhammer counts partitions into at most r parts") {
    /* coefficient of q^j in 1/(q)_r = number of partitions of j with at
     * most r parts; cross-checked against the explicit enumerator */
    for (int r = 0; r <= 10; ++r) {
        TruncatedSeries s = mul_inv_qpochhammer(one(30), r);
        for (int j = 0; j <= 30; ++j) {
            bigint expect = partitions_of(j, no_cap, r).size();
            CHECK(coeff(s, {j, 0, 0}) == expect);
        }
    }
    CHECK_THROWS_AS(mul_inv_qpochhammer(one(4), -1), std::invalid_argument);
}

TEST_CASE("1/(q)_2 up to q^3") {
    TruncatedSeries s = mul_inv_qpochhammer(one(3), 2);
    CHECK(coeff(s, {0, 0, 0}) == 1);
    CHECK(coeff(s, {1, 0, 0}) == 1);
    CHECK(coeff(s, {2, 0, 0}) == 2);
    CHECK(coeff(s, {3, 0, 0}) == 2);
    CHECK(s.coeffs.size() == 4);
}

TEST_CASE("text rendering") {
    TruncatedSeries s;
    s.qmax = 4;
    CHECK(render_text(s.coeffs) == "0");
    add_term(s, {0, 0, 0}, 1);
    CHECK(render_text(s.coeffs) == "1");
    add_term(s, {1, 1, 0}, 1);
    add_term(s, {2, 0, 2}, 3);
    add_term(s, {2, 1, 1}, -2);
    CHECK(render_text(s.coeffs) == "1 + q*y1 + 3*q^2*y2^2 - 2*q^2*y1*y2");
    TruncatedSeries t;
    t.qmax = 2;
    add_term(t, {1, 0, 0}, -1);
    CHECK(render_text(t.coeffs) == "-q");
}

TEST_CASE("json and csv rendering") {
    TruncatedSeries s;
    s.qmax = 3;
    add_term(s, {0, 0, 0}, 1);
    add_term(s, {2, 1, 0}, -5);
    CHECK(render_json(s.coeffs) ==
          R"([{"m":0,"r1":0,"r2":0,"coeff":"1"},{"m":2,"r1":1,"r2":0,"coeff":"-5"}])");
    CHECK(render_csv(s.coeffs) == "m,r1,r2,coeff\n0,0,0,1\n2,1,0,-5\n");
}

TEST_CASE("terms are ordered lexicographically by (m, r1, r2)") {
    TruncatedSeries s;
    s.qmax = 5;
    add_term(s, {3, 0, 1}, 1);
    add_term(s, {1, 2, 0}, 1);
    add_term(s, {1, 0, 3}, 1);
    add_term(s, {1, 0, 2}, 1);
    std::vector<Key> keys;
    for (const auto& [k, v] : s.coeffs) keys.push_back(k);
    CHECK(keys == std::vector<Key>{{1, 0, 2}, {1, 0, 3}, {1, 2, 0}, {3, 0, 1}});
}
