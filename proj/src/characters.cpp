#include "qpb2/characters.hpp"

#include <algorithm>
#include <chrono>
#include <json.hpp>
#include <stdexcept>
#include <vector>

#include "qpb2/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qpb2 {

namespace {

long long row(const Partition& p, int s) {
    return s >= 1 && s <= static_cast<int>(p.size()) ? p[s - 1] : 0;
}

}  // namespace

long long fermionic_exponent(const DualChargePair& d) {
    long long e = 0;
    for (int x : d.color1) e += static_cast<long long>(x) * x;
    for (int x : d.color2) e += static_cast<long long>(x) * x;
    int smax = std::max(static_cast<int>(d.color1.size()),
                        (static_cast<int>(d.color2.size()) + 1) / 2);
    for (int s = 1; s <= smax; ++s)
        e -= row(d.color1, s) * (row(d.color2, 2 * s - 1) + row(d.color2, 2 * s));
    return e;
}

namespace {

/* coefficients of prod_s 1/(q)_{l_s - l_{s+1}} up to q^qmax, the successor
 * of the last row being 0 (so the last factor is 1/(q)_{l_last}); each
 * factor 1/(1-q^j) is a running prefix sum with stride j */
std::vector<bigint> inv_poch_row(const Partition& l, int qmax) {
    std::vector<bigint> v(qmax + 1);
    v[0] = 1;
    for (size_t i = 0; i < l.size(); ++i) {
        int d = l[i] - (i + 1 < l.size() ? l[i + 1] : 0);
        for (int j = 1; j <= d; ++j)
            for (int t = j; t <= qmax; ++t) v[t] += v[t - j];
    }
    return v;
}

struct DualRow {
    Partition l;
    int size;
    long long sq;
    std::vector<bigint> poch;
};

std::vector<DualRow> rows_upto(int rmax, int len_cap, int qmax) {
    std::vector<DualRow> rows;
    for (int r = 0; r <= rmax; ++r) {
        for (const auto& l : partitions_of(r, no_cap, len_cap)) {
            DualRow row;
            row.l = l;
            row.size = r;
            row.sq = 0;
            for (int x : l) row.sq += static_cast<long long>(x) * x;
            row.poch = inv_poch_row(l, qmax);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

enum class Cross { canonical, shifted };

long long cross_term(const Partition& l1, const Partition& l2, Cross variant,
                     int pairing, int delta) {
    long long x = 0;
    int smax = std::max(static_cast<int>(l1.size()),
                        (static_cast<int>(l2.size()) + 1) / 2 + 1);
    for (int s = 1; s <= smax; ++s) {
        long long a = row(l1, s);
        long long b = variant == Cross::canonical
                          ? row(l2, 2 * s - 1) + row(l2, 2 * s)
                          : row(l2, 2 * s) + row(l2, 2 * s + 1);
        long long t = a * b;
        if (s == pairing && a > 0 && b > 0) t += delta;
        x += t;
    }
    return x;
}

/* The generic fermionic sum. len1/len2 cap the number of rows (no_cap for
 * the N-side). pairing/delta and the cross variant are the sensitivity
 * hooks; a genuine character uses (canonical, 0, 0). */
TruncatedSeries fermionic_sum(int qmax, int len1, int len2, Cross variant,
                              int pairing, int delta, bool parallel) {
    if (qmax < 0) throw std::invalid_argument("fermionic sum: qmax >= 0");
    auto rows1 = rows_upto(qmax, len1, qmax);
    auto rows2 = rows_upto(2 * qmax, len2, qmax);
    bool pristine = variant == Cross::canonical && pairing == 0;

    int n1 = static_cast<int>(rows1.size());
    int nt = 1;
#ifdef _OPENMP
    if (parallel) nt = omp_get_max_threads();
#endif
    std::vector<TruncatedSeries> parts(nt);
    for (auto& p : parts) p.qmax = qmax;

#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int i = 0; i < n1; ++i) {
        int tid = 0;
#ifdef _OPENMP
        if (parallel) tid = omp_get_thread_num();
#endif
        TruncatedSeries& acc = parts[tid];
        const DualRow& a = rows1[i];
        for (const DualRow& b : rows2) {
            long long e = a.sq + b.sq -
                          cross_term(a.l, b.l, variant, pairing, delta);
            /* completeness guard for the r1 <= qmax, r2 <= 2 qmax window:
             * the exponent dominates max(r1, ceil(r2/2)) (see header) */
            if (pristine &&
                e < std::max<long long>(a.size, (b.size + 1) / 2))
                throw std::logic_error("fermionic exponent bound violated");
            if (e > qmax) continue;
            if (e < 0)
                throw std::domain_error(
                    "mutated cross term drove an exponent negative");
            int room = qmax - static_cast<int>(e);
            for (int d1 = 0; d1 <= room; ++d1) {
                if (a.poch[d1] == 0) continue;
                for (int d2 = 0; d2 + d1 <= room; ++d2) {
                    if (b.poch[d2] == 0) continue;
                    add_term(acc,
                             {static_cast<int>(e) + d1 + d2, a.size, b.size},
                             a.poch[d1] * b.poch[d2]);
                }
            }
        }
    }

    TruncatedSeries out;
    out.qmax = qmax;
    for (const auto& p : parts)
        for (const auto& [k, v] : p.coeffs) add_term(out, k, v);
    return out;
}

}  // namespace

TruncatedSeries ch_WN_fermionic(int qmax) {
    return fermionic_sum(qmax, no_cap, no_cap, Cross::canonical, 0, 0, true);
}

TruncatedSeries ch_WN_fermionic_serial(int qmax) {
    return fermionic_sum(qmax, no_cap, no_cap, Cross::canonical, 0, 0, false);
}

TruncatedSeries ch_WL_fermionic(int k, int qmax) {
    if (k < 1) throw std::invalid_argument("ch_WL_fermionic: k must be >= 1");
    return fermionic_sum(qmax, k, 2 * k, Cross::canonical, 0, 0, true);
}

TruncatedSeries ch_WL_fermionic_serial(int k, int qmax) {
    if (k < 1) throw std::invalid_argument("ch_WL_fermionic: k must be >= 1");
    return fermionic_sum(qmax, k, 2 * k, Cross::canonical, 0, 0, false);
}

TruncatedSeries ch_WN_product(int qmax) {
    TruncatedSeries s = one(qmax);
    for (int m = 1; m <= qmax; ++m)
        for (const auto& root : positive_roots)
            s = mul_geometric(s, m, root.a1, root.a2);
    return s;
}

TruncatedSeries ch_WN_fermionic_mutated(int qmax, int pairing, int delta) {
    if (pairing < 1)
        throw std::invalid_argument("mutation pairing must be >= 1");
    return fermionic_sum(qmax, no_cap, no_cap, Cross::canonical, pairing,
                         delta, false);
}

TruncatedSeries ch_WN_fermionic_shifted_cross(int qmax) {
    return fermionic_sum(qmax, no_cap, no_cap, Cross::shifted, 0, 0, false);
}

LemmaPairs lemma41_check(const Partition& charge1, const Partition& charge2) {
    if (!is_partition(charge1) || !is_partition(charge2))
        throw std::invalid_argument("lemma41_check: inputs must be partitions");
    Partition d1 = conjugate(charge1);
    Partition d2 = conjugate(charge2);
    LemmaPairs P{};

    for (int n2 : charge2)
        for (int n1 : charge1) P.lhs[0] += std::min(n2, 2 * n1);
    int smax = std::max(static_cast<int>(d1.size()),
                        (static_cast<int>(d2.size()) + 1) / 2);
    for (int s = 1; s <= smax; ++s)
        P.rhs[0] += row(d1, s) * (row(d2, 2 * s - 1) + row(d2, 2 * s));

    auto same_color = [](const Partition& c, const Partition& d, long long& lhs,
                         long long& rhs) {
        for (size_t p = 0; p < c.size(); ++p) {
            lhs += c[p];
            for (size_t q = 0; q < p; ++q) lhs += 2 * std::min(c[p], c[q]);
        }
        for (int x : d) rhs += static_cast<long long>(x) * x;
    };
    same_color(charge1, d1, P.lhs[1], P.rhs[1]);
    same_color(charge2, d2, P.lhs[2], P.rhs[2]);
    return P;
}

VerifyReport compare_series_report(int qmax, const TruncatedSeries& lhs,
                                   const TruncatedSeries& rhs) {
    VerifyReport rep;
    rep.qmax = qmax;
    rep.equal = true;
    auto ia = lhs.coeffs.begin();
    auto ib = rhs.coeffs.begin();
    auto note = [&rep](Key k, const bigint& l, const bigint& r) {
        rep.equal = false;
        if (!rep.first_discrepancy) rep.first_discrepancy = {k, l, r};
    };
    while (ia != lhs.coeffs.end() || ib != rhs.coeffs.end()) {
        bool a_end = ia == lhs.coeffs.end();
        bool b_end = ib == rhs.coeffs.end();
        if (!a_end && (b_end || ia->first < ib->first)) {
            ++rep.checked_coefficients;
            note(ia->first, ia->second, 0);
            ++ia;
        } else if (!b_end && (a_end || ib->first < ia->first)) {
            ++rep.checked_coefficients;
            note(ib->first, 0, ib->second);
            ++ib;
        } else {
            ++rep.checked_coefficients;
            if (ia->second != ib->second)
                note(ia->first, ia->second, ib->second);
            ++ia;
            ++ib;
        }
    }
    return rep;
}

VerifyReport verify_rr_identity(int qmax) {
    auto t0 = std::chrono::steady_clock::now();
    TruncatedSeries lhs = ch_WN_product(qmax);
    TruncatedSeries rhs = ch_WN_fermionic(qmax);
    VerifyReport rep = compare_series_report(qmax, lhs, rhs);
    rep.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    return rep;
}

std::string report_json(const VerifyReport& r) {
    nlohmann::ordered_json j;
    j["qmax"] = r.qmax;
    j["equal"] = r.equal;
    j["checked_coefficients"] = r.checked_coefficients;
    if (r.first_discrepancy) {
        nlohmann::ordered_json d;
        d["m"] = r.first_discrepancy->key.m;
        d["r1"] = r.first_discrepancy->key.r1;
        d["r2"] = r.first_discrepancy->key.r2;
        d["lhs"] = r.first_discrepancy->lhs.str();
        d["rhs"] = r.first_discrepancy->rhs.str();
        j["first_discrepancy"] = std::move(d);
    }
    j["wall_time_ms"] = r.wall_time_ms;
    return j.dump();
}

}  // namespace qpb2
