#pragma once

#include <optional>
#include <string>

#include "qpb2/partitions.hpp"
#include "qpb2/table.hpp"

namespace qpb2 {

/* Dual-charge data ($r_i^{(s)}$ rows, weakly decreasing, zero-padded on
 * demand beyond the stored length). The conjugate view of a charge-type. */
struct DualChargePair {
    Partition color1;
    Partition color2;
};

/* The quadratic exponent
 *   sum_s (r_1^{(s)})^2 + sum_t (r_2^{(t)})^2
 *     - sum_{s>=1} r_1^{(s)} (r_2^{(2s-1)} + r_2^{(2s)}).
 * Always >= max(r_1, ceil(r_2/2)): per s, with x = r_1^{(s)}, a, b the two
 * paired color-2 rows and y = a+b, the summand x^2 + a^2 + b^2 - xy exceeds
 * both x and y/2 (cases y <= 2 directly; y >= 3 since a^2+b^2 >= y^2/2 and
 * the quadratics x^2 - xy + y^2/2 - x, x^2 - xy + y^2/2 - y/2 have negative
 * discriminants). Hence terms with q-degree <= qmax have r_1 <= qmax and
 * r_2 <= 2 qmax -- the iteration window used by the sums below. */
long long fermionic_exponent(const DualChargePair& d);

/* Fermionic sum for the N-side character: over all dual-charge pairs,
 *   q^{exponent} y_1^{r_1} y_2^{r_2}
 *     * prod_s 1/(q)_{r_1^{(s)} - r_1^{(s+1)}} * prod_t 1/(q)_{...},
 * the last factor of each product being 1/(q)_{r^{(last)}}. */
TruncatedSeries ch_WN_fermionic(int qmax);
TruncatedSeries ch_WN_fermionic_serial(int qmax);

/* the same with row counts capped at k (color 1) and 2k (color 2) */
TruncatedSeries ch_WL_fermionic(int k, int qmax);
TruncatedSeries ch_WL_fermionic_serial(int k, int qmax);

/* Euler-product character of the N side:
 * prod_{m>0} 1/((1-q^m y1)(1-q^m y2)(1-q^m y1 y2)(1-q^m y1 y2^2)). */
TruncatedSeries ch_WN_product(int qmax);

/* Sensitivity hooks for the verifier's own tests: the cross term gets +delta
 * whenever pairing s0 is active (both factors nonzero), resp. pairing s is
 * computed against the shifted rows (r_2^{(2s)} + r_2^{(2s+1)}). Both must
 * break the identity -- a verifier that still reports equality is vacuous. */
TruncatedSeries ch_WN_fermionic_mutated(int qmax, int pairing, int delta);
TruncatedSeries ch_WN_fermionic_shifted_cross(int qmax);

/* The three exponent identities tying a charge-type (position order, i.e.
 * weakly decreasing) to its dual:
 *   sum_{p,q} min{n_{p,2}, 2 n_{q,1}}                 = sum_s r_1^{(s)} (r_2^{(2s-1)} + r_2^{(2s)})
 *   sum_p (n_{p,1} + sum_{p'<p} 2 min{n_{p,1}, n_{p',1}}) = sum_s (r_1^{(s)})^2
 *   sum_p (n_{p,2} + sum_{p'<p} 2 min{n_{p,2}, n_{p',2}}) = sum_t (r_2^{(t)})^2 */
struct LemmaPairs {
    long long lhs[3];
    long long rhs[3];
    bool all_equal() const {
        return lhs[0] == rhs[0] && lhs[1] == rhs[1] && lhs[2] == rhs[2];
    }
};

LemmaPairs lemma41_check(const Partition& charge1, const Partition& charge2);

struct Discrepancy {
    Key key;
    bigint lhs;
    bigint rhs;
};

struct VerifyReport {
    int qmax = 0;
    bool equal = false;
    long long checked_coefficients = 0;
    std::optional<Discrepancy> first_discrepancy;
    long long wall_time_ms = 0;
};

/* product side vs fermionic side, coefficient by coefficient up to qmax */
VerifyReport verify_rr_identity(int qmax);

/* the comparison half of the verifier, reusable against any two series */
VerifyReport compare_series_report(int qmax, const TruncatedSeries& lhs,
                                   const TruncatedSeries& rhs);

std::string report_json(const VerifyReport& r);

}  // namespace qpb2
