#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <string>

namespace qpb2 {

using bigint = boost::multiprecision::cpp_int;

/* Exponent triple of one monomial $q^m y_1^{r_1} y_2^{r_2}$. Ordered
 * lexicographically, which fixes the serialization order everywhere. */
struct Key {
    int m;
    int r1;
    int r2;
    auto operator<=>(const Key&) const = default;
};

/* Element of $\mathbb{Z}[[q, y_1, y_2]]$ truncated by total q-degree: terms
 * with q-exponent > qmax are dropped. Canonical sparse form: no zero
 * coefficient is ever stored, all exponents are nonnegative. The y-degrees
 * need no truncation of their own because every series handled here counts
 * monomials whose q-degree dominates a positive multiple of the y-degrees. */
struct TruncatedSeries {
    int qmax = 0;
    std::map<Key, bigint> coeffs;
};

TruncatedSeries one(int qmax);

/* coefficient lookup; absent keys are 0 */
bigint coeff(const TruncatedSeries& s, Key k);

/* s += c * q^{k.m} y1^{k.r1} y2^{k.r2}, keeping the canonical form */
void add_term(TruncatedSeries& s, Key k, const bigint& c);

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries negate(const TruncatedSeries& a);
TruncatedSeries subtract(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/* multiply by the geometric series $1/(1 - q^m y_1^{a_1} y_2^{a_2})$, m >= 1 */
TruncatedSeries mul_geometric(const TruncatedSeries& a, int m, int a1, int a2);

/* multiply by $1/(q)_r = \prod_{j=1}^{r} 1/(1-q^j)$; r = 0 is the identity */
TruncatedSeries mul_inv_qpochhammer(const TruncatedSeries& a, int r);

/* exact agreement of all coefficients with q-exponent <= d */
bool eq_upto(const TruncatedSeries& a, const TruncatedSeries& b, int d);

/* Renderers for a coefficient map (shared by series and graded-dimension
 * tables). Text: terms sorted by (m, r1, r2), monomials like q^2*y1*y2^3 with
 * unit exponents elided. JSON: list of {m, r1, r2, coeff} records with the
 * coefficient as a decimal string. CSV: header m,r1,r2,coeff then rows. */
std::string render_text(const std::map<Key, bigint>& coeffs);
std::string render_json(const std::map<Key, bigint>& coeffs);
std::string render_csv(const std::map<Key, bigint>& coeffs);

}  // namespace qpb2
