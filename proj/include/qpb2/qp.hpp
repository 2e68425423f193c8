#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qpb2/partitions.hpp"
#include "qpb2/table.hpp"

namespace qpb2 {

/* One quasi-particle $x_{n\alpha_i}(m)$: color i in {1,2}, charge n >= 1,
 * energy -m. Color-1 energies always end up >= charge (their own difference
 * condition forces m <= -n); color-2 energies can be zero or negative when
 * color-1 quasi-particles are present, since the interaction term
 * $\sum_q \min\{2 n_{q,1}, n_{p,2}\}$ raises the color-2 mode bound. */
struct QuasiParticle {
    int color;
    int charge;
    int energy;
    int mode() const { return -energy; }
    auto operator<=>(const QuasiParticle&) const = default;
};

/* A monomial b = b(alpha2) b(alpha1) of quasi-particles. Per color, index 0
 * is position p = 1 (the rightmost factor, largest charge):
 * charges weakly decrease along the vector, and within a run of equal
 * charges modes weakly decrease along the vector. Monomials violating the
 * difference conditions are representable on purpose; check_conditions_*
 * report on them. */
struct QPMonomial {
    std::vector<QuasiParticle> color2;
    std::vector<QuasiParticle> color1;
    bool operator==(const QPMonomial&) const = default;
};

/* splits by color and canonicalizes the position order */
QPMonomial make_monomial(std::vector<QuasiParticle> qps);

enum class Rule {
    single_qp_bound,
    equal_charge_gap,
    color2_interaction_bound,
    charge_cap,
};

/* the binding inequality for one quasi-particle */
struct DiffConditionRecord {
    int color;
    int p;  // 1-based position
    int charge;
    int mode;
    long long bound;  // rhs of the binding bound on the mode (or the cap)
    bool satisfied;
    Rule rule;
};

struct DiffConditionReport {
    std::vector<DiffConditionRecord> records;
    bool passed = true;
    /* color-2 quasi-particles present with no color-1 ones: the interaction
     * sums above were all empty (the literal formula is still applied) */
    bool color2_without_color1 = false;
};

/* color-type (r2, r1): per-color charge totals, color 2 first */
std::pair<int, int> color_type(const QPMonomial& b);

/* conjugate of the charge multiset of one color */
Partition dual_charge_type(const QPMonomial& b, int color);

/* The four difference-condition families:
 *   m_{p,1} <= -n_{p,1} - sum_{p'<p} 2 min{n_{p,1}, n_{p',1}}
 *   m_{p+1,1} <= m_{p,1} - 2 n_{p,1}            if n_{p,1} = n_{p+1,1}
 *   m_{p,2} <= -n_{p,2} + sum_q min{2 n_{q,1}, n_{p,2}}
 *                       - sum_{p'<p} 2 min{n_{p,2}, n_{p',2}}
 *   m_{p+1,2} <= m_{p,2} - 2 n_{p,2}            if n_{p,2} = n_{p+1,2}   */
DiffConditionReport check_conditions_N(const QPMonomial& b);

/* the same plus the level caps: color-1 charges <= k, color-2 charges <= 2k */
DiffConditionReport check_conditions_L(const QPMonomial& b, int k);

/* Two-stage linear order on monomials of one color-type: charge sequences
 * (color 1 first, positions 1, 2, ...), then mode sequences. Returns
 * -1 / 0 / +1; different color-types are a usage error. */
int compare(const QPMonomial& a, const QPMonomial& b);

/* total energy */
int weight(const QPMonomial& b);

/* Graded dimensions of the quasi-particle basis up to weight qmax.
 * level = 0 selects N(k Lambda_0) (no charge caps; the level k never enters
 * the N-side conditions), level k >= 1 selects L(k Lambda_0). The parallel
 * version and the serial reference produce identical tables. */
GradedDimTable enumerate_basis(int level, int qmax);
GradedDimTable enumerate_basis_serial(int level, int qmax);

/* the monomials themselves, sorted by (weight, r1, r2, charges, modes) */
std::vector<QPMonomial> basis_monomials(int level, int qmax);

/* one-line dump: color2: [(n,m),...] | color1: [(n,m),...] */
std::string dump_line(const QPMonomial& b);

}  // namespace qpb2
