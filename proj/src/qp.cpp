#include "qpb2/qp.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qpb2 {

QPMonomial make_monomial(std::vector<QuasiParticle> qps) {
    QPMonomial b;
    for (const auto& x : qps) {
        if (x.charge < 1)
            throw std::invalid_argument("make_monomial: charge must be >= 1");
        if (x.color == 1)
            b.color1.push_back(x);
        else if (x.color == 2)
            b.color2.push_back(x);
        else
            throw std::invalid_argument("make_monomial: color must be 1 or 2");
    }
    /* position 1 first: charge descending, mode descending within a run */
    auto canon = [](std::vector<QuasiParticle>& v) {
        std::stable_sort(v.begin(), v.end(),
                         [](const QuasiParticle& a, const QuasiParticle& b) {
                             if (a.charge != b.charge) return a.charge > b.charge;
                             return a.mode() > b.mode();
                         });
    };
    canon(b.color1);
    canon(b.color2);
    return b;
}

namespace {

std::vector<int> charges_of(const std::vector<QuasiParticle>& v) {
    std::vector<int> c;
    c.reserve(v.size());
    for (const auto& x : v) c.push_back(x.charge);
    return c;
}

std::vector<int> modes_of(const std::vector<QuasiParticle>& v) {
    std::vector<int> m;
    m.reserve(v.size());
    for (const auto& x : v) m.push_back(x.mode());
    return m;
}

/* m_{p,1} <= -n_{p,1} - sum_{p'<p} 2 min{n_{p,1}, n_{p',1}} */
std::vector<long long> color1_bounds(const std::vector<int>& c1) {
    std::vector<long long> S(c1.size());
    for (size_t p = 0; p < c1.size(); ++p) {
        long long b = -c1[p];
        for (size_t q = 0; q < p; ++q) b -= 2 * std::min(c1[p], c1[q]);
        S[p] = b;
    }
    return S;
}

/* m_{p,2} <= -n_{p,2} + sum_q min{2 n_{q,1}, n_{p,2}}
 *                     - sum_{p'<p} 2 min{n_{p,2}, n_{p',2}};
 * the interaction sum runs over the full color-1 charge list, so these
 * bounds can be positive (negative energies are admissible for color 2). */
std::vector<long long> color2_bounds(const std::vector<int>& c1,
                                     const std::vector<int>& c2) {
    std::vector<long long> T(c2.size());
    for (size_t p = 0; p < c2.size(); ++p) {
        long long b = -c2[p];
        for (int nq : c1) b += std::min(2 * nq, c2[p]);
        for (size_t q = 0; q < p; ++q) b -= 2 * std::min(c2[p], c2[q]);
        T[p] = b;
    }
    return T;
}

}  // namespace

std::pair<int, int> color_type(const QPMonomial& b) {
    int r1 = 0, r2 = 0;
    for (const auto& x : b.color1) r1 += x.charge;
    for (const auto& x : b.color2) r2 += x.charge;
    return {r2, r1};
}

Partition dual_charge_type(const QPMonomial& b, int color) {
    if (color != 1 && color != 2)
        throw std::invalid_argument("dual_charge_type: color must be 1 or 2");
    return conjugate(charges_of(color == 1 ? b.color1 : b.color2));
}

namespace {

DiffConditionReport check_impl(const QPMonomial& b, int cap1, int cap2) {
    DiffConditionReport rep;
    auto c1 = charges_of(b.color1);
    auto c2 = charges_of(b.color2);
    rep.color2_without_color1 = !c2.empty() && c1.empty();

    auto scan = [&rep](int color, const std::vector<int>& c,
                       const std::vector<int>& m,
                       const std::vector<long long>& B, int cap) {
        for (size_t p = 0; p < c.size(); ++p) {
            DiffConditionRecord rec;
            rec.color = color;
            rec.p = static_cast<int>(p) + 1;
            rec.charge = c[p];
            rec.mode = m[p];
            if (cap > 0 && c[p] > cap) {
                rec.rule = Rule::charge_cap;
                rec.bound = cap;
                rec.satisfied = false;
            } else {
                long long bound = B[p];
                Rule rule = color == 1 ? Rule::single_qp_bound
                                       : Rule::color2_interaction_bound;
                if (p > 0 && c[p] == c[p - 1]) {
                    long long gap = static_cast<long long>(m[p - 1]) - 2 * c[p];
                    if (gap < bound) {
                        bound = gap;
                        rule = Rule::equal_charge_gap;
                    }
                }
                rec.bound = bound;
                rec.rule = rule;
                rec.satisfied = m[p] <= bound;
            }
            rep.records.push_back(rec);
            rep.passed = rep.passed && rec.satisfied;
        }
    };
    scan(1, c1, modes_of(b.color1), color1_bounds(c1), cap1);
    scan(2, c2, modes_of(b.color2), color2_bounds(c1, c2), cap2);
    return rep;
}

}  // namespace

DiffConditionReport check_conditions_N(const QPMonomial& b) {
    return check_impl(b, 0, 0);
}

DiffConditionReport check_conditions_L(const QPMonomial& b, int k) {
    if (k < 1) throw std::invalid_argument("check_conditions_L: k must be >= 1");
    return check_impl(b, k, 2 * k);
}

int compare(const QPMonomial& a, const QPMonomial& b) {
    if (color_type(a) != color_type(b))
        throw std::invalid_argument("compare: color-types differ");
    auto cmp_seq = [](const std::vector<int>& A, const std::vector<int>& B) {
        size_t n = std::min(A.size(), B.size());
        for (size_t i = 0; i < n; ++i)
            if (A[i] != B[i]) return A[i] < B[i] ? -1 : 1;
        /* a proper prefix is smaller; unreachable for equal color-types
         * (charges are positive), kept for totality */
        if (A.size() != B.size()) return A.size() < B.size() ? -1 : 1;
        return 0;
    };
    if (int r = cmp_seq(charges_of(a.color1), charges_of(b.color1))) return r;
    if (int r = cmp_seq(charges_of(a.color2), charges_of(b.color2))) return r;
    if (int r = cmp_seq(modes_of(a.color1), modes_of(b.color1))) return r;
    if (int r = cmp_seq(modes_of(a.color2), modes_of(b.color2))) return r;
    return 0;
}

int weight(const QPMonomial& b) {
    int w = 0;
    for (const auto& x : b.color1) w += x.energy;
    for (const auto& x : b.color2) w += x.energy;
    return w;
}

namespace {

/* A charge-type pair with its fresh mode bounds. min1/min2 are the color-wise
 * minimal total energies Σ(-S_p), Σ(-T_p); min2 can be negative. */
struct Cell {
    Partition c1, c2;
    std::vector<long long> S, T;
    long long min1 = 0, min2 = 0;
};

/* All charge-type pairs that can contribute weight <= qmax. The window
 * r1 <= qmax, r2 <= 2 qmax is complete: the minimal weight of a charge-type
 * pair equals the fermionic exponent of its conjugates (the three exponent
 * identities), which dominates max(r1, ceil(r2/2)) -- re-checked here at
 * runtime for every pair. */
std::vector<Cell> build_cells(int level, int qmax) {
    if (level < 0) throw std::invalid_argument("level must be >= 0");
    if (qmax < 0) throw std::invalid_argument("qmax must be >= 0");
    int cap1 = level >= 1 ? level : no_cap;
    int cap2 = level >= 1 ? 2 * level : no_cap;
    std::vector<Cell> cells;
    for (int r1 = 0; r1 <= qmax; ++r1) {
        for (const auto& c1 : partitions_of(r1, cap1)) {
            for (int r2 = 0; r2 <= 2 * qmax; ++r2) {
                for (const auto& c2 : partitions_of(r2, cap2)) {
                    Cell cell;
                    cell.c1 = c1;
                    cell.c2 = c2;
                    cell.S = color1_bounds(c1);
                    cell.T = color2_bounds(c1, c2);
                    for (long long s : cell.S) cell.min1 -= s;
                    for (long long t : cell.T) cell.min2 -= t;
                    long long minw = cell.min1 + cell.min2;
                    if (minw < std::max<long long>(r1, (r2 + 1) / 2))
                        throw std::logic_error(
                            "enumeration completeness bound violated");
                    if (minw > qmax) continue;
                    cells.push_back(std::move(cell));
                }
            }
        }
    }
    return cells;
}

/* All mode vectors (position order) obeying the fresh bounds B and the
 * adjacent equal-charge gap m_p <= m_{p-1} - 2 n_p, with total energy
 * <= budget. The suffix minima from fresh bounds prune soundly (effective
 * bounds are only ever tighter) and terminate the scan (energies grow as
 * modes sink). */
template <class F>
void modes_dfs(const Partition& c, const std::vector<long long>& B,
               long long budget, F&& emit) {
    size_t P = c.size();
    std::vector<long long> sufmin(P + 1, 0);
    for (size_t p = P; p-- > 0;) sufmin[p] = sufmin[p + 1] - B[p];
    std::vector<int> modes(P);
    auto rec = [&](auto&& self, size_t p, long long total) -> void {
        if (p == P) {
            emit(modes, total);
            return;
        }
        long long b = B[p];
        if (p > 0 && c[p] == c[p - 1])
            b = std::min(b, static_cast<long long>(modes[p - 1]) - 2 * c[p]);
        for (long long m = b;; --m) {
            if (total - m + sufmin[p + 1] > budget) break;
            modes[p] = static_cast<int>(m);
            self(self, p + 1, total - m);
        }
    };
    rec(rec, 0, 0);
}

/* every (modes1, modes2) pair of the cell with total weight <= qmax;
 * color 1 runs against budget qmax - min2 because color-2 totals can be
 * negative and still admissible */
template <class Sink>
void cell_scan(const Cell& cell, int qmax, Sink&& sink) {
    modes_dfs(cell.c1, cell.S, qmax - cell.min2,
              [&](const std::vector<int>& m1, long long w1) {
                  modes_dfs(cell.c2, cell.T, qmax - w1,
                            [&](const std::vector<int>& m2, long long w2) {
                                sink(m1, w1, m2, w2);
                            });
              });
}

void accumulate_cell(const Cell& cell, int qmax, GradedDimTable& t) {
    int r1 = psum(cell.c1);
    int r2 = psum(cell.c2);
    cell_scan(cell, qmax,
              [&](const std::vector<int>&, long long w1,
                  const std::vector<int>&, long long w2) {
                  t[{static_cast<int>(w1 + w2), r1, r2}] += 1;
              });
}

QPMonomial cell_monomial(const Cell& cell, const std::vector<int>& m1,
                         const std::vector<int>& m2) {
    QPMonomial b;
    b.color1.reserve(cell.c1.size());
    b.color2.reserve(cell.c2.size());
    for (size_t i = 0; i < cell.c1.size(); ++i)
        b.color1.push_back({1, cell.c1[i], -m1[i]});
    for (size_t i = 0; i < cell.c2.size(); ++i)
        b.color2.push_back({2, cell.c2[i], -m2[i]});
    return b;
}

GradedDimTable merge_tables(std::vector<GradedDimTable>& parts) {
    GradedDimTable out;
    for (auto& p : parts)
        for (const auto& [k, v] : p) out[k] += v;
    return out;
}

}  // namespace

GradedDimTable enumerate_basis_serial(int level, int qmax) {
    auto cells = build_cells(level, qmax);
    GradedDimTable t;
    for (const auto& cell : cells) accumulate_cell(cell, qmax, t);
    return t;
}

GradedDimTable enumerate_basis(int level, int qmax) {
    auto cells = build_cells(level, qmax);
    int n = static_cast<int>(cells.size());
    int nt = 1;
#ifdef _OPENMP
    nt = omp_get_max_threads();
#endif
    std::vector<GradedDimTable> parts(nt);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        int tid = 0;
#ifdef _OPENMP
        tid = omp_get_thread_num();
#endif
        accumulate_cell(cells[i], qmax, parts[tid]);
    }
    return merge_tables(parts);
}

std::vector<QPMonomial> basis_monomials(int level, int qmax) {
    auto cells = build_cells(level, qmax);
    int n = static_cast<int>(cells.size());
    int nt = 1;
#ifdef _OPENMP
    nt = omp_get_max_threads();
#endif
    std::vector<std::vector<QPMonomial>> parts(nt);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        int tid = 0;
#ifdef _OPENMP
        tid = omp_get_thread_num();
#endif
        cell_scan(cells[i], qmax,
                  [&](const std::vector<int>& m1, long long,
                      const std::vector<int>& m2, long long) {
                      parts[tid].push_back(cell_monomial(cells[i], m1, m2));
                  });
    }
    std::vector<QPMonomial> out;
    for (auto& p : parts)
        for (auto& b : p) out.push_back(std::move(b));
    auto key = [](const QPMonomial& b) {
        return std::make_tuple(weight(b), color_type(b).second,
                               color_type(b).first, charges_of(b.color1),
                               modes_of(b.color1), charges_of(b.color2),
                               modes_of(b.color2));
    };
    std::sort(out.begin(), out.end(),
              [&key](const QPMonomial& a, const QPMonomial& b) {
                  return key(a) < key(b);
              });
    return out;
}

std::string dump_line(const QPMonomial& b) {
    std::ostringstream os;
    auto list = [&os](const std::vector<QuasiParticle>& v) {
        os << '[';
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) os << ',';
            os << '(' << v[i].charge << ',' << v[i].mode() << ')';
        }
        os << ']';
    };
    os << "color2: ";
    list(b.color2);
    os << " | color1: ";
    list(b.color1);
    return os.str();
}

}  // namespace qpb2
