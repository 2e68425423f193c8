#include "qpb2/series.hpp"

#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "qpb2/table.hpp"

namespace qpb2 {

TruncatedSeries one(int qmax) {
    if (qmax < 0) throw std::invalid_argument("one: qmax must be >= 0");
    TruncatedSeries s;
    s.qmax = qmax;
    s.coeffs[{0, 0, 0}] = 1;
    return s;
}

bigint coeff(const TruncatedSeries& s, Key k) {
    auto it = s.coeffs.find(k);
    return it == s.coeffs.end() ? bigint(0) : it->second;
}

void add_term(TruncatedSeries& s, Key k, const bigint& c) {
    if (c == 0 || k.m > s.qmax) return;
    if (k.m < 0 || k.r1 < 0 || k.r2 < 0)
        throw std::invalid_argument("add_term: negative exponent");
    auto [it, inserted] = s.coeffs.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) s.coeffs.erase(it);
    }
}

static void require_same_qmax(const TruncatedSeries& a, const TruncatedSeries& b,
                              const char* op) {
    if (a.qmax != b.qmax)
        throw std::invalid_argument(std::string(op) + ": truncation mismatch");
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_qmax(a, b, "add");
    TruncatedSeries r = a;
    for (const auto& [k, v] : b.coeffs) add_term(r, k, v);
    return r;
}

TruncatedSeries negate(const TruncatedSeries& a) {
    TruncatedSeries r;
    r.qmax = a.qmax;
    for (const auto& [k, v] : a.coeffs) r.coeffs.emplace(k, -v);
    return r;
}

TruncatedSeries subtract(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_qmax(a, b, "subtract");
    return add(a, negate(b));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_qmax(a, b, "mul");
    TruncatedSeries r;
    r.qmax = a.qmax;
    for (const auto& [ka, va] : a.coeffs) {
        for (const auto& [kb, vb] : b.coeffs) {
            if (ka.m + kb.m > r.qmax) break;  // b.coeffs is sorted by m first
            add_term(r, {ka.m + kb.m, ka.r1 + kb.r1, ka.r2 + kb.r2}, va * vb);
        }
    }
    return r;
}

TruncatedSeries mul_geometric(const TruncatedSeries& a, int m, int a1, int a2) {
    if (m < 1)
        throw std::invalid_argument("mul_geometric: m must be >= 1");
    if (a1 < 0 || a2 < 0)
        throw std::invalid_argument("mul_geometric: negative y-exponent");
    /* r = a + g r with g the single term q^m y1^a1 y2^a2: fill r degree by
     * degree; the keys of r at q-degree d-m are final before degree d runs. */
    TruncatedSeries r = a;
    for (int deg = m; deg <= a.qmax; ++deg) {
        auto lo = r.coeffs.lower_bound({deg - m, 0, 0});
        auto hi = r.coeffs.lower_bound({deg - m + 1, 0, 0});
        std::vector<std::pair<Key, bigint>> feed(lo, hi);
        for (const auto& [k, v] : feed)
            add_term(r, {deg, k.r1 + a1, k.r2 + a2}, v);
    }
    return r;
}

TruncatedSeries mul_inv_qpochhammer(const TruncatedSeries& a, int r) {
    if (r < 0)
        throw std::invalid_argument("mul_inv_qpochhammer: r must be >= 0");
    TruncatedSeries s = a;
    for (int j = 1; j <= r; ++j) s = mul_geometric(s, j, 0, 0);
    return s;
}

TruncatedSeries to_series(const GradedDimTable& t, int qmax) {
    TruncatedSeries s;
    s.qmax = qmax;
    for (const auto& [k, v] : t) add_term(s, k, v);
    return s;
}

bool eq_upto(const TruncatedSeries& a, const TruncatedSeries& b, int d) {
    if (d < 0 || d > a.qmax || d > b.qmax)
        throw std::invalid_argument("eq_upto: d exceeds a truncation");
    auto ia = a.coeffs.begin();
    auto ib = b.coeffs.begin();
    while (ia != a.coeffs.end() && ia->first.m <= d && ib != b.coeffs.end() &&
           ib->first.m <= d) {
        if (ia->first != ib->first || ia->second != ib->second) return false;
        ++ia;
        ++ib;
    }
    bool a_done = ia == a.coeffs.end() || ia->first.m > d;
    bool b_done = ib == b.coeffs.end() || ib->first.m > d;
    return a_done && b_done;
}

namespace {

std::string monomial_text(Key k) {
    std::string s;
    auto pow = [&s](const char* v, int e) {
        if (e == 0) return;
        if (!s.empty()) s += '*';
        s += v;
        if (e > 1) s += '^' + std::to_string(e);
    };
    pow("q", k.m);
    pow("y1", k.r1);
    pow("y2", k.r2);
    return s;
}

}  // namespace

std::string render_text(const std::map<Key, bigint>& coeffs) {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : coeffs) {
        bigint av = v < 0 ? bigint(-v) : v;
        if (first) {
            if (v < 0) os << '-';
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        std::string mono = monomial_text(k);
        if (mono.empty())
            os << av.str();
        else if (av == 1)
            os << mono;
        else
            os << av.str() << '*' << mono;
    }
    return os.str();
}

std::string render_json(const std::map<Key, bigint>& coeffs) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [k, v] : coeffs) {
        nlohmann::ordered_json rec;
        rec["m"] = k.m;
        rec["r1"] = k.r1;
        rec["r2"] = k.r2;
        rec["coeff"] = v.str();
        arr.push_back(std::move(rec));
    }
    return arr.dump();
}

std::string render_csv(const std::map<Key, bigint>& coeffs) {
    std::ostringstream os;
    os << "m,r1,r2,coeff\n";
    for (const auto& [k, v] : coeffs)
        os << k.m << ',' << k.r1 << ',' << k.r2 << ',' << v.str() << '\n';
    return os.str();
}

}  // namespace qpb2
