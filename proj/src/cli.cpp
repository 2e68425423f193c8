#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "qpb2/characters.hpp"
#include "qpb2/oracle.hpp"
#include "qpb2/qp.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace qpb2;
using nlohmann::ordered_json;

/* exit codes: 0 all checks passed, 1 mathematical discrepancy, 2 usage error */
constexpr int exit_ok = 0;
constexpr int exit_discrepancy = 1;
constexpr int exit_usage = 2;

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return exit_usage;
}

/* ---- memory budget ------------------------------------------------- */

/* cumulative count of partitions of 0..n with `colors` kinds of parts */
bigint colored_partitions_cumulative(int n, int colors) {
    std::vector<bigint> a(n + 1);
    a[0] = 1;
    for (int c = 0; c < colors; ++c)
        for (int m = 1; m <= n; ++m)
            for (int t = m; t <= n; ++t) a[t] += a[t - m];
    bigint s = 0;
    for (const auto& x : a) s += x;
    return s;
}

/* Crude but honest upper estimates of peak allocation, checked before any
 * work: a graded table key costs ~96 bytes, a stored charge-type pair ~128
 * (one pair per basis monomial at most), a dumped monomial ~256, and the
 * fermionic sum keeps one truncated Pochhammer row per dual-charge row. */
bigint table_bytes(int qmax) {
    return bigint(qmax + 1) * (qmax + 1) * (2 * qmax + 1) * 96;
}

bigint enumerate_bytes(int qmax) {
    return table_bytes(qmax) + colored_partitions_cumulative(qmax, 4) * 128;
}

bigint basis_bytes(int qmax) {
    return enumerate_bytes(qmax) + colored_partitions_cumulative(qmax, 4) * 256;
}

bigint fermionic_bytes(int qmax) {
    bigint rows = colored_partitions_cumulative(qmax, 1) +
                  colored_partitions_cumulative(2 * qmax, 1);
    return table_bytes(qmax) + rows * (qmax + 1) * 32;
}

bool over_budget(const bigint& need, long long budget_mb, std::string& msg) {
    bigint limit = bigint(budget_mb) << 20;
    if (need <= limit) return false;
    std::ostringstream os;
    os << "refusing to start: estimated " << (need >> 20)
       << " MiB exceeds the memory budget of " << budget_mb
       << " MiB (raise --memory-budget-mb to override)";
    msg = os.str();
    return true;
}

/* ---- output -------------------------------------------------------- */

int emit(const std::string& payload, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << payload;
        return exit_ok;
    }
    std::ofstream f(output_path, std::ios::binary);
    if (!f) return usage_error("cannot open output file: " + output_path);
    f << payload;
    return exit_ok;
}

std::string series_payload(const std::map<Key, bigint>& coeffs,
                           const std::string& fmt) {
    if (fmt == "text") return render_text(coeffs) + "\n";
    if (fmt == "json") return render_json(coeffs) + "\n";
    return render_csv(coeffs);
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

/* ---- subcommand payloads ------------------------------------------- */

std::string basis_payload(const std::vector<QPMonomial>& monos,
                          const std::string& fmt) {
    if (fmt == "text") {
        std::string out;
        for (const auto& b : monos) {
            out += dump_line(b);
            out += '\n';
        }
        return out;
    }
    if (fmt == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& b : monos) {
            ordered_json mono = ordered_json::array();
            auto push = [&mono](const std::vector<QuasiParticle>& v) {
                for (const auto& x : v) {
                    ordered_json rec;
                    rec["color"] = x.color;
                    rec["charge"] = x.charge;
                    rec["mode"] = x.mode();
                    mono.push_back(std::move(rec));
                }
            };
            push(b.color2);
            push(b.color1);
            arr.push_back(std::move(mono));
        }
        return arr.dump() + "\n";
    }
    std::string out = "weight,r1,r2,monomial\n";
    for (const auto& b : monos) {
        auto [r2, r1] = color_type(b);
        out += std::to_string(weight(b)) + ',' + std::to_string(r1) + ',' +
               std::to_string(r2) + ',' + csv_quote(dump_line(b)) + '\n';
    }
    return out;
}

ordered_json report_object(const std::string& name, const VerifyReport& r) {
    ordered_json j;
    j["name"] = name;
    j["qmax"] = r.qmax;
    j["equal"] = r.equal;
    j["checked_coefficients"] = r.checked_coefficients;
    if (r.first_discrepancy) {
        ordered_json d;
        d["m"] = r.first_discrepancy->key.m;
        d["r1"] = r.first_discrepancy->key.r1;
        d["r2"] = r.first_discrepancy->key.r2;
        d["lhs"] = r.first_discrepancy->lhs.str();
        d["rhs"] = r.first_discrepancy->rhs.str();
        j["first_discrepancy"] = std::move(d);
    }
    j["wall_time_ms"] = r.wall_time_ms;
    return j;
}

std::string report_text_line(const std::string& name, const VerifyReport& r) {
    std::ostringstream os;
    os << name << ": " << (r.equal ? "equal" : "UNEQUAL")
       << " checked=" << r.checked_coefficients;
    if (r.first_discrepancy) {
        const auto& d = *r.first_discrepancy;
        os << " first_discrepancy=(" << d.key.m << ',' << d.key.r1 << ','
           << d.key.r2 << ") lhs=" << d.lhs.str() << " rhs=" << d.rhs.str();
    }
    os << '\n';
    return os.str();
}

/* ---- commands ------------------------------------------------------ */

struct CommonOpts {
    int qmax = 0;
    std::string module = "N";
    int level = 0;
    std::string method = "fermionic";
    std::string format;
    std::string output;
    int threads = 0;
    long long budget_mb = 4096;
    std::vector<int> levels = {1, 2, 3};
    int rmax = 6;
};

int run_char(const CommonOpts& o) {
    TruncatedSeries s;
    if (o.module == "N") {
        if (o.method == "product")
            s = ch_WN_product(o.qmax);
        else if (o.method == "fermionic")
            s = ch_WN_fermionic(o.qmax);
        else
            s = to_series(enumerate_basis(0, o.qmax), o.qmax);
    } else {
        if (o.method == "product")
            return usage_error("no product formula for module L; "
                               "use --method fermionic or enumerate");
        if (o.method == "fermionic")
            s = ch_WL_fermionic(o.level, o.qmax);
        else
            s = to_series(enumerate_basis(o.level, o.qmax), o.qmax);
    }
    return emit(series_payload(s.coeffs, o.format), o.output);
}

int run_basis(const CommonOpts& o) {
    int level = o.module == "N" ? 0 : o.level;
    auto monos = basis_monomials(level, o.qmax);
    return emit(basis_payload(monos, o.format), o.output);
}

int run_oracle(const CommonOpts& o) {
    auto t = pbw_graded_dims(o.qmax);
    return emit(series_payload(t, o.format), o.output);
}

int run_verify(const CommonOpts& o) {
    std::vector<std::pair<std::string, VerifyReport>> checks;
    checks.emplace_back("rr", verify_rr_identity(o.qmax));
    for (int k : o.levels) {
        auto t0 = std::chrono::steady_clock::now();
        TruncatedSeries lhs = to_series(enumerate_basis(k, o.qmax), o.qmax);
        TruncatedSeries rhs = ch_WL_fermionic(k, o.qmax);
        VerifyReport rep = compare_series_report(o.qmax, lhs, rhs);
        rep.wall_time_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
        checks.emplace_back("L" + std::to_string(k), rep);
    }
    bool all_equal = true;
    for (const auto& [name, rep] : checks) all_equal = all_equal && rep.equal;

    std::string payload;
    if (o.format == "text") {
        for (const auto& [name, rep] : checks)
            payload += report_text_line(name, rep);
        payload += std::string("overall: ") + (all_equal ? "equal" : "UNEQUAL") + "\n";
    } else if (o.format == "json") {
        ordered_json j;
        j["qmax"] = o.qmax;
        j["equal"] = all_equal;
        ordered_json arr = ordered_json::array();
        for (const auto& [name, rep] : checks)
            arr.push_back(report_object(name, rep));
        j["checks"] = std::move(arr);
        payload = j.dump() + "\n";
    } else {
        payload = "name,qmax,equal,checked_coefficients,m,r1,r2,lhs,rhs,wall_time_ms\n";
        for (const auto& [name, rep] : checks) {
            std::ostringstream os;
            os << name << ',' << rep.qmax << ','
               << (rep.equal ? "true" : "false") << ','
               << rep.checked_coefficients << ',';
            if (rep.first_discrepancy) {
                const auto& d = *rep.first_discrepancy;
                os << d.key.m << ',' << d.key.r1 << ',' << d.key.r2 << ','
                   << d.lhs.str() << ',' << d.rhs.str();
            } else {
                os << ",,,,";
            }
            os << ',' << rep.wall_time_ms << '\n';
            payload += os.str();
        }
    }
    int rc = emit(payload, o.output);
    if (rc != exit_ok) return rc;
    return all_equal ? exit_ok : exit_discrepancy;
}

int run_lemma_check(const CommonOpts& o) {
    long long cases = 0;
    bool equal = true;
    Partition bad1, bad2;
    int bad_identity = -1;
    long long bad_lhs = 0, bad_rhs = 0;
    for (int r1 = 0; r1 <= o.rmax && equal; ++r1) {
        for (const auto& c1 : partitions_of(r1)) {
            for (int r2 = 0; r2 <= o.rmax && equal; ++r2) {
                for (const auto& c2 : partitions_of(r2)) {
                    LemmaPairs P = lemma41_check(c1, c2);
                    ++cases;
                    for (int i = 0; i < 3 && equal; ++i) {
                        if (P.lhs[i] != P.rhs[i]) {
                            equal = false;
                            bad1 = c1;
                            bad2 = c2;
                            bad_identity = i;
                            bad_lhs = P.lhs[i];
                            bad_rhs = P.rhs[i];
                        }
                    }
                    if (!equal) break;
                }
            }
        }
    }

    std::string payload;
    if (o.format == "text") {
        std::ostringstream os;
        os << "rmax: " << o.rmax << "\ncases: " << cases
           << "\nequal: " << (equal ? "true" : "false") << '\n';
        if (!equal) {
            os << "first failure: identity " << bad_identity << " charge1=[";
            for (size_t i = 0; i < bad1.size(); ++i)
                os << (i ? "," : "") << bad1[i];
            os << "] charge2=[";
            for (size_t i = 0; i < bad2.size(); ++i)
                os << (i ? "," : "") << bad2[i];
            os << "] lhs=" << bad_lhs << " rhs=" << bad_rhs << '\n';
        }
        payload = os.str();
    } else if (o.format == "json") {
        ordered_json j;
        j["rmax"] = o.rmax;
        j["cases"] = cases;
        j["equal"] = equal;
        if (!equal) {
            ordered_json f;
            f["identity"] = bad_identity;
            f["charge1"] = bad1;
            f["charge2"] = bad2;
            f["lhs"] = bad_lhs;
            f["rhs"] = bad_rhs;
            j["first_failure"] = std::move(f);
        }
        payload = j.dump() + "\n";
    } else {
        std::ostringstream os;
        os << "rmax,cases,equal\n"
           << o.rmax << ',' << cases << ',' << (equal ? "true" : "false")
           << '\n';
        payload = os.str();
    }
    int rc = emit(payload, o.output);
    if (rc != exit_ok) return rc;
    return equal ? exit_ok : exit_discrepancy;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasi-particle bases and characters of the principal "
                 "subspaces of N(k Lambda_0) and L(k Lambda_0) for affine B2"};
    app.require_subcommand(1);

    CommonOpts o;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "output format: text, json, csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("--output", o.output, "write output to this file");
    };
    auto add_parallel = [&](CLI::App* cmd) {
        cmd->add_option("--threads", o.threads, "worker thread count")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--memory-budget-mb", o.budget_mb,
                        "refuse runs whose estimated footprint exceeds this")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* c_char = app.add_subcommand("char", "graded character");
    c_char->add_option("--qmax", o.qmax, "q-degree truncation")
        ->required()
        ->check(CLI::Range(0, 100000));
    c_char->add_option("--module", o.module, "N or L")
        ->check(CLI::IsMember({"N", "L"}));
    c_char->add_option("--level", o.level, "level k (module L only)")
        ->check(CLI::PositiveNumber);
    c_char->add_option("--method", o.method,
                       "evaluation path: fermionic, product, enumerate")
        ->check(CLI::IsMember({"fermionic", "product", "enumerate"}));
    add_format(c_char);
    add_parallel(c_char);

    CLI::App* c_basis = app.add_subcommand("basis", "dump basis monomials");
    c_basis->add_option("--qmax", o.qmax, "maximal weight")
        ->required()
        ->check(CLI::Range(0, 100000));
    c_basis->add_option("--module", o.module, "N or L")
        ->check(CLI::IsMember({"N", "L"}));
    c_basis->add_option("--level", o.level, "level k (module L only)")
        ->check(CLI::PositiveNumber);
    add_format(c_basis);
    add_parallel(c_basis);

    CLI::App* c_verify = app.add_subcommand(
        "verify", "product vs fermionic identity and the L-character checks");
    c_verify->add_option("--qmax", o.qmax, "q-degree truncation")
        ->default_val(12)
        ->check(CLI::Range(0, 100000));
    c_verify->add_option("--levels", o.levels, "levels for the L-side checks")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    add_format(c_verify);
    add_parallel(c_verify);

    CLI::App* c_lemma =
        app.add_subcommand("lemma-check", "exponent identities, exhaustively");
    c_lemma->add_option("--rmax", o.rmax, "largest color-type total")
        ->default_val(6)
        ->check(CLI::Range(0, 100));
    add_format(c_lemma);

    CLI::App* c_oracle = app.add_subcommand("oracle", "PBW graded dimensions");
    c_oracle->add_option("--qmax", o.qmax, "q-degree truncation")
        ->required()
        ->check(CLI::Range(0, 100000));
    add_format(c_oracle);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    /* default output format from the environment unless --format is given */
    if (o.format.empty()) {
        const char* env = std::getenv("QPCHAR_FORMAT");
        if (env != nullptr && *env != '\0') {
            std::string f = env;
            if (f != "text" && f != "json" && f != "csv")
                return usage_error("QPCHAR_FORMAT must be text, json or csv");
            o.format = f;
        } else {
            o.format = "text";
        }
    }

    CLI::App* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();

    if (name == "char" || name == "basis") {
        if (o.module == "L" && cmd->count("--level") == 0)
            return usage_error("--module L requires --level");
        if (o.module == "N" && cmd->count("--level") > 0)
            return usage_error("--level applies to --module L only");
    }

#ifdef _OPENMP
    if (o.threads >= 1) omp_set_num_threads(o.threads);
#endif

    /* reject over-budget configurations before any allocation */
    bigint need = 0;
    if (name == "char")
        need = o.method == "enumerate" ? enumerate_bytes(o.qmax)
               : o.method == "fermionic" ? fermionic_bytes(o.qmax)
                                         : table_bytes(o.qmax);
    else if (name == "basis")
        need = basis_bytes(o.qmax);
    else if (name == "verify")
        need = fermionic_bytes(o.qmax) + enumerate_bytes(o.qmax) +
               table_bytes(o.qmax);
    else if (name == "oracle")
        need = table_bytes(o.qmax);
    std::string msg;
    if (over_budget(need, o.budget_mb, msg)) return usage_error(msg);

    try {
        if (name == "char") return run_char(o);
        if (name == "basis") return run_basis(o);
        if (name == "verify") return run_verify(o);
        if (name == "lemma-check") return run_lemma_check(o);
        if (name == "oracle") return run_oracle(o);
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
    return usage_error("unknown command");
}
