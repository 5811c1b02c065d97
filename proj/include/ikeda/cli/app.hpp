// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ikeda/cli/ap_table.hpp"
#include "ikeda/cli/report.hpp"
#include "ikeda/ikeda.hpp"
#include "ikeda/positivity.hpp"
#include "ikeda/qcomb.hpp"
#include "ikeda/spherical.hpp"

// Command-line front end. `run` is the whole program minus process setup, so
// tests can drive it in-process with string streams.

namespace ikeda::cli {

enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kUsage = 2 };

/// Raised for arguments that parse but are out of range.
class UsageError : public Error {
public:
    using Error::Error;
};

struct GlobalOptions {
    std::string format = "text";
    bool no_timestamp = false;
    unsigned threads = 1;
    bool force = false;
    bool color = false;
};

namespace detail {

inline void require(bool cond, const std::string& message) {
    if (!cond) {
        throw UsageError(message);
    }
}

inline void soft_limit(bool within, const GlobalOptions& g, const std::string& message) {
    require(within || g.force, message + " (pass --force to override)");
}

inline std::string status_tag(const std::string& status, bool color) {
    std::string tag = status == "pass" ? "PASS" : status == "fail" ? "FAIL" : "INFO";
    if (!color) {
        return tag;
    }
    const char* code = status == "pass" ? "\033[32m" : status == "fail" ? "\033[31m" : "\033[36m";
    return code + tag + "\033[0m";
}

/// One line per check: "PASS name {witness}".
inline void print_checks_text(const ReportDocument& doc, std::ostream& out, bool color) {
    for (const auto& c : doc.checks) {
        out << status_tag(c.status, color) << ' ' << c.name << ' ' << c.witness.dump() << '\n';
    }
    std::size_t passed = 0;
    for (const auto& c : doc.checks) {
        passed += c.status == "pass" ? 1 : 0;
    }
    out << passed << " passed, " << doc.failures() << " failed\n";
}

inline Json point_json(const SphericalPoint<Rational>& pt) {
    Json xs = Json::array();
    for (const auto& x : pt.xs) {
        xs.push_back(x.to_string());
    }
    return Json{{"p", pt.p.to_string()}, {"x0", pt.x0.to_string()}, {"xs", xs}};
}

/// Random rational point whose coordinates stay pairwise distinct under
/// every Weyl generator.
inline SphericalPoint<Rational> random_point(std::mt19937_64& rng, std::size_t m) {
    static const int primes[] = {2, 3, 5, 7, 11, 13};
    std::uniform_int_distribution<int> pick(0, 5);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    auto nonzero = [&] {
        while (true) {
            const int a = num(rng);
            if (a != 0) {
                return Rational(a, den(rng));
            }
        }
    };
    while (true) {
        SphericalPoint<Rational> pt{Rational(primes[pick(rng)]), nonzero(), {}};
        for (std::size_t i = 0; i < m; ++i) {
            pt.xs.push_back(nonzero());
        }
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) {
            for (std::size_t j = i + 1; j < m && ok; ++j) {
                ok = pt.xs[i] != pt.xs[j] && pt.xs[i] * pt.xs[j] != Rational(1);
            }
        }
        if (ok) {
            return pt;
        }
    }
}

}  // namespace detail

// ---- verification suites ----------------------------------------------------

inline void suite_vanishing(ReportDocument& doc, int n, unsigned threads) {
    const auto rep = vanishing_check(n, threads);
    for (const auto& r : rep.records) {
        Json w{{"sigma", permutation_string(r.sigma)}, {"value", r.value.to_string()}};
        if (r.identity()) {
            if (r.value.is_zero()) {
                doc.add_check("vanishing-identity", false, w);
            } else {
                doc.add_info("vanishing-identity", w);
            }
            continue;
        }
        w["i"] = r.i;
        w["j"] = r.j;
        doc.add_check("vanishing", r.ok(), w);
    }
}

inline void suite_pc_identity(ReportDocument& doc, int n, int r) {
    for (const auto& d : enumerate_deltas(2 * n, r)) {
        const auto s = pc_identity_sides(n, d);
        doc.add_check("pc-identity", s.equal(),
                      Json{{"delta", d.to_string()}, {"lhs", s.lhs.to_string()}, {"rhs", s.rhs.to_string()}});
    }
}

inline void suite_gaussian(ReportDocument& doc, int n, int r) {
    const int m = 2 * n;
    for (const auto& d : enumerate_deltas(m, r)) {
        const LaurentQ phi_delta = gaussian_multinomial(d);
        const bool equal = phi_delta == inversion_sum(d);
        const bool constant_one = phi_delta.coeff(0).is_one();
        bool bounded = true;
        for (const auto& [e, c] : phi_delta.terms()) {
            bounded = bounded && c.sign() > 0 && c.is_integer() &&
                      c <= Rational(pow(Integer(m), static_cast<unsigned long>(-e / 2)));
        }
        doc.add_check("gaussian-multinomial", equal && constant_one && bounded,
                      Json{{"delta", d.to_string()},
                           {"phi", phi_delta.to_string()},
                           {"matches_inversion_sum", equal},
                           {"constant_term_one", constant_one},
                           {"coefficients_within_(2n)^j", bounded}});
    }
}

inline void suite_oracle(ReportDocument& doc, int n, int r, unsigned threads) {
    const IkedaContext ctx{n, 1, r};
    const auto closed = eigenvalue_closed_form(ctx, threads);
    const auto oracle = eigenvalue_via_oracle(ctx, threads);
    doc.add_check("oracle-equivalence", closed.normalized == oracle.normalized,
                  Json{{"n", n},
                       {"r", r},
                       {"closed_form", terms_to_json(closed.normalized)},
                       {"oracle", terms_to_json(oracle.normalized)}});
}

inline void suite_bounds(ReportDocument& doc, int n, int r, unsigned threads) {
    const IkedaContext ctx{n, 1, r};
    const auto rep = verify_bounds(ctx, threads);
    doc.add_check("support", rep.support_ok,
                  Json{{"min", rep.support_min},
                       {"max", rep.support_max},
                       {"window", Json::array({ctx.bottom_exponent(), ctx.top_exponent()})}});
    Json lead = Json::array();
    for (const auto& [e, c] : rep.leading.terms()) {
        lead.push_back(Json{{"a", e}, {"coeff", c.to_string()}});
    }
    doc.add_check("c_{" + std::to_string(ctx.top_exponent()) + "} = 1", rep.leading_ok, Json{{"c", lead}});
    for (const auto& e : rep.entries) {
        doc.add_check("coefficient-bound", e.ok(),
                      Json{{"m", e.m},
                           {"abs_c_m_at_a=1", e.value_at_one.get_str()},
                           {"2(2n)^(rn^2-m)", e.sum_bound.get_str()},
                           {"(4n)^(rn^2-m)", e.root_bound.get_str()}});
    }
}

inline void suite_weyl(ReportDocument& doc, int n, int r, int points, std::uint64_t seed, unsigned threads) {
    std::mt19937_64 rng(seed);
    const auto m = static_cast<std::size_t>(n);
    for (int k = 0; k < points; ++k) {
        const auto pt = detail::random_point(rng, m);
        const Rational direct = omega_T_pr(r, pt, threads);
        const Rational via_gl = omega_T_pr_via_gl(r, pt, threads);
        doc.add_check("route-agreement", direct == via_gl,
                      Json{{"point", detail::point_json(pt)}, {"r", r}, {"value", direct.to_string()}});
        for (const auto& g : weyl_generators(m)) {
            const Rational moved = omega_T_pr(r, weyl_transform(pt, g), threads);
            doc.add_check("weyl-invariance", moved == direct,
                          Json{{"point", detail::point_json(pt)}, {"generator", g.to_string()}});
        }
    }
}

// ---- entry point --------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color = false) {
    CLI::App app{"Hecke eigenvalues of Ikeda lifts", "ikeda"};
    app.fallthrough();
    app.require_subcommand(1);

    GlobalOptions g;
    g.color = color;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_flag("--no-timestamp", g.no_timestamp, "Omit the timestamp from report metadata");
    app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1u, 256u));
    app.add_flag("--force", g.force, "Lift the soft size limits");

    int n = 1;
    int r = 1;

    auto* eig = app.add_subcommand("eigenvalue", "Print the normalized eigenvalue of T(p^r)");
    eig->add_option("--n", n, "Half genus")->required();
    eig->add_option("--r", r, "Exponent of T(p^r)")->required();

    std::string suite;
    int points = 10;
    std::uint64_t seed = 1;
    auto* ver = app.add_subcommand("verify", "Run a verification suite");
    ver->add_option("suite", suite, "Suite name")
        ->required()
        ->check(CLI::IsMember({"vanishing", "pc-identity", "gaussian", "oracle", "bounds", "weyl", "all"}));
    ver->add_option("--n", n, "Half genus (rank for the weyl suite)");
    ver->add_option("--r", r, "Exponent of T(p^r)");
    ver->add_option("--points", points, "Random points for the weyl suite")->check(CLI::Range(1, 10000));
    ver->add_option("--seed", seed, "Random seed for the weyl suite");

    auto* thr = app.add_subcommand("threshold", "Print the positivity threshold and the next prime");
    thr->add_option("--n", n, "Half genus")->required();
    thr->add_option("--r", r, "Exponent of T(p^r)")->required();

    int r_max = 1;
    std::string ap_file;
    bool normalized = false;
    auto* tab = app.add_subcommand("table", "Numeric eigenvalues from an a_p table");
    tab->add_option("--n", n, "Half genus")->required();
    tab->add_option("--r-max", r_max, "Largest r")->required();
    tab->add_option("--ap-file", ap_file, "a_p table")->required();
    tab->add_flag("--normalized", normalized, "Only emit the normalized eigenvalue");

    int prime_count = 3;
    int grid = 401;
    auto* pos = app.add_subcommand("positivity", "Scan lambda over t in [-2, 2] above the threshold");
    pos->add_option("--n", n, "Half genus")->required();
    pos->add_option("--r", r, "Exponent of T(p^r)")->required();
    pos->add_option("--primes", prime_count, "Number of primes above the threshold")->check(CLI::Range(1, 1000));
    pos->add_option("--grid", grid, "Grid size");

    std::vector<std::string> argv_store{"ikeda"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) {
        argv.push_back(a.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    const bool stamp = !g.no_timestamp;
    try {
        if (eig->parsed()) {
            detail::require(n >= 1 && r >= 0, "eigenvalue needs n >= 1 and r >= 0");
            detail::soft_limit(n <= 4, g, "eigenvalue is limited to n <= 4");
            const auto poly = eigenvalue_closed_form({n, 1, r}, g.threads);
            if (g.format == "json") {
                ReportDocument doc;
                doc.meta = make_meta("eigenvalue", Json{{"n", n}, {"r", r}}, stamp);
                doc.terms = terms_to_json(poly.normalized);
                out << doc.serialize();
            } else if (g.format == "csv") {
                out << "q,a,coeff\n";
                for (const auto& t : term_list(poly.normalized)) {
                    out << t.q << ',' << t.a << ',' << t.coeff.to_string() << '\n';
                }
            } else {
                out << human_readable(poly.normalized) << '\n';
            }
            return kSuccess;
        }

        if (ver->parsed()) {
            detail::require(n >= 1 && r >= 0, "verify needs n >= 1 and r >= 0");
            detail::require(g.format != "csv", "verify supports --format text or json");
            const bool all = suite == "all";
            if (all || suite == "vanishing" || suite == "oracle") {
                detail::soft_limit(n <= 3, g, suite + " is limited to n <= 3");
            }
            if (all || suite == "gaussian" || suite == "bounds" || suite == "pc-identity") {
                detail::soft_limit(n <= 3 && r <= 3, g, suite + " is limited to n <= 3 and r <= 3");
            }
            if (all || suite == "weyl") {
                detail::soft_limit(n <= 4 && r <= 3, g, suite + " is limited to rank n <= 4 and r <= 3");
            }
            ReportDocument doc;
            Json params{{"suite", suite}, {"n", n}, {"r", r}};
            if (all || suite == "weyl") {
                params["points"] = points;
                params["seed"] = seed;
            }
            doc.meta = make_meta("verify", params, stamp);
            if (all || suite == "vanishing") {
                suite_vanishing(doc, n, g.threads);
            }
            if (all || suite == "pc-identity") {
                suite_pc_identity(doc, n, r);
            }
            if (all || suite == "gaussian") {
                suite_gaussian(doc, n, r);
            }
            if (all || suite == "oracle") {
                suite_oracle(doc, n, r, g.threads);
            }
            if (all || suite == "bounds") {
                suite_bounds(doc, n, r, g.threads);
            }
            if (all || suite == "weyl") {
                suite_weyl(doc, n, r, points, seed, g.threads);
            }
            if (g.format == "json") {
                out << doc.serialize();
            } else {
                detail::print_checks_text(doc, out, g.color);
            }
            return doc.failures() == 0 ? kSuccess : kCheckFailed;
        }

        if (thr->parsed()) {
            detail::require(n >= 1 && r >= 1, "threshold needs n >= 1 and r >= 1");
            detail::require(g.format != "csv", "threshold supports --format text or json");
            const IkedaContext ctx{n, 1, r};
            const auto bound = positivity_threshold(ctx);
            const auto prime = primes_above(bound, 1).front();
            if (g.format == "json") {
                ReportDocument doc;
                doc.meta = make_meta("threshold", Json{{"n", n}, {"r", r}}, stamp);
                doc.add_info("threshold", Json{{"threshold", bound}, {"first_prime", prime}});
                out << doc.serialize();
            } else {
                out << "threshold " << bound << "\nfirst_prime " << prime << '\n';
            }
            return kSuccess;
        }

        if (tab->parsed()) {
            detail::require(n >= 1 && r_max >= 1, "table needs n >= 1 and r-max >= 1");
            detail::soft_limit(n <= 4, g, "table is limited to n <= 4");
            ApTable table;
            try {
                table = load_ap_table(ap_file);
            } catch (const ParseError& e) {
                err << "error: " << ap_file << ": " << e.what() << '\n';
                return kCheckFailed;
            } catch (const IoError& e) {
                err << "error: " << e.what() << '\n';
                return kCheckFailed;
            }
            std::vector<EigenvaluePoly> polys;
            for (int rr = 1; rr <= r_max; ++rr) {
                polys.push_back(eigenvalue_closed_form({n, table.weight, rr}, g.threads));
            }
            ReportDocument doc;
            doc.meta = make_meta("table",
                                 Json{{"n", n}, {"r_max", r_max}, {"weight", table.weight}, {"normalized", normalized}},
                                 stamp);
            for (const auto& w : table.warnings) {
                doc.add_info("ramanujan-bound-warning", Json{{"message", w}});
            }
            Json rows = Json::array();
            std::string csv = normalized ? "p,r,a_p,t,lambda_tilde,lambda_tilde_err\n"
                                         : "p,r,a_p,t,lambda_tilde,lambda_tilde_err,lambda,lambda_err\n";
            for (const auto& e : table.entries) {
                const double p = static_cast<double>(e.p);
                // t = a_f(p) / p^{(k-1)/2}
                const double t = Rational(e.ap).to_double() / std::pow(p, (table.weight - 1) / 2.0);
                const bool unit_circle = std::abs(t) <= 2.0;
                for (int rr = 1; rr <= r_max; ++rr) {
                    const auto& poly = polys[static_cast<std::size_t>(rr - 1)];
                    const auto lt = evaluate_numeric(poly, p, t, true, !unit_circle);
                    Json row{{"p", e.p}, {"r", rr}, {"a_p", e.ap.get_str()}, {"t", decimal(t)},
                             {"lambda_tilde", decimal(lt.value)}, {"lambda_tilde_err", decimal(lt.error)}};
                    csv += std::to_string(e.p) + ',' + std::to_string(rr) + ',' + e.ap.get_str() + ',' + decimal(t) +
                           ',' + decimal(lt.value) + ',' + decimal(lt.error);
                    if (!normalized) {
                        const auto l = evaluate_numeric(poly, p, t, false, !unit_circle);
                        row["lambda"] = decimal(l.value);
                        row["lambda_err"] = decimal(l.error);
                        csv += ',' + decimal(l.value) + ',' + decimal(l.error);
                    }
                    csv += '\n';
                    rows.push_back(std::move(row));
                }
            }
            if (g.format == "json") {
                doc.extra["rows"] = std::move(rows);
                out << doc.serialize();
            } else {
                for (const auto& w : table.warnings) {
                    err << "warning: " << w << '\n';
                }
                out << csv;
            }
            return kSuccess;
        }

        if (pos->parsed()) {
            detail::require(n >= 1 && r >= 1, "positivity needs n >= 1 and r >= 1");
            detail::require(grid >= 3, "positivity needs --grid >= 3");
            detail::require(g.format != "csv", "positivity supports --format text or json");
            detail::soft_limit(n <= 4, g, "positivity is limited to n <= 4");
            const IkedaContext ctx{n, 1, r};
            const auto primes = primes_above(positivity_threshold(ctx), static_cast<std::size_t>(prime_count));
            const auto rep = positivity_scan(ctx, primes, grid, g.threads);
            ReportDocument doc;
            doc.meta = make_meta(
                "positivity", Json{{"n", n}, {"r", r}, {"primes", prime_count}, {"grid", grid}}, stamp);
            doc.add_info("threshold", Json{{"threshold", rep.threshold}});
            for (const auto& s : rep.scans) {
                doc.add_check("positivity", s.positive(),
                              Json{{"p", s.p},
                                   {"min_value", decimal(s.min_value)},
                                   {"min_t", decimal(s.min_t)},
                                   {"err", decimal(s.error)},
                                   {"margin_exceeds_err", s.certified()}});
            }
            if (g.format == "json") {
                out << doc.serialize();
            } else {
                detail::print_checks_text(doc, out, g.color);
            }
            return doc.failures() == 0 ? kSuccess : kCheckFailed;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kCheckFailed;
    }
    return kUsage;
}

}  // namespace ikeda::cli
