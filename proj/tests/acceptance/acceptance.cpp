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

// Acceptance runner: one PASS/FAIL line per criterion, exit status 0 iff all
// pass. Tolerances are exact equality except criterion 8, which compares the
// numeric minimum against its own error estimate.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "../golden_cases.hpp"
#include "ikeda/cli/app.hpp"

using namespace ikeda;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Records the first failure and keeps going so the detail line says what broke.
struct Tally {
    Outcome out;
    long checks = 0;
    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && out.pass) {
            out.pass = false;
            out.detail = what;
        }
    }
    Outcome finish(const std::string& summary) {
        if (out.pass) {
            out.detail = std::to_string(checks) + " checks; " + summary;
        }
        return out;
    }
};

const std::vector<std::pair<int, int>> kGrid = {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}};

unsigned threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

Outcome gaussian() {
    Tally t;
    for (int m : {2, 4, 6}) {
        for (int r = 1; r <= 3; ++r) {
            for (const auto& d : enumerate_deltas(static_cast<std::size_t>(m), r)) {
                const LaurentQ g = gaussian_multinomial(d);
                t.expect(g == inversion_sum(d), "Phi != inversion sum at " + d.to_string());
                t.expect(g.coeff(0).is_one(), "constant term != 1 at " + d.to_string());
                for (const auto& [e, c] : g.terms()) {
                    t.expect(c.sign() > 0 && c <= Rational(pow(Integer(m), static_cast<unsigned long>(-e / 2))),
                             "coefficient of p^" + std::to_string(e / 2) + " too large at " + d.to_string());
                }
            }
        }
    }
    return t.finish("m in {2,4,6}, r <= 3");
}

Outcome vanishing() {
    Tally t;
    for (int n = 1; n <= 3; ++n) {
        const auto rep = vanishing_check(n, threads());
        for (const auto& r : rep.records) {
            t.expect(r.ok(), "n = " + std::to_string(n) + ", sigma = " + permutation_string(r.sigma));
        }
    }
    return t.finish("n <= 3, all of S_2n");
}

Outcome pc_identity() {
    Tally t;
    for (int n = 1; n <= 3; ++n) {
        for (int r = 0; r <= 2; ++r) {
            for (const auto& d : enumerate_deltas(static_cast<std::size_t>(2 * n), r)) {
                t.expect(pc_identity_check(n, d), "n = " + std::to_string(n) + ", delta = " + d.to_string());
            }
        }
    }
    return t.finish("n <= 3, r <= 2");
}

Outcome oracle() {
    Tally t;
    for (const auto& [n, r] : kGrid) {
        const IkedaContext ctx{n, 1, r};
        const bool eq = eigenvalue_closed_form(ctx, threads()).normalized ==
                        eigenvalue_via_oracle(ctx, threads()).normalized;
        t.expect(eq, "closed form != oracle at n = " + std::to_string(n) + ", r = " + std::to_string(r));
    }
    return t.finish("exact equality on 7 contexts");
}

Outcome genus_two() {
    Tally t;
    const auto r1 = eigenvalue_closed_form({1, 12, 1}).normalized;
    QALaurent expected;
    expected += a_power<LaurentQ>(1);
    expected += a_power<LaurentQ>(-1);
    expected += QALaurent(LaurentQ::var(1));
    expected += QALaurent(LaurentQ::var(-1));
    t.expect(r1 == expected, "r = 1 gives " + cli::human_readable(r1));
    const IkedaContext c2{1, 12, 2};
    t.expect(eigenvalue_closed_form(c2).normalized == eigenvalue_via_oracle(c2).normalized,
             "r = 2 closed form != oracle");
    return t.finish("a + a^-1 + q + q^-1");
}

Outcome bounds() {
    Tally t;
    for (const auto& [n, r] : kGrid) {
        const auto rep = verify_bounds(IkedaContext{n, 1, r}, threads());
        const std::string where = "n = " + std::to_string(n) + ", r = " + std::to_string(r);
        t.expect(rep.support_ok, "support outside window at " + where);
        t.expect(rep.leading_ok, "leading coefficient != 1 at " + where);
        for (const auto& e : rep.entries) {
            t.expect(e.ok(), "bound fails at " + where + ", m = " + std::to_string(e.m));
        }
    }
    return t.finish("support, c_{rn^2} = 1, 4n root bound");
}

Outcome symmetry() {
    Tally t;
    for (const auto& [n, r] : kGrid) {
        t.expect(is_a_symmetric(eigenvalue_closed_form({n, 1, r}, threads())),
                 "not symmetric at n = " + std::to_string(n) + ", r = " + std::to_string(r));
    }
    return t.finish("a <-> a^-1 on 7 contexts");
}

Outcome positivity() {
    Tally t;
    double worst_ratio = 0;
    for (int n = 1; n <= 2; ++n) {
        for (int r = 1; r <= 3; ++r) {
            const IkedaContext ctx{n, 1, r};
            const auto primes = primes_above(positivity_threshold(ctx), 3);
            const auto rep = positivity_scan(ctx, primes, 401, threads());
            for (const auto& s : rep.scans) {
                const std::string where = "n = " + std::to_string(n) + ", r = " + std::to_string(r) +
                                          ", p = " + std::to_string(s.p) + ", t = " + cli::decimal(s.min_t);
                t.expect(s.positive(), "lambda <= 0 at " + where);
                t.expect(s.certified(), "minimum within error estimate at " + where);
                worst_ratio = std::max(worst_ratio, s.error / s.min_value);
            }
        }
    }
    return t.finish("max err/min = " + cli::decimal(worst_ratio));
}

Outcome weyl() {
    Tally t;
    std::mt19937_64 rng(20240601);
    for (int k = 0; k < 50; ++k) {
        const auto m = static_cast<std::size_t>(1 + k % 4);
        const int r = 1 + (k / 4) % 3;
        const auto pt = cli::detail::random_point(rng, m);
        const Rational direct = omega_T_pr(r, pt, threads());
        const std::string where = "point " + cli::detail::point_json(pt).dump() + ", r = " + std::to_string(r);
        t.expect(direct == omega_T_pr_via_gl(r, pt, threads()), "routes differ at " + where);
        for (const auto& g : weyl_generators(m)) {
            t.expect(omega_T_pr(r, weyl_transform(pt, g), threads()) == direct,
                     "not invariant under " + g.to_string() + " at " + where);
        }
    }
    return t.finish("50 points, rank <= 4, r <= 3");
}

Outcome elementary() {
    Tally t;
    std::mt19937_64 rng(20240602);
    for (int k = 0; k < 50; ++k) {
        const auto m = static_cast<std::size_t>(1 + k % 4);
        const auto pt = cli::detail::random_point(rng, m);
        for (std::size_t i = 0; i <= m; ++i) {
            std::vector<int> d(m, 0);
            std::fill(d.end() - static_cast<long>(i), d.end(), 1);
            const Rational expected =
                pow(pt.p, -static_cast<long>(i * (i + 1) / 2)) * elementary_symmetric<Rational>(i, pt.xs);
            t.expect(omega_t(DeltaTuple(d, 1), pt) == expected,
                     "i = " + std::to_string(i) + " at " + cli::detail::point_json(pt).dump());
        }
    }
    return t.finish("50 points, m <= 4");
}

Outcome cli_contract() {
    Tally t;
    const std::string dir = IKEDA_GOLDEN_DIR;
    const auto cases = testing::load_golden_cases(dir);
    for (const auto& c : cases) {
        for (unsigned th : {1u, 4u}) {
            const std::string problem = testing::check_golden(dir, c, th);
            t.expect(problem.empty(), problem);
        }
    }
    const std::vector<std::string> cmd = {"--no-timestamp", "--format", "json", "verify", "all", "--n", "2", "--r", "1"};
    const auto first = testing::run_cli(cmd);
    t.expect(first.code == 0, "verify all exited " + std::to_string(first.code));
    t.expect(testing::run_cli(cmd, 3).out == first.out, "verify all output depends on run or thread count");
    return t.finish(std::to_string(cases.size()) + " golden cases");
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"gaussian multinomial equals inversion sum", gaussian},
        {"vanishing of c(sigma) at the lift point", vanishing},
        {"P c identity", pc_identity},
        {"closed form equals spherical-map oracle", oracle},
        {"genus 2 closed form", genus_two},
        {"coefficient bounds", bounds},
        {"a-symmetry", symmetry},
        {"positivity above threshold", positivity},
        {"Weyl invariance and route agreement", weyl},
        {"elementary symmetric identity", elementary},
        {"CLI contract", cli_contract},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, fn] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += o.pass ? 0 : 1;
        std::printf("%s %2d %s (%s) [%.2fs]\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", index - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
