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

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ikeda/alaurent.hpp"
#include "ikeda/errors.hpp"
#include "ikeda/laurent.hpp"
#include "ikeda/parallel.hpp"
#include "ikeda/qcomb.hpp"
#include "ikeda/ratfunc.hpp"
#include "ikeda/spherical.hpp"

namespace ikeda {

/// Parameters of an Ikeda lift F in S_{k+n}(Sp_{4n}(Z)) of an elliptic
/// eigenform of weight k, and the exponent r of the Hecke operator T(p^r).
struct IkedaContext {
    int n = 1;
    int k = 12;
    int r = 1;

    void validate() const {
        if (n < 1 || k < 1 || r < 0) {
            throw DomainError("invalid Ikeda context: need n >= 1, k >= 1, r >= 0");
        }
    }

    int genus() const { return 2 * n; }
    /// Largest q-exponent of the normalized eigenvalue, r n^2.
    int top_exponent() const { return r * n * n; }
    /// Smallest q-exponent allowed, -r n^2 - 2n(2n-1).
    int bottom_exponent() const { return -r * n * n - 2 * n * (2 * n - 1); }
};

/// q^{q_exp} a^{a_exp}
struct QAMonomial {
    int q_exp = 0;
    int a_exp = 0;

    friend bool operator==(const QAMonomial&, const QAMonomial&) = default;
};

/// Satake parameters of the lift: a_0 = p^{nk - n/2} a^{-n} and
/// a_i = a p^{-n - 1/2 + i}, written in q = p^{1/2}.
struct IkedaSatakePoint {
    QAMonomial a0;
    std::vector<QAMonomial> ai;
};

inline IkedaSatakePoint satake_point(const IkedaContext& ctx) {
    ctx.validate();
    IkedaSatakePoint pt;
    pt.a0 = {2 * ctx.n * ctx.k - ctx.n, -ctx.n};
    for (int i = 1; i <= ctx.genus(); ++i) {
        pt.ai.push_back({2 * i - 2 * ctx.n - 1, 1});
    }
    // a_0^2 a_1 ... a_{2n} = p^{2nk - n}
    QAMonomial prod{2 * pt.a0.q_exp, 2 * pt.a0.a_exp};
    for (const auto& m : pt.ai) {
        prod.q_exp += m.q_exp;
        prod.a_exp += m.a_exp;
    }
    if (!(prod == QAMonomial{2 * (2 * ctx.n * ctx.k - ctx.n), 0})) {
        throw CheckFailed("Satake normalization a0^2 a1...a2n = p^{2nk-n} does not hold");
    }
    return pt;
}

/// Laurent polynomial in (q, a): outer variable a, coefficients in Q[q, 1/q].
using QALaurent = ALaurent<LaurentQ>;

/// Normalized eigenvalue lambda_F(p^r) / p^{r(nk - n/2)}. It does not depend
/// on k; the weight only enters when the global factor is reattached.
struct EigenvaluePoly {
    QALaurent normalized;
    IkedaContext ctx;
};

/// Sum over 0 <= d_1 <= ... <= d_{2n} <= r of
/// a^{-nr + sum d_i} q^{sum (2i - 2n - 1) d_i} Phi(delta).
inline EigenvaluePoly eigenvalue_closed_form(const IkedaContext& ctx, unsigned threads = 1) {
    ctx.validate();
    const auto deltas = enumerate_deltas(ctx.genus(), ctx.r);
    auto sum = parallel_sum<QALaurent>(deltas.size(), threads, [&](std::size_t d) {
        const auto& delta = deltas[d];
        int q_exp = 0;
        for (std::size_t i = 0; i < delta.size(); ++i) {
            q_exp += (2 * static_cast<int>(i + 1) - 2 * ctx.n - 1) * delta[i];
        }
        const int a_exp = -ctx.n * ctx.r + delta.sum();
        return QALaurent::monomial(gaussian_multinomial(delta).shifted(q_exp), a_exp);
    });
    return {std::move(sum), ctx};
}

using IkedaField = ALaurent<RatFuncQ>;

/// The Ikeda Satake point as a spherical evaluation point over Q(q)[a, 1/a],
/// with p = q^2. x_0 carries only the a-content a^{-n} of a_0, so that
/// Omega(T(p^r)) evaluated there is already the normalized eigenvalue.
inline SphericalPoint<IkedaField> ikeda_spherical_point(int n) {
    IkedaContext{n, 1, 0}.validate();
    SphericalPoint<IkedaField> pt;
    pt.p = IkedaField(RatFuncQ(LaurentQ::var(2)));
    pt.x0 = a_power<RatFuncQ>(-n);
    for (int i = 1; i <= 2 * n; ++i) {
        pt.xs.push_back(IkedaField::monomial(RatFuncQ(LaurentQ::var(2 * i - 2 * n - 1)), 1));
    }
    return pt;
}

/// Brute-force eigenvalue: the general symplectic spherical image, with the
/// full S_{2n} sum, evaluated at the Ikeda point.
inline EigenvaluePoly eigenvalue_via_oracle(const IkedaContext& ctx, unsigned threads = 1) {
    ctx.validate();
    const IkedaField value = omega_T_pr(ctx.r, ikeda_spherical_point(ctx.n), threads);
    QALaurent out;
    for (const auto& [e, c] : value.terms()) {
        auto laurent = c.as_laurent();
        if (!laurent) {
            throw OracleNotPolynomial("coefficient of a^" + std::to_string(e) + " is " + c.to_string());
        }
        out.add_term(e, *laurent);
    }
    return {std::move(out), ctx};
}

/// Extracts the Q(q) value of an element that must be constant in a.
inline RatFuncQ constant_in_a(const IkedaField& x) {
    if (x.size() > 1 || (x.size() == 1 && x.terms().begin()->first != 0)) {
        throw CheckFailed("expected a value independent of a");
    }
    return x.coeff(0);
}

struct VanishingRecord {
    Permutation sigma;
    RatFuncQ value;
    /// 1-based positions i < j with sigma(i) = sigma(j) + 1; 0 for the identity.
    int i = 0;
    int j = 0;
    /// The factor 1 - p^{-1} a_{sigma(i)}/a_{sigma(j)} vanishes.
    bool certificate_zero = false;

    bool identity() const { return is_identity(sigma); }
    bool ok() const { return identity() ? !value.is_zero() : (value.is_zero() && certificate_zero); }
};

struct VanishingReport {
    int n = 0;
    std::vector<VanishingRecord> records;

    bool ok() const {
        for (const auto& r : records) {
            if (!r.ok()) {
                return false;
            }
        }
        return true;
    }

    void throw_if_failed() const {
        for (const auto& r : records) {
            if (!r.ok()) {
                throw CheckFailed("c(sigma) check failed at sigma = " + permutation_string(r.sigma) +
                                  ", value " + r.value.to_string());
            }
        }
    }
};

/// Evaluates c(sigma) at the Ikeda point for every sigma in S_{2n}. The
/// identity must give a nonzero value and every other sigma exactly zero.
inline VanishingReport vanishing_check(int n, unsigned threads = 1) {
    const auto point = ikeda_spherical_point(n);
    const auto perms = all_permutations(point.rank());
    VanishingReport report{n, std::vector<VanishingRecord>(perms.size())};
    const IkedaField one(1);
    const IkedaField p_inv = one / point.p;
    parallel_for(perms.size(), threads, [&](std::size_t s) {
        auto& rec = report.records[s];
        rec.sigma = perms[s];
        rec.value = constant_in_a(c_factor(rec.sigma, point));
        if (rec.identity()) {
            return;
        }
        // tau = sigma^{-1} has a descent tau(m) > tau(m+1); take
        // j = tau(m), i = tau(m+1).
        Permutation tau(rec.sigma.size());
        for (std::size_t x = 0; x < tau.size(); ++x) {
            tau[static_cast<std::size_t>(rec.sigma[x])] = static_cast<int>(x);
        }
        for (std::size_t m = 0; m + 1 < tau.size(); ++m) {
            if (tau[m] > tau[m + 1]) {
                const auto jj = static_cast<std::size_t>(tau[m]);
                const auto ii = static_cast<std::size_t>(tau[m + 1]);
                rec.i = static_cast<int>(ii) + 1;
                rec.j = static_cast<int>(jj) + 1;
                const auto si = static_cast<std::size_t>(rec.sigma[ii]);
                const auto sj = static_cast<std::size_t>(rec.sigma[jj]);
                rec.certificate_zero = (one - p_inv * point.xs[si] / point.xs[sj]).is_zero();
                break;
            }
        }
    });
    return report;
}

struct PcIdentitySides {
    RatFuncQ lhs;
    RatFuncQ rhs;

    bool equal() const { return lhs == rhs; }
};

/// Left side: P^{k(delta)}(p^{-1})^{-1} c(identity) at the Ikeda point.
/// Right side: Phi(delta) from the Gaussian multinomial.
inline PcIdentitySides pc_identity_sides(int n, const DeltaTuple& delta) {
    const auto point = ikeda_spherical_point(n);
    if (delta.size() != point.rank()) {
        throw DomainError("delta must have length 2n");
    }
    const IkedaField c_id = c_factor(identity_permutation(point.rank()), point);
    const IkedaField lhs = c_id / normalizer_P(multiplicity_signature(delta), point.p);
    return {constant_in_a(lhs), RatFuncQ(gaussian_multinomial(delta))};
}

inline bool pc_identity_check(int n, const DeltaTuple& delta) { return pc_identity_sides(n, delta).equal(); }

/// c_m with lambda~ = sum_m c_m q^m; each c_m lies in Z[a, 1/a].
inline std::map<int, ALaurent<Rational>> coefficients(const EigenvaluePoly& poly) {
    std::map<int, ALaurent<Rational>> out;
    for (const auto& [a_exp, qpoly] : poly.normalized.terms()) {
        for (const auto& [q_exp, c] : qpoly.terms()) {
            if (!c.is_integer()) {
                throw NonIntegerCoefficient("coefficient of q^" + std::to_string(q_exp) + " a^" +
                                            std::to_string(a_exp) + " is " + c.to_string());
            }
            out[q_exp].add_term(a_exp, c);
        }
    }
    return out;
}

struct CoefficientBound {
    int m = 0;
    Integer value_at_one;   // |c_m| at a = 1
    Integer sum_bound;      // 2 (2n)^{rn^2 - m}
    Integer root_bound;     // (4n)^{rn^2 - m}

    bool ok() const { return value_at_one <= sum_bound && value_at_one <= root_bound; }
};

struct BoundsReport {
    IkedaContext ctx;
    int support_min = 0;
    int support_max = 0;
    bool support_ok = false;
    ALaurent<Rational> leading;
    bool leading_ok = false;
    std::vector<CoefficientBound> entries;

    bool ok() const {
        if (!support_ok || !leading_ok) {
            return false;
        }
        for (const auto& e : entries) {
            if (!e.ok()) {
                return false;
            }
        }
        return true;
    }

    void throw_if_failed() const {
        if (!support_ok) {
            throw BoundViolated("support [" + std::to_string(support_min) + ", " + std::to_string(support_max) +
                                "] leaves the window [" + std::to_string(ctx.bottom_exponent()) + ", " +
                                std::to_string(ctx.top_exponent()) + "]");
        }
        if (!leading_ok) {
            throw BoundViolated("c_" + std::to_string(ctx.top_exponent()) + " != 1");
        }
        for (const auto& e : entries) {
            if (!e.ok()) {
                throw BoundViolated("m = " + std::to_string(e.m) + ": |c_m| = " + e.value_at_one.get_str() +
                                    " exceeds bound " + e.root_bound.get_str());
            }
        }
    }
};

/// Support window, leading coefficient and the size bound on every c_m.
inline BoundsReport verify_bounds(const EigenvaluePoly& poly) {
    const IkedaContext& ctx = poly.ctx;
    const auto cm = coefficients(poly);
    BoundsReport rep;
    rep.ctx = ctx;
    const int top = ctx.top_exponent();
    const int bottom = ctx.bottom_exponent();
    if (!cm.empty()) {
        rep.support_min = cm.begin()->first;
        rep.support_max = cm.rbegin()->first;
    }
    rep.support_ok = !cm.empty() && rep.support_min >= bottom && rep.support_max <= top;
    if (auto it = cm.find(top); it != cm.end()) {
        rep.leading = it->second;
    }
    rep.leading_ok = rep.leading == ALaurent<Rational>(1);

    const Integer two_n(2 * ctx.n);
    const Integer four_n(4 * ctx.n);
    for (int m = std::min(bottom, rep.support_min); m < top; ++m) {
        CoefficientBound b;
        b.m = m;
        if (auto it = cm.find(m); it != cm.end()) {
            b.value_at_one = abs(it->second.at_one()).numerator();
        }
        const auto d = static_cast<unsigned long>(top - m);
        b.sum_bound = 2 * pow(two_n, d);
        b.root_bound = pow(four_n, d);
        rep.entries.push_back(std::move(b));
    }
    return rep;
}

inline BoundsReport verify_bounds(const IkedaContext& ctx, unsigned threads = 1) {
    return verify_bounds(eigenvalue_closed_form(ctx, threads));
}

/// lambda~(q, a) == lambda~(q, 1/a)
inline bool is_a_symmetric(const EigenvaluePoly& poly) { return poly.normalized == poly.normalized.inverted(); }

}  // namespace ikeda
