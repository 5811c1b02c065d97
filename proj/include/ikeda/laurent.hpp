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

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ikeda/errors.hpp"
#include "ikeda/rational.hpp"

namespace ikeda {

/// Sparse Laurent polynomial in one formal variable over the rationals.
///
/// Throughout the engine the variable is q = p^{1/2}, so p = q^2 and every
/// half-integral power of p becomes an integral power of q. The same type is
/// also used for ordinary polynomials in an auxiliary variable (see `phi`).
/// Zero coefficients are never stored; the zero polynomial is the empty map.
class LaurentQ {
public:
    using TermMap = std::map<int, Rational>;

    LaurentQ() = default;
    LaurentQ(const Rational& c) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) {
            terms_.emplace(0, c);
        }
    }
    LaurentQ(long c) : LaurentQ(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    LaurentQ(int c) : LaurentQ(Rational(c)) {}   // NOLINT(google-explicit-constructor)

    static LaurentQ monomial(const Rational& c, int exponent) {
        LaurentQ out;
        if (!c.is_zero()) {
            out.terms_.emplace(exponent, c);
        }
        return out;
    }

    /// q^exponent
    static LaurentQ var(int exponent = 1) { return monomial(Rational(1), exponent); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one(); }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t size() const { return terms_.size(); }

    Rational coeff(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Both degrees are 0 for the zero polynomial.
    int degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
    int low_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    const Rational& leading_coeff() const { return terms_.rbegin()->second; }

    void add_term(int exponent, const Rational& c) {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(exponent, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    LaurentQ operator-() const {
        LaurentQ out;
        for (const auto& [e, c] : terms_) {
            out.terms_.emplace_hint(out.terms_.end(), e, -c);
        }
        return out;
    }

    LaurentQ& operator+=(const LaurentQ& o) {
        for (const auto& [e, c] : o.terms_) {
            add_term(e, c);
        }
        return *this;
    }
    LaurentQ& operator-=(const LaurentQ& o) {
        for (const auto& [e, c] : o.terms_) {
            add_term(e, -c);
        }
        return *this;
    }
    LaurentQ& operator*=(const LaurentQ& o) { return *this = *this * o; }

    friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
    friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }
    friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
        LaurentQ out;
        if (a.is_zero() || b.is_zero()) {
            return out;
        }
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                out.add_term(ea + eb, ca * cb);
            }
        }
        return out;
    }

    friend bool operator==(const LaurentQ& a, const LaurentQ& b) { return a.terms_ == b.terms_; }

    /// Multiplies by q^s.
    LaurentQ shifted(int s) const {
        LaurentQ out;
        for (const auto& [e, c] : terms_) {
            out.terms_.emplace_hint(out.terms_.end(), e + s, c);
        }
        return out;
    }

    LaurentQ scaled(const Rational& s) const {
        if (s.is_zero()) {
            return {};
        }
        LaurentQ out;
        for (const auto& [e, c] : terms_) {
            out.terms_.emplace_hint(out.terms_.end(), e, c * s);
        }
        return out;
    }

    /// Substitutes q -> q^k (k may be negative).
    LaurentQ substitute_power(int k) const {
        LaurentQ out;
        for (const auto& [e, c] : terms_) {
            out.add_term(e * k, c);
        }
        return out;
    }

    std::string to_string(const std::string& var = "q") const {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            std::string coef = c.to_string();
            const bool negative = c.sign() < 0;
            if (negative) {
                coef.erase(0, 1);
            }
            if (out.empty()) {
                out += negative ? "-" : "";
            } else {
                out += negative ? " - " : " + ";
            }
            if (e == 0) {
                out += coef;
                continue;
            }
            if (coef != "1") {
                out += coef + "*";
            }
            out += var;
            if (e != 1) {
                out += "^" + std::to_string(e);
            }
        }
        return out;
    }

private:
    TermMap terms_;
};

namespace detail {

/// Dense coefficient vector, index = exponent, no trailing zeros.
using Dense = std::vector<Rational>;

inline void trim(Dense& d) {
    while (!d.empty() && d.back().is_zero()) {
        d.pop_back();
    }
}

/// Dense form of q^{-low} * x, where low is the lowest exponent of x.
inline Dense to_dense(const LaurentQ& x) {
    Dense d;
    if (x.is_zero()) {
        return d;
    }
    const int low = x.low_degree();
    d.resize(static_cast<std::size_t>(x.degree() - low + 1));
    for (const auto& [e, c] : x.terms()) {
        d[static_cast<std::size_t>(e - low)] = c;
    }
    return d;
}

inline LaurentQ from_dense(const Dense& d, int shift = 0) {
    LaurentQ out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        out.add_term(static_cast<int>(i) + shift, d[i]);
    }
    return out;
}

/// Polynomial long division; returns (quotient, remainder).
inline std::pair<Dense, Dense> divmod(Dense num, const Dense& den) {
    if (den.empty()) {
        throw DivisionByZero();
    }
    if (num.size() < den.size()) {
        return {Dense{}, std::move(num)};
    }
    const std::size_t dd = den.size() - 1;
    Dense quot(num.size() - dd);
    const Rational lead_inv = Rational(1) / den.back();
    for (std::size_t i = num.size(); i-- > dd;) {
        if (num[i].is_zero()) {
            continue;
        }
        const Rational f = num[i] * lead_inv;
        quot[i - dd] = f;
        for (std::size_t j = 0; j <= dd; ++j) {
            if (!den[j].is_zero()) {
                num[i - dd + j] -= f * den[j];
            }
        }
    }
    num.resize(dd);
    trim(num);
    trim(quot);
    return {std::move(quot), std::move(num)};
}

inline void make_monic(Dense& d) {
    if (d.empty() || d.back().is_one()) {
        return;
    }
    const Rational inv = Rational(1) / d.back();
    for (auto& c : d) {
        c *= inv;
    }
}

/// Monic gcd over Q by the Euclidean algorithm.
inline Dense gcd(Dense a, Dense b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(std::move(a), b).second;
        a = std::move(b);
        b = std::move(r);
    }
    make_monic(a);
    return a;
}

}  // namespace detail

/// Exact quotient a / b; InexactDivision if b does not divide a.
inline LaurentQ exact_div(const LaurentQ& a, const LaurentQ& b) {
    if (b.is_zero()) {
        throw DivisionByZero();
    }
    if (a.is_zero()) {
        return {};
    }
    auto [quot, rem] = detail::divmod(detail::to_dense(a), detail::to_dense(b));
    if (!rem.empty()) {
        throw InexactDivision("polynomial " + b.to_string() + " does not divide " + a.to_string());
    }
    return detail::from_dense(quot, a.low_degree() - b.low_degree());
}

/// Substitutes q = point.
inline Rational evaluate(const LaurentQ& poly, const Rational& point) {
    if (poly.is_zero()) {
        return Rational(0);
    }
    if (point.is_zero()) {
        if (poly.low_degree() < 0) {
            throw ZeroAtNegativeExponent();
        }
        return poly.coeff(0);
    }
    // Horner over the dense form, then restore the shift.
    const auto dense = detail::to_dense(poly);
    Rational acc;
    for (auto it = dense.rbegin(); it != dense.rend(); ++it) {
        acc = acc * point + *it;
    }
    return acc * pow(point, poly.low_degree());
}

inline bool divides(const LaurentQ& b, const LaurentQ& a) {
    if (b.is_zero()) {
        return a.is_zero();
    }
    return detail::divmod(detail::to_dense(a), detail::to_dense(b)).second.empty();
}

}  // namespace ikeda
