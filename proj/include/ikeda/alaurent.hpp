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

#include <functional>
#include <map>
#include <string>
#include <utility>

#include "ikeda/errors.hpp"
#include "ikeda/laurent.hpp"
#include "ikeda/ratfunc.hpp"

namespace ikeda {

inline Rational divide_coeff(const Rational& a, const Rational& b) { return a / b; }
inline RatFuncQ divide_coeff(const RatFuncQ& a, const RatFuncQ& b) { return a / b; }
inline LaurentQ divide_coeff(const LaurentQ& a, const LaurentQ& b) { return exact_div(a, b); }

/// Laurent polynomial in a formal variable `a` with coefficients in C
/// (Rational, LaurentQ or RatFuncQ).
///
/// Division is supported only by monomials c*a^e; this is all the spherical
/// evaluation needs, since every Satake coordinate of an Ikeda point is a
/// monomial in a.
template <class C>
class ALaurent {
public:
    using Coeff = C;
    using TermMap = std::map<int, C>;

    ALaurent() = default;
    ALaurent(const C& c) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) {
            terms_.emplace(0, c);
        }
    }
    ALaurent(long c) : ALaurent(C(c)) {}  // NOLINT(google-explicit-constructor)
    ALaurent(int c) : ALaurent(C(c)) {}   // NOLINT(google-explicit-constructor)

    static ALaurent monomial(const C& c, int exponent) {
        ALaurent out;
        if (!c.is_zero()) {
            out.terms_.emplace(exponent, c);
        }
        return out;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t size() const { return terms_.size(); }

    C coeff(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? C() : it->second;
    }

    void add_term(int exponent, const C& c) {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(exponent, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    ALaurent operator-() const {
        ALaurent out;
        for (const auto& [e, c] : terms_) {
            out.terms_.emplace_hint(out.terms_.end(), e, -c);
        }
        return out;
    }

    ALaurent& operator+=(const ALaurent& o) {
        for (const auto& [e, c] : o.terms_) {
            add_term(e, c);
        }
        return *this;
    }
    ALaurent& operator-=(const ALaurent& o) {
        for (const auto& [e, c] : o.terms_) {
            add_term(e, -c);
        }
        return *this;
    }
    ALaurent& operator*=(const ALaurent& o) { return *this = *this * o; }
    ALaurent& operator/=(const ALaurent& o) { return *this = *this / o; }

    friend ALaurent operator+(ALaurent x, const ALaurent& y) { return x += y; }
    friend ALaurent operator-(ALaurent x, const ALaurent& y) { return x -= y; }

    friend ALaurent operator*(const ALaurent& x, const ALaurent& y) {
        ALaurent out;
        for (const auto& [ex, cx] : x.terms_) {
            for (const auto& [ey, cy] : y.terms_) {
                out.add_term(ex + ey, cx * cy);
            }
        }
        return out;
    }

    /// Division by a monomial c*a^e. InexactDivision for any other divisor.
    friend ALaurent operator/(const ALaurent& x, const ALaurent& y) {
        if (y.is_zero()) {
            throw DivisionByZero();
        }
        if (!y.is_monomial()) {
            throw InexactDivision("ALaurent division by a non-monomial");
        }
        const auto& [ey, cy] = *y.terms_.begin();
        ALaurent out;
        for (const auto& [ex, cx] : x.terms_) {
            out.terms_.emplace_hint(out.terms_.end(), ex - ey, divide_coeff(cx, cy));
        }
        return out;
    }

    friend bool operator==(const ALaurent& x, const ALaurent& y) { return x.terms_ == y.terms_; }

    /// Substitutes a = 1.
    C at_one() const {
        C sum;
        for (const auto& [e, c] : terms_) {
            sum = sum + c;
        }
        return sum;
    }

    /// Replaces a by a^{-1}.
    ALaurent inverted() const {
        ALaurent out;
        for (const auto& [e, c] : terms_) {
            out.terms_.emplace(-e, c);
        }
        return out;
    }

    /// Applies f to every coefficient, dropping those that map to zero.
    template <class F>
    auto map_coefficients(F&& f) const -> ALaurent<std::invoke_result_t<F, const C&>> {
        ALaurent<std::invoke_result_t<F, const C&>> out;
        for (const auto& [e, c] : terms_) {
            out.add_term(e, std::invoke(f, c));
        }
        return out;
    }

private:
    TermMap terms_;
};

/// The formal variable a^exponent.
template <class C>
ALaurent<C> a_power(int exponent) {
    return ALaurent<C>::monomial(C(1), exponent);
}

}  // namespace ikeda
