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

#include <optional>
#include <string>
#include <utility>

#include "ikeda/errors.hpp"
#include "ikeda/laurent.hpp"
#include "ikeda/rational.hpp"

namespace ikeda {

/// Element of Q(q), the fraction field of LaurentQ.
///
/// Canonical form: numer / denom with gcd 1, where denom is an ordinary
/// polynomial with nonzero constant term and leading coefficient 1. All
/// powers of q are carried by the numerator. Under this form two values are
/// equal as field elements exactly when their representations are equal.
class RatFuncQ {
public:
    RatFuncQ() : denom_(1) {}
    RatFuncQ(const LaurentQ& p) : numer_(p), denom_(1) {}  // NOLINT(google-explicit-constructor)
    RatFuncQ(const Rational& c) : numer_(c), denom_(1) {}  // NOLINT(google-explicit-constructor)
    RatFuncQ(long c) : RatFuncQ(Rational(c)) {}             // NOLINT(google-explicit-constructor)
    RatFuncQ(int c) : RatFuncQ(Rational(c)) {}              // NOLINT(google-explicit-constructor)

    /// Builds numer/denom in canonical form.
    static RatFuncQ reduce(const LaurentQ& numer, const LaurentQ& denom) {
        if (denom.is_zero()) {
            throw DivisionByZero();
        }
        RatFuncQ out;
        if (numer.is_zero()) {
            return out;
        }
        detail::Dense n = detail::to_dense(numer);
        detail::Dense d = detail::to_dense(denom);
        const int shift = numer.low_degree() - denom.low_degree();
        if (d.size() > 1) {
            const detail::Dense g = detail::gcd(n, d);
            if (g.size() > 1) {
                n = detail::divmod(std::move(n), g).first;
                d = detail::divmod(std::move(d), g).first;
            }
        }
        const Rational inv = Rational(1) / d.back();
        for (auto& c : n) {
            c *= inv;
        }
        for (auto& c : d) {
            c *= inv;
        }
        out.numer_ = detail::from_dense(n, shift);
        out.denom_ = detail::from_dense(d);
        return out;
    }

    const LaurentQ& numer() const { return numer_; }
    const LaurentQ& denom() const { return denom_; }

    bool is_zero() const { return numer_.is_zero(); }
    bool is_one() const { return numer_.is_one() && denom_.is_one(); }
    bool is_laurent() const { return denom_.is_one(); }

    /// The numerator when the denominator is 1.
    std::optional<LaurentQ> as_laurent() const {
        if (!is_laurent()) {
            return std::nullopt;
        }
        return numer_;
    }

    RatFuncQ operator-() const {
        RatFuncQ out = *this;
        out.numer_ = -numer_;
        return out;
    }

    friend RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b) {
        if (a.is_zero()) {
            return b;
        }
        if (b.is_zero()) {
            return a;
        }
        if (a.denom_ == b.denom_) {
            return reduce(a.numer_ + b.numer_, a.denom_);
        }
        return reduce(a.numer_ * b.denom_ + b.numer_ * a.denom_, a.denom_ * b.denom_);
    }

    friend RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b) { return a + (-b); }

    friend RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        if (a.is_laurent() && b.is_laurent()) {
            RatFuncQ out;
            out.numer_ = a.numer_ * b.numer_;
            return out;
        }
        return reduce(a.numer_ * b.numer_, a.denom_ * b.denom_);
    }

    friend RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b) {
        if (b.is_zero()) {
            throw DivisionByZero();
        }
        if (a.is_zero()) {
            return {};
        }
        return reduce(a.numer_ * b.denom_, a.denom_ * b.numer_);
    }

    RatFuncQ& operator+=(const RatFuncQ& o) { return *this = *this + o; }
    RatFuncQ& operator-=(const RatFuncQ& o) { return *this = *this - o; }
    RatFuncQ& operator*=(const RatFuncQ& o) { return *this = *this * o; }
    RatFuncQ& operator/=(const RatFuncQ& o) { return *this = *this / o; }

    friend bool operator==(const RatFuncQ& a, const RatFuncQ& b) {
        return a.numer_ == b.numer_ && a.denom_ == b.denom_;
    }

    std::string to_string(const std::string& var = "q") const {
        if (is_laurent()) {
            return numer_.to_string(var);
        }
        return "(" + numer_.to_string(var) + ")/(" + denom_.to_string(var) + ")";
    }

private:
    LaurentQ numer_;
    LaurentQ denom_;
};

inline RatFuncQ ratfunc_reduce(const LaurentQ& numer, const LaurentQ& denom) {
    return RatFuncQ::reduce(numer, denom);
}

/// Substitutes q = point; PoleAtPoint if the denominator vanishes there.
inline Rational evaluate(const RatFuncQ& f, const Rational& point) {
    const Rational d = evaluate(f.denom(), point);
    if (d.is_zero()) {
        throw PoleAtPoint("rational function has a pole at q = " + point.to_string());
    }
    return evaluate(f.numer(), point) / d;
}

}  // namespace ikeda
