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
#include <numeric>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ikeda/errors.hpp"
#include "ikeda/parallel.hpp"
#include "ikeda/qcomb.hpp"

// Exact point evaluation of the spherical images of Hecke operators for GL_m
// and GSp_{2m}. Every function is a template over the coefficient field F,
// which needs +, -, *, / (by the values that actually occur), unary minus,
// is_zero(), and construction from int. Rational, RatFuncQ and
// ALaurent<RatFuncQ> all qualify.

namespace ikeda {

/// sigma[i] is the image of i; indices are 0-based.
using Permutation = std::vector<int>;

inline Permutation identity_permutation(std::size_t m) {
    Permutation id(m);
    std::iota(id.begin(), id.end(), 0);
    return id;
}

inline bool is_identity(const Permutation& sigma) {
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (sigma[i] != static_cast<int>(i)) {
            return false;
        }
    }
    return true;
}

/// All m! permutations in lexicographic order (identity first).
inline std::vector<Permutation> all_permutations(std::size_t m) {
    std::vector<Permutation> out;
    Permutation sigma = identity_permutation(m);
    do {
        out.push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

/// One-line notation with 1-based images, e.g. "[2,1,3]".
inline std::string permutation_string(const Permutation& sigma) {
    std::string out = "[";
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        out += (i ? "," : "") + std::to_string(sigma[i] + 1);
    }
    return out + "]";
}

/// The point (x_0; x_1, ..., x_m) together with the value substituted for p.
template <class F>
struct SphericalPoint {
    F p;
    F x0;
    std::vector<F> xs;

    std::size_t rank() const { return xs.size(); }

    void validate() const {
        if (p.is_zero()) {
            throw ZeroCoordinate("p must be nonzero");
        }
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (xs[i].is_zero()) {
                throw ZeroCoordinate("x_" + std::to_string(i + 1) + " is zero");
            }
        }
    }
};

/// base^e for integer e (negative e divides).
template <class F>
F field_pow(const F& base, int e) {
    if (e < 0) {
        return F(1) / field_pow(base, -e);
    }
    F out(1);
    F b = base;
    for (unsigned u = static_cast<unsigned>(e); u != 0; u >>= 1) {
        if (u & 1u) {
            out = out * b;
        }
        if (u > 1) {
            b = b * b;
        }
    }
    return out;
}

/// phi_m(x) = prod_{i=1}^m (x^i - 1) evaluated in F.
template <class F>
F phi_at(int m, const F& x) {
    F out(1);
    F xi(1);
    for (int i = 1; i <= m; ++i) {
        xi = xi * x;
        out = out * (xi - F(1));
    }
    return out;
}

/// P^{k}(p^{-1}) = phi_{k_1}(p^{-1}) ... phi_{k_t}(p^{-1}) / phi_1(p^{-1})^m.
template <class F>
F normalizer_P(const MultiplicitySignature& sig, const F& p) {
    const F p_inv = F(1) / p;
    F num(1);
    for (int k : sig.parts) {
        num = num * phi_at(k, p_inv);
    }
    return num / field_pow(phi_at(1, p_inv), sig.total());
}

/// s_i(values); s_0 = 1.
template <class F>
F elementary_symmetric(std::size_t i, std::span<const F> values) {
    if (i > values.size()) {
        throw DomainError("elementary_symmetric index exceeds the number of values");
    }
    // e[j] holds s_j of the prefix processed so far.
    std::vector<F> e(i + 1, F(0));
    e[0] = F(1);
    for (const F& v : values) {
        for (std::size_t j = i; j >= 1; --j) {
            e[j] = e[j] + e[j - 1] * v;
        }
    }
    return e[i];
}

/// c(sigma) = prod_{i<j} (1 - p^{-1} x_{s(i)}/x_{s(j)}) / (1 - x_{s(i)}/x_{s(j)}).
template <class F>
F c_factor(const Permutation& sigma, const SphericalPoint<F>& point) {
    const std::size_t m = point.rank();
    if (sigma.size() != m) {
        throw DomainError("permutation size does not match the point rank");
    }
    const F one(1);
    const F p_inv = one / point.p;
    F out(1);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const auto si = static_cast<std::size_t>(sigma[i]);
            const auto sj = static_cast<std::size_t>(sigma[j]);
            const F ratio = point.xs[si] / point.xs[sj];
            const F den = one - ratio;
            if (den.is_zero()) {
                throw PoleAtPoint("x_" + std::to_string(si + 1) + " = x_" + std::to_string(sj + 1) +
                                  " makes a c-factor denominator vanish");
            }
            if (!out.is_zero()) {
                out = out * ((one - p_inv * ratio) / den);
            }
        }
    }
    return out;
}

namespace detail {

template <class F>
F monomial_term(const DeltaTuple& delta, const Permutation& sigma, const std::vector<F>& xs) {
    F mon(1);
    for (std::size_t i = 0; i < delta.size(); ++i) {
        if (delta[i] != 0) {
            mon = mon * field_pow(xs[static_cast<std::size_t>(sigma[i])], delta[i]);
        }
    }
    return mon;
}

/// Sum over sigma of x_sigma^delta * c(sigma), with the c-values supplied.
template <class F>
F q_delta_with(const DeltaTuple& delta, const std::vector<Permutation>& perms, const std::vector<F>& cs,
               const std::vector<F>& xs) {
    F sum(0);
    for (std::size_t s = 0; s < perms.size(); ++s) {
        if (!cs[s].is_zero()) {
            sum = sum + monomial_term(delta, perms[s], xs) * cs[s];
        }
    }
    return sum;
}

template <class F>
std::vector<F> c_table(const std::vector<Permutation>& perms, const SphericalPoint<F>& point, unsigned threads) {
    std::vector<F> cs(perms.size());
    parallel_for(perms.size(), threads, [&](std::size_t s) { cs[s] = c_factor(perms[s], point); });
    return cs;
}

inline void require_rank(const DeltaTuple& delta, std::size_t rank) {
    if (delta.size() != rank) {
        throw DomainError("delta length " + std::to_string(delta.size()) + " does not match rank " +
                          std::to_string(rank));
    }
}

}  // namespace detail

/// Q_delta(x) = sum over all sigma in S_m of x_{s(1)}^{d_1} ... x_{s(m)}^{d_m} c(sigma).
template <class F>
F q_delta(const DeltaTuple& delta, const SphericalPoint<F>& point) {
    detail::require_rank(delta, point.rank());
    const auto perms = all_permutations(point.rank());
    F sum(0);
    for (const auto& sigma : perms) {
        const F c = c_factor(sigma, point);
        if (!c.is_zero()) {
            sum = sum + detail::monomial_term(delta, sigma, point.xs) * c;
        }
    }
    return sum;
}

/// f_p-style rescaling: x_i -> factor * x_i (x_0 and p unchanged).
template <class F>
SphericalPoint<F> scale_point(const SphericalPoint<F>& point, const F& factor) {
    SphericalPoint<F> out = point;
    for (auto& x : out.xs) {
        x = x * factor;
    }
    return out;
}

/// omega(t(p^{d_1}, ..., p^{d_m})) for GL_m, evaluated as
/// P^{-1} p^{-sum (m-i) d_i} Q_delta(p^{-1} x).
template <class F>
F omega_t(const DeltaTuple& delta, const SphericalPoint<F>& point) {
    detail::require_rank(delta, point.rank());
    const std::size_t m = point.rank();
    int weight = 0;
    for (std::size_t i = 0; i < m; ++i) {
        weight += static_cast<int>(m - i - 1) * delta[i];
    }
    const F p_inv = F(1) / point.p;
    const F q = q_delta(delta, scale_point(point, p_inv));
    return q * field_pow(p_inv, weight) / normalizer_P(multiplicity_signature(delta), point.p);
}

/// Omega(T(p^r)) = x_0^r sum_delta P^{k(delta)}(p^{-1})^{-1} Q_delta(x).
///
/// The c-factors do not depend on delta, so they are computed once per point.
template <class F>
F omega_T_pr(int r, const SphericalPoint<F>& point, unsigned threads = 1) {
    if (r < 0) {
        throw DomainError("omega_T_pr requires r >= 0");
    }
    const auto perms = all_permutations(point.rank());
    const auto cs = detail::c_table(perms, point, threads);
    const auto deltas = enumerate_deltas(static_cast<int>(point.rank()), r);
    const F sum = parallel_sum<F>(deltas.size(), threads, [&](std::size_t d) {
        const auto& delta = deltas[d];
        return detail::q_delta_with(delta, perms, cs, point.xs) / normalizer_P(multiplicity_signature(delta), point.p);
    }, F(0));
    return field_pow(point.x0, r) * sum;
}

/// Omega(T(p^r)) = x_0^r sum_delta p^{sum (m-i+1) d_i} omega(t(p^delta)),
/// going through the GL_m spherical image.
template <class F>
F omega_T_pr_via_gl(int r, const SphericalPoint<F>& point, unsigned threads = 1) {
    if (r < 0) {
        throw DomainError("omega_T_pr_via_gl requires r >= 0");
    }
    const std::size_t m = point.rank();
    const auto deltas = enumerate_deltas(static_cast<int>(m), r);
    const F sum = parallel_sum<F>(deltas.size(), threads, [&](std::size_t d) {
        const auto& delta = deltas[d];
        int weight = 0;
        for (std::size_t i = 0; i < m; ++i) {
            weight += static_cast<int>(m - i) * delta[i];
        }
        return field_pow(point.p, weight) * omega_t(delta, point);
    }, F(0));
    return field_pow(point.x0, r) * sum;
}

/// A generator of the symplectic Weyl group: a coordinate permutation, or
/// tau_i (x_0 -> x_0 x_i, x_i -> 1/x_i). Indices are 0-based.
struct WeylGenerator {
    struct Permute {
        Permutation sigma;
    };
    struct Tau {
        std::size_t index;
    };
    std::variant<Permute, Tau> op;

    std::string to_string() const {
        if (const auto* t = std::get_if<Tau>(&op)) {
            return "tau_" + std::to_string(t->index + 1);
        }
        return "sigma" + permutation_string(std::get<Permute>(op).sigma);
    }
};

/// Adjacent transpositions and tau_1, ..., tau_m; together they generate W_m.
inline std::vector<WeylGenerator> weyl_generators(std::size_t m) {
    std::vector<WeylGenerator> out;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        Permutation s = identity_permutation(m);
        std::swap(s[i], s[i + 1]);
        out.push_back({WeylGenerator::Permute{std::move(s)}});
    }
    for (std::size_t i = 0; i < m; ++i) {
        out.push_back({WeylGenerator::Tau{i}});
    }
    return out;
}

template <class F>
SphericalPoint<F> weyl_transform(const SphericalPoint<F>& point, const WeylGenerator& g) {
    SphericalPoint<F> out = point;
    if (const auto* perm = std::get_if<WeylGenerator::Permute>(&g.op)) {
        if (perm->sigma.size() != point.rank()) {
            throw DomainError("permutation size does not match the point rank");
        }
        // sigma(x_i) = x_{sigma(i)}
        for (std::size_t i = 0; i < point.rank(); ++i) {
            out.xs[i] = point.xs[static_cast<std::size_t>(perm->sigma[i])];
        }
        return out;
    }
    const std::size_t i = std::get<WeylGenerator::Tau>(g.op).index;
    if (i >= point.rank()) {
        throw DomainError("tau index out of range");
    }
    if (point.xs[i].is_zero()) {
        throw ZeroCoordinate("tau_" + std::to_string(i + 1) + " applied at x_" + std::to_string(i + 1) + " = 0");
    }
    out.x0 = point.x0 * point.xs[i];
    out.xs[i] = F(1) / point.xs[i];
    return out;
}

}  // namespace ikeda
