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
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "ikeda/errors.hpp"
#include "ikeda/ikeda.hpp"
#include "ikeda/parallel.hpp"

namespace ikeda {

/// (4n (2 r n^2 + 2n(2n - 1)))^2; above this every lambda_F(p^r) is positive.
inline std::uint64_t positivity_threshold(const IkedaContext& ctx) {
    ctx.validate();
    if (ctx.r < 1) {
        throw DomainError("positivity threshold needs r >= 1");
    }
    const auto n = static_cast<std::uint64_t>(ctx.n);
    const auto r = static_cast<std::uint64_t>(ctx.r);
    const std::uint64_t root = 4 * n * (2 * r * n * n + 2 * n * (2 * n - 1));
    return root * root;
}

inline bool is_prime(std::uint64_t v) {
    if (v < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            return false;
        }
    }
    return true;
}

/// The first `count` primes strictly greater than `bound`.
inline std::vector<std::uint64_t> primes_above(std::uint64_t bound, std::size_t count) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t v = bound + 1; out.size() < count; ++v) {
        if (is_prime(v)) {
            out.push_back(v);
        }
    }
    return out;
}

/// A floating-point value with a crude absolute error bound.
struct NumericValue {
    double value = 0.0;
    double error = 0.0;
};

/// Real value of lambda~ (normalized = true) or lambda = p^{r(nk - n/2)} lambda~
/// at prime p with a + 1/a = t.
///
/// Uses a^j + a^{-j} = s_j(t), s_0 = 2, s_1 = t, s_j = t s_{j-1} - s_{j-2},
/// which needs the a <-> 1/a symmetry of lambda~. Terms are accumulated with
/// Neumaier summation. The error bound is eps * (term count + max a-degree)
/// * max |term|. |t| <= 2 unless `allow_real_a` (a real, a + 1/a = t).
inline NumericValue evaluate_numeric(const EigenvaluePoly& poly, double p, double t, bool normalized = true,
                                     bool allow_real_a = false) {
    if (!(p >= 2.0) || !std::isfinite(p)) {
        throw DomainError("evaluate_numeric needs p >= 2");
    }
    if (!std::isfinite(t) || (!allow_real_a && std::abs(t) > 2.0)) {
        throw DomainError("evaluate_numeric needs |t| <= 2");
    }
    if (!is_a_symmetric(poly)) {
        throw CheckFailed("eigenvalue polynomial is not symmetric under a <-> 1/a");
    }
    const auto& terms = poly.normalized.terms();
    int max_a = 0;
    for (const auto& [e, c] : terms) {
        max_a = std::max(max_a, std::abs(e));
    }
    std::vector<double> s(static_cast<std::size_t>(max_a) + 1);
    s[0] = 2.0;
    if (max_a >= 1) {
        s[1] = t;
    }
    for (std::size_t j = 2; j < s.size(); ++j) {
        s[j] = t * s[j - 1] - s[j - 2];
    }

    const double q = std::sqrt(p);
    double sum = 0.0;
    double comp = 0.0;
    double max_term = 0.0;
    std::size_t count = 0;
    for (const auto& [e, qpoly] : terms) {
        if (e < 0) {
            continue;  // paired with +e
        }
        const double a_part = e == 0 ? 1.0 : s[static_cast<std::size_t>(e)];
        for (const auto& [m, c] : qpoly.terms()) {
            const double term = c.to_double() * std::pow(q, m) * a_part;
            const double next = sum + term;
            comp += std::abs(sum) >= std::abs(term) ? (sum - next) + term : (term - next) + sum;
            sum = next;
            max_term = std::max(max_term, std::abs(term));
            ++count;
        }
    }
    NumericValue out;
    out.value = sum + comp;
    out.error = std::numeric_limits<double>::epsilon() * static_cast<double>(count + static_cast<std::size_t>(max_a)) *
                max_term;
    if (!normalized) {
        const auto& ctx = poly.ctx;
        const double scale = std::pow(q, ctx.r * (2 * ctx.n * ctx.k - ctx.n));
        out.value *= scale;
        out.error *= scale;
    }
    return out;
}

struct PrimeScan {
    std::uint64_t p = 0;
    bool above_threshold = false;
    double min_value = 0.0;
    double min_t = 0.0;
    double error = 0.0;  // largest error bound over the grid

    bool positive() const { return min_value > 0.0; }
    /// Positive with a margin larger than the numeric error.
    bool certified() const { return min_value > error; }
};

struct PositivityReport {
    IkedaContext ctx;
    std::uint64_t threshold = 0;
    int grid_size = 0;
    std::vector<PrimeScan> scans;

    /// Every prime above the threshold has a positive minimum.
    bool ok() const {
        for (const auto& s : scans) {
            if (s.above_threshold && !s.positive()) {
                return false;
            }
        }
        return true;
    }

    void throw_if_failed() const {
        for (const auto& s : scans) {
            if (s.above_threshold && !s.positive()) {
                throw PositivityViolated("lambda <= 0 at p = " + std::to_string(s.p) + ", t = " +
                                         std::to_string(s.min_t));
            }
        }
    }
};

/// Minimum of lambda~(p, t) over a uniform grid of t in [-2, 2] for each prime.
/// Primes at or below the threshold are scanned but only reported.
inline PositivityReport positivity_scan(const IkedaContext& ctx, const std::vector<std::uint64_t>& primes,
                                        int grid_size, unsigned threads = 1) {
    if (grid_size < 3) {
        throw DomainError("positivity scan needs a grid of at least 3 points");
    }
    PositivityReport rep;
    rep.ctx = ctx;
    rep.threshold = positivity_threshold(ctx);
    rep.grid_size = grid_size;
    const EigenvaluePoly poly = eigenvalue_closed_form(ctx);
    rep.scans.resize(primes.size());
    parallel_for(primes.size(), threads, [&](std::size_t k) {
        PrimeScan& scan = rep.scans[k];
        scan.p = primes[k];
        scan.above_threshold = primes[k] > rep.threshold;
        scan.min_value = std::numeric_limits<double>::infinity();
        for (int i = 0; i < grid_size; ++i) {
            const double t = -2.0 + 4.0 * static_cast<double>(i) / static_cast<double>(grid_size - 1);
            const NumericValue v = evaluate_numeric(poly, static_cast<double>(primes[k]), t);
            if (v.value < scan.min_value) {
                scan.min_value = v.value;
                scan.min_t = t;
            }
            scan.error = std::max(scan.error, v.error);
        }
    });
    return rep;
}

}  // namespace ikeda
