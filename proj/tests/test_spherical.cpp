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

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "generators.hpp"
#include "ikeda/spherical.hpp"

namespace ikeda {
namespace {

using Point = SphericalPoint<Rational>;

Point point(Rational p, Rational x0, std::vector<Rational> xs) { return Point{std::move(p), std::move(x0), std::move(xs)}; }

Point random_point(testing::Gen& g, std::size_t m) {
    static const int primes[] = {2, 3, 5, 7, 11, 13};
    while (true) {
        Point pt{Rational(primes[g.uniform(0, 5)]), g.nonzero_rational(), {}};
        for (std::size_t i = 0; i < m; ++i) {
            pt.xs.push_back(g.nonzero_rational(7));
        }
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) {
            for (std::size_t j = i + 1; j < m && ok; ++j) {
                // distinct before and after any tau_i
                ok = pt.xs[i] != pt.xs[j] && pt.xs[i] * pt.xs[j] != Rational(1);
            }
        }
        if (ok) {
            return pt;
        }
    }
}

TEST(ElementarySymmetric, Examples) {
    const std::vector<Rational> xs{2, 3};
    EXPECT_EQ(elementary_symmetric<Rational>(1, xs), Rational(5));
    EXPECT_EQ(elementary_symmetric<Rational>(2, xs), Rational(6));
    EXPECT_EQ(elementary_symmetric<Rational>(0, xs), Rational(1));
    EXPECT_EQ(elementary_symmetric<Rational>(0, std::vector<Rational>{}), Rational(1));
    EXPECT_THROW(elementary_symmetric<Rational>(3, xs), DomainError);
}

TEST(CFactor, Examples) {
    const auto id = identity_permutation(2);
    EXPECT_EQ(c_factor(id, point(5, 1, {2, 3})), Rational(13, 5));
    // x_1 / x_2 = p kills the numerator
    EXPECT_EQ(c_factor(id, point(5, 1, {10, 2})), Rational(0));
    EXPECT_THROW(c_factor(id, point(5, 1, {2, 2})), PoleAtPoint);
    EXPECT_THROW(c_factor(identity_permutation(3), point(5, 1, {2, 4, 2})), PoleAtPoint);
}

TEST(QDelta, Examples) {
    const auto pt = point(5, 1, {2, 3});
    EXPECT_EQ(q_delta(DeltaTuple({0, 1}), pt), Rational(5));
    EXPECT_EQ(q_delta(DeltaTuple({0, 0}), pt), Rational(6, 5));
    EXPECT_EQ(q_delta(DeltaTuple({1, 1}), pt), Rational(36, 5));
    EXPECT_THROW(q_delta(DeltaTuple({0, 1, 1}), pt), DomainError);
}

TEST(OmegaT, Examples) {
    const auto pt = point(5, 1, {2, 3});
    EXPECT_EQ(omega_t(DeltaTuple({0, 1}), pt), Rational(1));
    EXPECT_EQ(omega_t(DeltaTuple({1, 1}), pt), Rational(6, 125));
    EXPECT_EQ(omega_t(DeltaTuple({0, 0}), pt), Rational(1));
    EXPECT_EQ(omega_t(DeltaTuple({0, 0, 0}), point(7, 1, {2, 3, -5})), Rational(1));
}

TEST(OmegaTpr, RankOne) {
    // x_0 (1 + x_1)
    EXPECT_EQ(omega_T_pr(1, point(5, 7, {3})), Rational(28));
    EXPECT_EQ(omega_T_pr(0, point(5, 7, {3})), Rational(1));
    // x_0^3 (1 + x_1 + x_1^2 + x_1^3)
    EXPECT_EQ(omega_T_pr(3, point(5, 2, {3})), Rational(8 * 40));
}

// Values frozen from an independent symbolic evaluation of the same sums
// (full permutation sums in a computer algebra system).
TEST(OmegaTpr, FrozenValues) {
    const auto pt = point(5, 7, {2, 3});
    EXPECT_EQ(omega_T_pr(1, pt), Rational(84));  // x_0 (1 + x_1)(1 + x_2)
    EXPECT_EQ(omega_T_pr(2, pt), Rational(23471, 5));
    EXPECT_EQ(omega_T_pr(2, point(5, 7, {2, 3, -4})), Rational(1360191, 25));
}

TEST(OmegaTpr, RoutesAgreeAndThreadCountIrrelevant) {
    testing::Gen g(11);
    for (std::size_t m = 1; m <= 3; ++m) {
        for (int r = 0; r <= 2; ++r) {
            for (int k = 0; k < 3; ++k) {
                const auto pt = random_point(g, m);
                const Rational direct = omega_T_pr(r, pt);
                ASSERT_EQ(direct, omega_T_pr_via_gl(r, pt));
                ASSERT_EQ(direct, omega_T_pr(r, pt, 3));
            }
        }
    }
}

TEST(WeylTransform, Examples) {
    const auto pt = point(5, 7, {2, 3});
    const auto gens = weyl_generators(2);
    ASSERT_EQ(gens.size(), 3u);  // (1 2), tau_1, tau_2
    const auto tau1 = weyl_transform(pt, gens[1]);
    EXPECT_EQ(tau1.x0, Rational(14));
    EXPECT_EQ(tau1.xs, (std::vector<Rational>{Rational(1, 2), 3}));
    const auto swapped = weyl_transform(pt, gens[0]);
    EXPECT_EQ(swapped.x0, Rational(7));
    EXPECT_EQ(swapped.xs, (std::vector<Rational>{3, 2}));
    const auto back = weyl_transform(tau1, gens[1]);
    EXPECT_EQ(back.x0, pt.x0);
    EXPECT_EQ(back.xs, pt.xs);
    EXPECT_THROW(weyl_transform(point(5, 7, {0, 3}), gens[1]), ZeroCoordinate);
}

TEST(OmegaTpr, WeylInvariant) {
    testing::Gen g(12);
    for (std::size_t m = 1; m <= 3; ++m) {
        for (int r = 1; r <= 2; ++r) {
            const auto pt = random_point(g, m);
            const Rational v = omega_T_pr(r, pt);
            for (const auto& gen : weyl_generators(m)) {
                ASSERT_EQ(v, omega_T_pr(r, weyl_transform(pt, gen))) << gen.to_string();
            }
        }
    }
}

TEST(QDelta, SymmetricInCoordinates) {
    testing::Gen g(13);
    for (std::size_t m = 2; m <= 4; ++m) {
        const auto pt = random_point(g, m);
        for (const auto& delta : enumerate_deltas(static_cast<int>(m), 2)) {
            const Rational v = q_delta(delta, pt);
            for (const auto& gen : weyl_generators(m)) {
                if (std::holds_alternative<WeylGenerator::Permute>(gen.op)) {
                    ASSERT_EQ(v, q_delta(delta, weyl_transform(pt, gen)));
                }
            }
        }
    }
}

TEST(OmegaT, ElementarySymmetricIdentity) {
    testing::Gen g(14);
    for (std::size_t m = 1; m <= 4; ++m) {
        for (int k = 0; k < 5; ++k) {
            const auto pt = random_point(g, m);
            for (std::size_t i = 0; i <= m; ++i) {
                std::vector<int> d(m, 0);
                std::fill(d.end() - static_cast<long>(i), d.end(), 1);
                const Rational expected = pow(pt.p, -static_cast<long>(i * (i + 1) / 2)) *
                                          elementary_symmetric<Rational>(i, pt.xs);
                ASSERT_EQ(omega_t(DeltaTuple(d, 1), pt), expected);
            }
        }
    }
}

TEST(OmegaTpr, OnlyPowersOfPInDenominator) {
    std::mt19937_64 rng(15);
    std::uniform_int_distribution<int> coord(-9, 9);
    const int primes[] = {2, 3, 5, 7};
    for (std::size_t m = 1; m <= 3; ++m) {
        for (int r = 1; r <= 3; ++r) {
            for (int p : primes) {
                Point pt{Rational(p), Rational(coord(rng) | 1), {}};
                while (pt.xs.size() < m) {
                    const int c = coord(rng);
                    if (c != 0 && std::find(pt.xs.begin(), pt.xs.end(), Rational(c)) == pt.xs.end()) {
                        pt.xs.emplace_back(c);
                    }
                }
                Integer den = omega_T_pr(r, pt).denominator();
                while (den % p == 0) {
                    den /= p;
                }
                ASSERT_EQ(den, 1) << "m=" << m << " r=" << r << " p=" << p;
            }
        }
    }
}

}  // namespace
}  // namespace ikeda
