/* Copyright 2026 The renormkit Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include <cmath>
#include <numbers>
#include <set>

#include "gtest/gtest.h"
#include "renormkit/errors.hpp"
#include "renormkit/mzv.hpp"

using namespace renormkit;

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;
constexpr long double kZeta3 = 1.2020569031595942853997381615114L;
constexpr long double kZeta5 = 1.0369277551433699263313654864570L;

// sum_{n <= N} n^{-s} plus the midpoint of the integral bracket [int_{N+1}^inf, int_N^inf].
struct Bracketed {
    long double value;
    long double half_width;
};

Bracketed direct_zeta(int s, long N) {
    long double sum = 0;
    for (long n = N; n >= 1; --n) {
        sum += std::pow(static_cast<long double>(n), -static_cast<long double>(s));
    }
    const long double lo = std::pow(static_cast<long double>(N + 1), 1.0L - s) / (s - 1);
    const long double hi = std::pow(static_cast<long double>(N), 1.0L - s) / (s - 1);
    return {sum + (lo + hi) / 2, (hi - lo) / 2};
}

void expect_close(const MzvValue& z, long double truth, long double slack = 1e-18L) {
    EXPECT_LE(std::fabs(z.value - truth), z.error_bound + slack) << z.composition.str();
}

}  // namespace

TEST(Zeta, DepthOneAgreesWithDirectSummation) {
    for (int s = 2; s <= 8; ++s) {
        const Bracketed oracle = direct_zeta(s, 200000);
        const MzvValue z = zeta(Composition{s}, 1e-12L);
        EXPECT_LE(z.error_bound, 1e-12L);
        EXPECT_LE(std::fabs(z.value - oracle.value), z.error_bound + oracle.half_width + 1e-15L) << s;
    }
}

TEST(Zeta, Examples) {
    const MzvValue z2 = zeta(Composition{2}, 1e-10L);
    EXPECT_NEAR(static_cast<double>(z2.value), 1.6449340668, 1e-10);
    expect_close(z2, kPi * kPi / 6);
    const MzvValue z3 = zeta(Composition{3}, 1e-10L);
    EXPECT_NEAR(static_cast<double>(z3.value), 1.2020569032, 1e-10);
    const MzvValue z21 = zeta(Composition{2, 1}, 1e-10L);
    EXPECT_LT(std::fabs(z21.value - z3.value), 2e-9L);
    EXPECT_EQ(zeta(Composition{}).value, 1);
    EXPECT_EQ(zeta(Composition{}).error_bound, 0);
}

TEST(Zeta, ClosedForms) {
    const long double pi4 = kPi * kPi * kPi * kPi;
    const long double pi6 = pi4 * kPi * kPi;
    expect_close(zeta(Composition{4}), pi4 / 90);
    expect_close(zeta(Composition{6}), pi6 / 945);
    expect_close(zeta(Composition{2, 2}), pi4 / 120);
    expect_close(zeta(Composition{3, 1}), pi4 / 360);
    expect_close(zeta(Composition{2, 1, 1}), pi4 / 90);
    expect_close(zeta(Composition{2, 1}), kZeta3);
    expect_close(zeta(Composition{5}), kZeta5);
    expect_close(zeta(Composition{2, 2, 2}), pi6 / 5040);
    expect_close(zeta(Composition{4, 2}), kZeta3 * kZeta3 - 4 * pi6 / 2835);
    // zeta(3, 1, ..., 1) and its dual zeta(n + 2) (here weight 5)
    expect_close(zeta(Composition{2, 1, 1, 1}), zeta(Composition{5}).value, zeta(Composition{5}).error_bound);
}

// The sum of all admissible zeta values of weight w and depth k is zeta(w).
TEST(Zeta, SumTheorem) {
    for (int w = 3; w <= 7; ++w) {
        const MzvValue single = zeta(Composition{w});
        for (std::size_t depth = 2; depth < static_cast<std::size_t>(w); ++depth) {
            long double sum = 0;
            long double err = single.error_bound;
            for (const auto& c : compositions_of(w)) {
                if (c.length() == depth && c.admissible()) {
                    const MzvValue z = zeta(c);
                    sum += z.value;
                    err += z.error_bound;
                }
            }
            EXPECT_LE(std::fabs(sum - single.value), err + 1e-17L) << w << " " << depth;
        }
    }
}

TEST(Zeta, MonotoneInFirstPart) {
    for (int a = 2; a <= 8; ++a) {
        const MzvValue lo = zeta(Composition{a + 1});
        const MzvValue hi = zeta(Composition{a});
        EXPECT_GT(hi.value - hi.error_bound, lo.value + lo.error_bound) << a;
    }
}

TEST(Zeta, Errors) {
    EXPECT_THROW(zeta(Composition{1, 2}), DivergentSeriesError);
    EXPECT_THROW(zeta(Composition{1}), DivergentSeriesError);
    EXPECT_THROW(zeta(Composition{2}, 0), PreconditionError);
    EXPECT_THROW(zeta(Composition{2}, 1e-25L), NumericError);
}

TEST(PolylogHalf, KnownValues) {
    const long double ln2 = std::log(2.0L);
    EXPECT_NEAR(static_cast<double>(polylog_half(Composition{1}, 1e-15L).value), static_cast<double>(ln2), 1e-15);
    // Li_{1,1}(z) = (-log(1 - z))^2 / 2
    EXPECT_NEAR(static_cast<double>(polylog_half(Composition{1, 1}, 1e-15L).value),
                static_cast<double>(ln2 * ln2 / 2), 1e-15);
    // Li_2(1/2) = pi^2/12 - ln^2(2)/2
    EXPECT_NEAR(static_cast<double>(polylog_half(Composition{2}, 1e-15L).value),
                static_cast<double>(kPi * kPi / 12 - ln2 * ln2 / 2), 1e-15);
}

TEST(CheckStuffle, Examples) {
    const StuffleCheck a = check_stuffle(Composition{2}, Composition{2}, 1e-10L);
    EXPECT_LT(a.residual, 1e-8L);
    const StuffleCheck b = check_stuffle(Composition{2}, Composition{3}, 1e-10L);
    EXPECT_LT(b.residual, 1e-8L);
    EXPECT_EQ(check_stuffle(Composition{2}, Composition{}, 1e-10L).residual, 0);
    EXPECT_THROW(check_stuffle(Composition{1}, Composition{2}), DivergentSeriesError);
}

TEST(CheckStuffle, AllAdmissiblePairsThroughWeightSix) {
    std::vector<Composition> admissible;
    for (const auto& c : compositions_up_to(6)) {
        if (c.admissible() && !c.empty()) {
            admissible.push_back(c);
        }
    }
    for (const auto& I : admissible) {
        for (const auto& J : admissible) {
            if (I.weight() + J.weight() > 6) {
                continue;
            }
            const StuffleCheck r = check_stuffle(I, J, 1e-12L);
            EXPECT_LT(r.residual, 10 * r.error_bound) << I.str() << " " << J.str();
        }
    }
}

TEST(ZetaRegularized, Examples) {
    const ZetaPolynomial one = zeta_regularized(Composition{1});
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one.at(1).value, 1);
    const ZetaPolynomial z21 = zeta_regularized(Composition{2, 1});
    ASSERT_EQ(z21.size(), 1u);
    EXPECT_NEAR(static_cast<double>(z21.at(0).value), 1.2020569, 1e-7);
    const ZetaPolynomial z12 = zeta_regularized(Composition{1, 2});
    ASSERT_EQ(z12.size(), 2u);
    EXPECT_NEAR(static_cast<double>(z12.at(1).value), static_cast<double>(kPi * kPi / 6), 1e-12);
    EXPECT_NEAR(static_cast<double>(z12.at(0).value), static_cast<double>(-2 * kZeta3), 1e-12);
}

TEST(ZetaRegularized, MultiplicativeUnderStuffle) {
    for (const auto& u : compositions_up_to(4)) {
        for (const auto& v : compositions_up_to(4 - u.weight())) {
            const ZetaPolynomial lhs = zeta_regularized(stuffle(WordPoly(u), WordPoly(v)));
            const ZetaPolynomial rhs = zeta_regularized(u) * zeta_regularized(v);
            std::set<int> powers;
            for (const auto& [i, e] : lhs) {
                powers.insert(i);
            }
            for (const auto& [i, e] : rhs) {
                powers.insert(i);
            }
            for (int i : powers) {
                const Estimate l = lhs.count(i) ? lhs.at(i) : Estimate{};
                const Estimate r = rhs.count(i) ? rhs.at(i) : Estimate{};
                EXPECT_LE(std::fabs(l.value - r.value), l.error + r.error + 1e-17L) << u.str() << " " << v.str();
            }
        }
    }
}
