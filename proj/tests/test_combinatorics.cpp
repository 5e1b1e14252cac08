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

#include <algorithm>
#include <set>

#include "gtest/gtest.h"
#include "renormkit/combinatorics.hpp"
#include "renormkit/errors.hpp"

using namespace renormkit;

namespace {

// Brute force: w is Lyndon iff it is strictly smaller than every proper rotation.
bool lyndon_by_rotation(const Composition& w) {
    const auto& s = w.parts();
    if (s.empty()) {
        return false;
    }
    for (std::size_t r = 1; r < s.size(); ++r) {
        std::vector<int> rot(s.begin() + static_cast<long>(r), s.end());
        rot.insert(rot.end(), s.begin(), s.begin() + static_cast<long>(r));
        if (!(s < rot)) {
            return false;
        }
    }
    return true;
}

// Explicit membership of S restricted to [lo, hi).
std::vector<int> enumerate(const CommensurableSet& s, int lo, int hi) {
    std::vector<int> out;
    for (int n = lo; n < hi; ++n) {
        if (s.contains(n)) {
            out.push_back(n);
        }
    }
    return out;
}

}  // namespace

TEST(Composition, WeightAndAdmissibility) {
    Composition w{2, 1, 3};
    EXPECT_EQ(w.weight(), 6);
    EXPECT_EQ(w.length(), 3u);
    EXPECT_TRUE(w.admissible());
    EXPECT_FALSE((Composition{1, 2}).admissible());
    EXPECT_TRUE(Composition{}.admissible());
    EXPECT_EQ(Composition{}.weight(), 0);
    EXPECT_THROW(Composition({1, 0}), PreconditionError);
}

TEST(Composition, ParseAndPrint) {
    EXPECT_EQ(parse_composition("(1,2)"), (Composition{1, 2}));
    EXPECT_EQ(parse_composition(" 3 , 1 "), (Composition{3, 1}));
    EXPECT_EQ(parse_composition("()"), Composition{});
    EXPECT_EQ((Composition{1, 2}).str(), "(1,2)");
    EXPECT_EQ(Composition{}.str(), "()");
    EXPECT_THROW(parse_composition("(1,x)"), PreconditionError);
    EXPECT_THROW(parse_composition("(1,2"), PreconditionError);
}

TEST(Composition, LexicographicOrder) {
    EXPECT_LT((Composition{1}), (Composition{1, 1}));
    EXPECT_LT((Composition{1, 2}), (Composition{2}));
    EXPECT_LT((Composition{1, 1, 5}), (Composition{1, 2}));
}

TEST(Enumeration, CompositionCountIsPowerOfTwo) {
    for (int n = 1; n <= 12; ++n) {
        EXPECT_EQ(compositions_of(n).size(), std::size_t{1} << (n - 1)) << n;
    }
    EXPECT_EQ(compositions_of(0).size(), 1u);
}

TEST(Enumeration, PartitionCounts) {
    const std::size_t expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) {
        auto parts = partitions_of(n);
        EXPECT_EQ(parts.size(), expected[n]);
        std::set<Partition> unique(parts.begin(), parts.end());
        EXPECT_EQ(unique.size(), parts.size());
    }
}

TEST(Enumeration, Rearrangements) {
    auto r = rearrangements(Partition{2, 1});
    ASSERT_EQ(r.size(), 2u);
    EXPECT_EQ(r[0], (Composition{1, 2}));
    EXPECT_EQ(r[1], (Composition{2, 1}));
    EXPECT_EQ(rearrangements(Partition{1, 1, 1}).size(), 1u);
    EXPECT_EQ(rearrangements(Partition{3, 2, 2, 1}).size(), 12u);
}

TEST(Lyndon, SmallWeights) {
    EXPECT_EQ(lyndon_compositions(1), (std::vector<Composition>{Composition{1}}));
    EXPECT_EQ(lyndon_compositions(2), (std::vector<Composition>{Composition{1}, Composition{2}}));
    auto w3 = lyndon_compositions(3);
    std::vector<Composition> weight3;
    std::copy_if(w3.begin(), w3.end(), std::back_inserter(weight3), [](const auto& c) { return c.weight() == 3; });
    EXPECT_EQ(weight3, (std::vector<Composition>{Composition{1, 2}, Composition{3}}));
    EXPECT_THROW(lyndon_compositions(0), PreconditionError);
}

TEST(Lyndon, MatchesRotationOracle) {
    for (int n = 1; n <= 10; ++n) {
        for (const auto& w : compositions_of(n)) {
            EXPECT_EQ(is_lyndon(w), lyndon_by_rotation(w)) << w.str();
        }
    }
    auto all = lyndon_compositions(10);
    std::size_t brute = 0;
    for (const auto& w : compositions_up_to(10)) {
        brute += lyndon_by_rotation(w);
    }
    EXPECT_EQ(all.size(), brute);
}

TEST(Lyndon, NoProperPowers) {
    for (const auto& w : lyndon_compositions(10)) {
        const auto n = w.length();
        for (std::size_t d = 1; d < n; ++d) {
            if (n % d) {
                continue;
            }
            Composition root = w.slice(0, d);
            Composition power;
            for (std::size_t k = 0; k < n / d; ++k) {
                power = power.concat(root);
            }
            EXPECT_NE(power, w) << w.str();
        }
    }
}

// The count of Lyndon compositions of each weight generates the graded dimension of a
// polynomial algebra: prod_n (1 - t^n)^{-L_n} = (1 - t) / (1 - 2t).
TEST(Lyndon, GeneratingFunctionMatchesCompositionCount) {
    const int max_n = 10;
    std::vector<long> lyndon_count(max_n + 1, 0);
    for (const auto& w : lyndon_compositions(max_n)) {
        ++lyndon_count[static_cast<std::size_t>(w.weight())];
    }
    std::vector<long> series(max_n + 1, 0);
    series[0] = 1;
    for (int n = 1; n <= max_n; ++n) {
        for (long g = 0; g < lyndon_count[static_cast<std::size_t>(n)]; ++g) {
            // multiply by 1 / (1 - t^n)
            for (int k = n; k <= max_n; ++k) {
                series[static_cast<std::size_t>(k)] += series[static_cast<std::size_t>(k - n)];
            }
        }
    }
    for (int n = 1; n <= max_n; ++n) {
        EXPECT_EQ(series[static_cast<std::size_t>(n)], 1L << (n - 1)) << n;
    }
}

TEST(Lyndon, ChenFoxLyndonFactorization) {
    for (int n = 0; n <= 8; ++n) {
        for (const auto& w : compositions_of(n)) {
            auto factors = lyndon_factorization(w);
            Composition joined;
            for (std::size_t i = 0; i < factors.size(); ++i) {
                EXPECT_TRUE(lyndon_by_rotation(factors[i])) << w.str();
                if (i) {
                    EXPECT_FALSE(factors[i - 1] < factors[i]) << w.str();
                }
                joined = joined.concat(factors[i]);
            }
            EXPECT_EQ(joined, w);
        }
    }
}

TEST(DiracSea, RelativeCardinalityExamples) {
    EXPECT_EQ(relative_cardinality(CommensurableSet{}), 0);
    EXPECT_EQ(relative_cardinality(CommensurableSet({0}, {})), 1);
    EXPECT_EQ(relative_cardinality(CommensurableSet({}, {-1})), -1);
}

TEST(DiracSea, RelativeCardinalityFitsTail) {
    // Fit s_k = k + c from the enumerated elements well past the deviation window.
    CommensurableSet s({0, 2, 5, 9}, {-7, -3});
    auto elems = enumerate(s, -10, 200);
    const long c = elems.back() - static_cast<long>(elems.size() - 1);
    EXPECT_EQ(s.relative_cardinality(), c);
    EXPECT_EQ(c, 2);
}

TEST(DiracSea, RejectsMalformedSets) {
    EXPECT_THROW(CommensurableSet({-1}, {}), PreconditionError);
    EXPECT_THROW(CommensurableSet({}, {0}), PreconditionError);
}

TEST(DiracSea, EncodeExamples) {
    EXPECT_EQ(encode(CommensurableSet{}), (DiracCode{0, Composition{}}));
    EXPECT_EQ(encode(CommensurableSet({0, 1}, {})), (DiracCode{2, Composition{}}));
    EXPECT_EQ(encode(CommensurableSet({1, 2}, {})), (DiracCode{0, Composition{3}}));
}

TEST(DiracSea, DecodeExamples) {
    EXPECT_EQ(decode(DiracCode{0, Composition{}}), CommensurableSet{});
    EXPECT_EQ(decode(DiracCode{0, Composition{3}}), CommensurableSet({1, 2}, {}));
    auto a = decode(DiracCode{0, Composition{1, 2}});
    auto b = decode(DiracCode{0, Composition{2, 1}});
    EXPECT_NE(a, b);
    EXPECT_EQ(enumerate(a, -5, 6), (std::vector<int>{0, 1, 3, 4, 5}));
    EXPECT_EQ(enumerate(b, -5, 6), (std::vector<int>{0, 2, 3, 4, 5}));
    EXPECT_THROW(decode(0, {1, 0}), PreconditionError);
    EXPECT_THROW(decode(0, {-2}), PreconditionError);
}

TEST(DiracSea, ShiftRaisesCardinalityByOne) {
    for (unsigned mask = 0; mask < 64; ++mask) {
        std::vector<int> missing;
        for (int b = 0; b < 6; ++b) {
            if (mask & (1U << b)) {
                missing.push_back(b);
            }
        }
        for (int extra_mask = 0; extra_mask < 8; ++extra_mask) {
            std::vector<int> extra;
            for (int b = 0; b < 3; ++b) {
                if (extra_mask & (1 << b)) {
                    extra.push_back(-1 - b);
                }
            }
            CommensurableSet s(missing, extra);
            auto t = s.shifted(1);
            EXPECT_EQ(t.relative_cardinality(), s.relative_cardinality() + 1);
            EXPECT_EQ(enumerate(t, -20, 30), [&] {
                auto e = enumerate(s, -21, 29);
                for (auto& x : e) {
                    ++x;
                }
                return e;
            }());
        }
    }
}

TEST(DiracSea, GradingLawAndRoundTripSample) {
    // Exhaustive over missing within [0,9] and extra within [-4,-1]; the acceptance
    // suite runs the full [0,15] x [-8,-1] window.
    for (unsigned mm = 0; mm < (1U << 10); ++mm) {
        for (unsigned em = 0; em < (1U << 4); ++em) {
            std::vector<int> missing;
            std::vector<int> extra;
            for (int b = 0; b < 10; ++b) {
                if (mm & (1U << b)) {
                    missing.push_back(b);
                }
            }
            for (int b = 0; b < 4; ++b) {
                if (em & (1U << b)) {
                    extra.push_back(-4 + b);
                }
            }
            CommensurableSet s(missing, extra);
            auto code = encode(s);
            ASSERT_EQ(decode(code), s);
            const long c = s.relative_cardinality();
            const auto k0 = s.stable_index();
            auto elems = s.first_elements(k0 + 20);
            for (std::size_t k = k0; k < elems.size(); ++k) {
                ASSERT_EQ(elems[k], static_cast<long>(k) + c);
            }
            if (k0 > 0) {
                ASSERT_NE(elems[k0 - 1], static_cast<long>(k0 - 1) + c);
            }
            EXPECT_EQ(code.pi.weight(), elems[k0] - elems[0]);
        }
    }
}
