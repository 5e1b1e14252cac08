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

#include <functional>
#include <random>

#include "gtest/gtest.h"
#include "renormkit/errors.hpp"
#include "renormkit/linalg.hpp"
#include "renormkit/symmfunc.hpp"

using namespace renormkit;

namespace {

const Basis kBases[] = {Basis::m, Basis::e, Basis::h, Basis::p};

Rational z(const Partition& lambda) {
    Rational out = 1;
    std::map<int, unsigned> mult;
    for (int part : lambda.parts()) {
        ++mult[part];
        out *= part;
    }
    for (const auto& [part, k] : mult) {
        out *= factorial(k);
    }
    return out;
}

// e_n = sum eps_lambda p_lambda / z_lambda and h_n = sum p_lambda / z_lambda.
SymPoly generator_by_z(int n, bool elementary) {
    SymPoly out(Basis::p);
    for (const auto& lambda : partitions_of(n)) {
        const bool odd = (n - static_cast<int>(lambda.length())) % 2 != 0;
        out.add_term(lambda, (elementary && odd ? -1 : 1) / z(lambda));
    }
    return out;
}

Rational ipow(const Rational& x, int k) {
    Rational out = 1;
    for (int i = 0; i < k; ++i) {
        out *= x;
    }
    return out;
}

// Brute-force evaluation at a point of Q^n, one basis element at a time.
Rational evaluate_basis(Basis b, const Partition& lambda, const std::vector<Rational>& x) {
    const std::size_t n = x.size();
    if (b == Basis::m) {
        if (lambda.length() > n) {
            return 0;
        }
        std::vector<int> alpha = lambda.parts();
        alpha.resize(n, 0);
        std::sort(alpha.begin(), alpha.end());
        Rational total = 0;
        do {
            Rational term = 1;
            for (std::size_t i = 0; i < n; ++i) {
                term *= ipow(x[i], alpha[i]);
            }
            total += term;
        } while (std::next_permutation(alpha.begin(), alpha.end()));
        return total;
    }
    Rational out = 1;
    for (int k : lambda.parts()) {
        Rational factor = 0;
        if (b == Basis::p) {
            for (const auto& xi : x) {
                factor += ipow(xi, k);
            }
        } else {
            // sum over index sequences i_1 <= ... <= i_k (h) or i_1 < ... < i_k (e)
            std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
            std::function<void(std::size_t, std::size_t, Rational)> rec = [&](std::size_t depth, std::size_t start,
                                                                             Rational acc) {
                if (depth == idx.size()) {
                    factor += acc;
                    return;
                }
                for (std::size_t i = start; i < n; ++i) {
                    rec(depth + 1, b == Basis::e ? i + 1 : i, acc * x[i]);
                }
            };
            rec(0, 0, Rational(1));
        }
        out *= factor;
    }
    return out;
}

Rational evaluate(const SymPoly& f, const std::vector<Rational>& x) {
    Rational total = 0;
    for (const auto& [lambda, c] : f.terms()) {
        total += c * evaluate_basis(f.basis(), lambda, x);
    }
    return total;
}

std::vector<Rational> random_point(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> num(-7, 7);
    std::uniform_int_distribution<int> den(1, 5);
    std::vector<Rational> x;
    for (std::size_t i = 0; i < n; ++i) {
        x.push_back(ratio(num(rng), den(rng)));
    }
    return x;
}

SymPoly P(std::initializer_list<int> parts, const Rational& c = 1) {
    return SymPoly(Basis::p, Partition(parts), c);
}

}  // namespace

TEST(SymPoly, ConvertExamples) {
    EXPECT_EQ(convert(SymPoly(Basis::e, Partition{1}), Basis::p), P({1}));
    EXPECT_EQ(convert(SymPoly(Basis::e, Partition{2}), Basis::p), P({1, 1}, ratio(1, 2)) + P({2}, ratio(-1, 2)));
    EXPECT_EQ(convert(SymPoly(Basis::e, Partition{3}), Basis::p),
              P({1, 1, 1}, ratio(1, 6)) + P({2, 1}, ratio(-1, 2)) + P({3}, ratio(1, 3)));
    EXPECT_EQ(convert(SymPoly::unit(Basis::m), Basis::e), SymPoly::unit(Basis::e));
    EXPECT_EQ(P({2, 1}, ratio(-1, 2)).str(), "-1/2*p(2,1)");
}

TEST(SymPoly, GeneratorsMatchCycleIndexFormula) {
    for (int n = 1; n <= 10; ++n) {
        EXPECT_EQ(convert(SymPoly(Basis::e, Partition{n}), Basis::p), generator_by_z(n, true)) << n;
        EXPECT_EQ(convert(SymPoly(Basis::h, Partition{n}), Basis::p), generator_by_z(n, false)) << n;
    }
}

TEST(SymPoly, ConversionsAgreeWithEvaluation) {
    std::mt19937 rng(11);
    for (int n = 0; n <= 6; ++n) {
        const auto x = random_point(rng, static_cast<std::size_t>(std::max(n, 1)));
        for (const auto& lambda : partitions_of(n)) {
            for (Basis from : kBases) {
                const SymPoly f(from, lambda);
                const Rational expected = evaluate(f, x);
                for (Basis to : kBases) {
                    EXPECT_EQ(evaluate(convert(f, to), x), expected)
                        << basis_letter(from) << lambda.str() << " -> " << basis_letter(to);
                }
            }
        }
    }
}

TEST(SymPoly, RoundTripsThroughDegreeTen) {
    for (int n = 0; n <= 10; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            for (Basis from : kBases) {
                const SymPoly f(from, lambda);
                for (Basis to : kBases) {
                    ASSERT_EQ(convert(convert(f, to), from), f) << basis_letter(from) << lambda.str();
                }
            }
        }
    }
}

// E(t) = exp(sum_r (-1)^{r-1} p_r t^r / r), compared coefficientwise through t^10.
TEST(SymPoly, NewtonGeneratingIdentity) {
    const int N = 10;
    std::vector<SymPoly> s(N + 1, SymPoly(Basis::p));
    for (int r = 1; r <= N; ++r) {
        s[static_cast<std::size_t>(r)] = P({r}, Rational(r % 2 ? 1 : -1, r));
    }
    auto mul = [&](const std::vector<SymPoly>& a, const std::vector<SymPoly>& b) {
        std::vector<SymPoly> out(N + 1, SymPoly(Basis::p));
        for (int i = 0; i <= N; ++i) {
            for (int j = 0; i + j <= N; ++j) {
                out[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
            }
        }
        return out;
    };
    std::vector<SymPoly> exp_s(N + 1, SymPoly(Basis::p));
    std::vector<SymPoly> term(N + 1, SymPoly(Basis::p));
    term[0] = SymPoly::unit();
    for (int k = 0; k <= N; ++k) {
        for (int d = 0; d <= N; ++d) {
            exp_s[static_cast<std::size_t>(d)] += term[static_cast<std::size_t>(d)] * (1 / factorial(static_cast<unsigned>(k)));
        }
        term = mul(term, s);
    }
    for (int n = 0; n <= N; ++n) {
        const SymPoly en = n == 0 ? SymPoly::unit() : convert(SymPoly(Basis::e, Partition{n}), Basis::p);
        EXPECT_EQ(exp_s[static_cast<std::size_t>(n)], en) << n;
    }
}

TEST(SymPoly, ProductsAgreeAcrossBases) {
    std::mt19937 rng(5);
    const auto x = random_point(rng, 6);
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b + a <= 6; ++b) {
            for (const auto& la : partitions_of(a)) {
                for (const auto& lb : partitions_of(b)) {
                    for (Basis basis : kBases) {
                        const SymPoly f(basis, la);
                        const SymPoly g(Basis::m, lb);
                        EXPECT_EQ(evaluate(f * g, x), evaluate(f, x) * evaluate(g, x));
                    }
                }
            }
        }
    }
}

TEST(HallPairing, Examples) {
    EXPECT_EQ(hall_pairing(SymPoly(Basis::h, Partition{2, 1}), SymPoly(Basis::m, Partition{2, 1})), 1);
    EXPECT_EQ(hall_pairing(SymPoly(Basis::h, Partition{2, 1}), SymPoly(Basis::m, Partition{1, 1, 1})), 0);
    EXPECT_EQ(hall_pairing(P({2}), P({2})), 2);
}

TEST(HallPairing, PowerSumsAreOrthogonalWithNormsZ) {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& la : partitions_of(n)) {
            for (const auto& mu : partitions_of(n)) {
                EXPECT_EQ(hall_pairing(SymPoly(Basis::p, la), SymPoly(Basis::p, mu)), la == mu ? z(la) : 0);
            }
        }
    }
}

TEST(HallPairing, SymmetricAndPositiveDefinite) {
    for (int n = 1; n <= 5; ++n) {
        const auto parts = partitions_of(n);
        for (Basis b : kBases) {
            RationalMatrix gram(parts.size(), std::vector<Rational>(parts.size()));
            for (std::size_t i = 0; i < parts.size(); ++i) {
                for (std::size_t j = 0; j < parts.size(); ++j) {
                    gram[i][j] = hall_pairing(SymPoly(b, parts[i]), SymPoly(b, parts[j]));
                    EXPECT_EQ(gram[i][j], hall_pairing(SymPoly(b, parts[j]), SymPoly(b, parts[i])));
                }
            }
            // Sylvester: all leading principal minors positive.
            for (std::size_t k = 1; k <= parts.size(); ++k) {
                RationalMatrix minor(k, std::vector<Rational>(k));
                for (std::size_t i = 0; i < k; ++i) {
                    for (std::size_t j = 0; j < k; ++j) {
                        minor[i][j] = gram[i][j];
                    }
                }
                Rational det = 1;
                for (std::size_t c = 0; c < k; ++c) {
                    std::size_t piv = c;
                    while (piv < k && minor[piv][c] == 0) {
                        ++piv;
                    }
                    ASSERT_LT(piv, k);
                    if (piv != c) {
                        std::swap(minor[piv], minor[c]);
                        det = -det;
                    }
                    det *= minor[c][c];
                    for (std::size_t r = c + 1; r < k; ++r) {
                        const Rational f = minor[r][c] / minor[c][c];
                        for (std::size_t j = c; j < k; ++j) {
                            minor[r][j] -= f * minor[c][j];
                        }
                    }
                }
                EXPECT_GT(det, 0) << basis_letter(b) << n << " minor " << k;
            }
        }
    }
}

TEST(Embed, Examples) {
    WordPoly m21 = embed_qsymm(SymPoly(Basis::m, Partition{2, 1}));
    EXPECT_EQ(m21, WordPoly(Composition{2, 1}) + WordPoly(Composition{1, 2}));
    EXPECT_EQ(embed_qsymm(SymPoly(Basis::m, Partition{1, 1, 1})), WordPoly(Composition{1, 1, 1}));
    const SymPoly m1(Basis::m, Partition{1});
    EXPECT_EQ(m1 * m1, SymPoly(Basis::m, Partition{2}) + SymPoly(Basis::m, Partition{1, 1}, 2));
    EXPECT_EQ(embed_qsymm(m1 * m1), stuffle(embed_qsymm(m1), embed_qsymm(m1)));
}

TEST(Embed, InjectiveByDegree) {
    for (int n = 1; n <= 6; ++n) {
        const auto parts = partitions_of(n);
        const auto words = compositions_of(n);
        RationalMatrix mat;
        for (const auto& lambda : parts) {
            const WordPoly image = embed_qsymm(SymPoly(Basis::m, lambda));
            std::vector<Rational> row;
            for (const auto& w : words) {
                row.push_back(image.coefficient(w));
            }
            mat.push_back(row);
        }
        EXPECT_EQ(rank(mat), parts.size()) << n;
    }
}

TEST(Embed, MultiplicativeThroughWeightSix) {
    for (int a = 1; a <= 5; ++a) {
        for (int b = 1; a + b <= 6; ++b) {
            for (const auto& la : partitions_of(a)) {
                for (const auto& lb : partitions_of(b)) {
                    const SymPoly f(Basis::m, la);
                    const SymPoly g(Basis::m, lb);
                    EXPECT_EQ(embed_qsymm(f * g), stuffle(embed_qsymm(f), embed_qsymm(g)))
                        << la.str() << " " << lb.str();
                }
            }
        }
    }
}

TEST(CpClass, Dictionary) {
    EXPECT_EQ(cp_class(0), SymPoly::unit());
    EXPECT_EQ(cp_class(1), P({1}));
    EXPECT_EQ(cp_class(3), P({3}));
    EXPECT_THROW(cp_class(-1), PreconditionError);
}

TEST(SymPoly, PowerSumPolynomialRoundTrip) {
    const SymPoly f = convert(SymPoly(Basis::e, Partition{3, 1}), Basis::p);
    const Poly poly = to_power_sum_poly(f);
    EXPECT_EQ(from_power_sum_poly(poly), f);
    EXPECT_EQ(to_power_sum_poly(P({2}, 3)), Poly::variable('p', 2) * Rational(3));
    EXPECT_THROW(from_power_sum_poly(Poly::variable('m', 1)), PreconditionError);
}
