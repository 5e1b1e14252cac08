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

#include "renormkit/mzv.hpp"

#include <cfloat>
#include <cmath>
#include <vector>

#include "renormkit/errors.hpp"

namespace renormkit {

    namespace {
        constexpr long double kEps = LDBL_EPSILON;

        // x^{a-1} y per part, with x = true.
        std::vector<bool> letters(const Composition& c) {
            std::vector<bool> out;
            for (int a : c.parts()) {
                out.insert(out.end(), static_cast<std::size_t>(a - 1), true);
                out.push_back(false);
            }
            return out;
        }

        // Inverse of letters() for words ending in y.
        Composition from_letters(const std::vector<bool>& word) {
            std::vector<int> parts;
            int run = 1;
            for (bool x : word) {
                if (x) {
                    ++run;
                } else {
                    parts.push_back(run);
                    run = 1;
                }
            }
            return Composition(std::move(parts));
        }

        long double tail_bound(std::size_t depth, long double n_plus_1) {
            const long double n = n_plus_1;
            const auto k1 = static_cast<long double>(depth - 1);
            const long double r = std::pow(0.5L, n) * std::pow(1 + std::log(n), k1);
            const long double q = 0.5L * std::pow(1 + 1 / (n * (1 + std::log(n))), k1);
            return q < 1 ? r / (1 - q) : INFINITY;
        }

        long double to_long_double(const Rational& c) {
            return static_cast<long double>(c.get_num().get_d()) / static_cast<long double>(c.get_den().get_d());
        }
    }  // namespace

    Estimate operator+(const Estimate& a, const Estimate& b) {
        const long double v = a.value + b.value;
        return {v, a.error + b.error + kEps * std::fabs(v)};
    }

    Estimate operator-(const Estimate& a, const Estimate& b) {
        const long double v = a.value - b.value;
        return {v, a.error + b.error + kEps * std::fabs(v)};
    }

    Estimate operator*(const Estimate& a, const Estimate& b) {
        const long double v = a.value * b.value;
        return {v, std::fabs(a.value) * b.error + std::fabs(b.value) * a.error + a.error * b.error + kEps * std::fabs(v)};
    }

    Estimate operator*(long double c, const Estimate& a) {
        const long double v = c * a.value;
        return {v, std::fabs(c) * a.error + kEps * std::fabs(v)};
    }

    Estimate polylog_half(const Composition& s, long double target_error) {
        const std::size_t k = s.length();
        if (k == 0) {
            return {1, 0};
        }
        if (!(target_error > 0)) {
            throw PreconditionError("polylog_half: target error must be positive");
        }
        long double tail = INFINITY;
        std::size_t N = 1;
        while ((tail = tail_bound(k, static_cast<long double>(N + 1))) > target_error / 2) {
            ++N;
            if (N > 100000) {
                throw NumericError("polylog_half: target error unreachable");
            }
        }
        // inner[n] = sum over n > n_{i+1} > ... of the deeper factors, built from the innermost level out
        std::vector<long double> inner(N + 1, 1);
        inner[0] = k == 1 ? 1 : 0;
        for (std::size_t level = k - 1; level >= 1; --level) {
            std::vector<long double> next(N + 1, 0);
            long double acc = 0;
            for (std::size_t m = 1; m <= N; ++m) {
                next[m - 1] = acc;
                acc += std::pow(static_cast<long double>(m), -static_cast<long double>(s[level])) *
                       (level == k - 1 ? 1 : inner[m - 1]);
            }
            next[N] = acc;
            inner = std::move(next);
        }
        // inner[n-1] now sums the levels below the outermost over n > n_2 (or is 1 at depth 1).
        long double value = 0;
        long double half_pow = 1;
        for (std::size_t n = 1; n <= N; ++n) {
            half_pow *= 0.5L;
            value += half_pow * std::pow(static_cast<long double>(n), -static_cast<long double>(s[0])) *
                     (k == 1 ? 1 : inner[n - 1]);
        }
        const long double rounding = 4 * static_cast<long double>((k + 1) * (N + 8)) * kEps * value;
        return {value, tail + rounding};
    }

    MzvValue zeta(const Composition& I, long double target_error) {
        if (!I.admissible()) {
            throw DivergentSeriesError("zeta" + I.str() + " diverges: the first part must be at least 2");
        }
        if (!(target_error > 0)) {
            throw PreconditionError("zeta: target error must be positive");
        }
        MzvValue out{I, 1, 0};
        if (I.empty()) {
            return out;
        }
        // 1 > t_1 > ... > t_w > 0 split at 1/2; the upper block becomes an integral over
        // [0, 1/2] of the reversed word with x and y exchanged.
        const auto word = letters(I);
        const std::size_t w = word.size();
        const long double piece_target = target_error / (4 * static_cast<long double>(w + 1));
        Estimate total{0, 0};
        for (std::size_t j = 0; j <= w; ++j) {
            std::vector<bool> upper;
            for (std::size_t i = j; i-- > 0;) {
                upper.push_back(!word[i]);
            }
            std::vector<bool> lower(word.begin() + static_cast<long>(j), word.end());
            total = total + polylog_half(from_letters(upper), piece_target) *
                                polylog_half(from_letters(lower), piece_target);
        }
        if (total.error > target_error) {
            throw NumericError("zeta" + I.str() + ": rounding error exceeds the requested target");
        }
        out.value = total.value;
        out.error_bound = total.error;
        return out;
    }

    StuffleCheck check_stuffle(const Composition& I, const Composition& J, long double target_error) {
        if (!I.admissible() || !J.admissible()) {
            throw DivergentSeriesError("check_stuffle: both compositions must be admissible");
        }
        const MzvValue zi = zeta(I, target_error);
        const MzvValue zj = zeta(J, target_error);
        Estimate lhs = Estimate{zi.value, zi.error_bound} * Estimate{zj.value, zj.error_bound};
        Estimate rhs{0, 0};
        const WordPoly product = quasi_shuffle(I, J, Bracket::standard());
        for (const auto& [w, c] : product.terms()) {
            const MzvValue zw = zeta(w, target_error);
            rhs = rhs + to_long_double(c) * Estimate{zw.value, zw.error_bound};
        }
        const Estimate diff = lhs - rhs;
        return {std::fabs(diff.value), diff.error};
    }

    ZetaPolynomial zeta_regularized(const WordPoly& p, long double target_error) {
        ZetaPolynomial out;
        const RegularizedPoly r = regularize(p);
        for (const auto& [power, coeff] : r.coefficients()) {
            Estimate sum{0, 0};
            for (const auto& [w, c] : coeff.terms()) {
                const MzvValue z = zeta(w, target_error);
                sum = sum + to_long_double(c) * Estimate{z.value, z.error_bound};
            }
            out[power] = sum;
        }
        return out;
    }

    ZetaPolynomial zeta_regularized(const Composition& w, long double target_error) {
        return zeta_regularized(WordPoly(w), target_error);
    }

    ZetaPolynomial operator*(const ZetaPolynomial& a, const ZetaPolynomial& b) {
        ZetaPolynomial out;
        for (const auto& [i, x] : a) {
            for (const auto& [j, y] : b) {
                auto it = out.find(i + j);
                out[i + j] = it == out.end() ? x * y : it->second + x * y;
            }
        }
        return out;
    }

}  // namespace renormkit
