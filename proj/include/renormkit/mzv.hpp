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
 // Multiple zeta values zeta(a_1, ..., a_k) = sum_{n_1 > ... > n_k >= 1} prod n_i^{-a_i} with
 // certified error bounds, plus numeric checks of the stuffle product and regularization.

#ifndef RENORMKIT_MZV_HPP
#define RENORMKIT_MZV_HPP

#include <map>
#include <string>

#include "renormkit/combinatorics.hpp"
#include "renormkit/quasishuffle.hpp"

namespace renormkit {

    // A number known to lie in [value - error, value + error].
    struct Estimate {
        long double value = 0;
        long double error = 0;
    };

    Estimate operator+(const Estimate& a, const Estimate& b);
    Estimate operator-(const Estimate& a, const Estimate& b);
    Estimate operator*(const Estimate& a, const Estimate& b);
    Estimate operator*(long double c, const Estimate& a);

    struct MzvValue {
        Composition composition;
        long double value = 0;
        long double error_bound = 0;
    };

    /* zeta(I) with |true - value| <= error_bound <= target_error. The series is split at 1/2
     * in its iterated-integral form, so every piece is a multiple polylogarithm at 1/2 whose
     * truncation error has a geometric bound.
     * Throws DivergentSeriesError if I is not admissible, PreconditionError if target_error <= 0,
     * and NumericError if the target is below what long double rounding can certify. */
    MzvValue zeta(const Composition& I, long double target_error = 1e-12L);

    // Li_s(1/2) = sum_{n_1 > ... > n_k >= 1} 2^{-n_1} prod n_i^{-s_i}, any composition s.
    Estimate polylog_half(const Composition& s, long double target_error);

    struct StuffleCheck {
        long double residual = 0;     // |zeta(I) zeta(J) - sum_w c_w zeta(w)|
        long double error_bound = 0;  // sum of the error bounds of every zeta involved
    };

    // Throws DivergentSeriesError unless both I and J are admissible.
    StuffleCheck check_stuffle(const Composition& I, const Composition& J, long double target_error = 1e-12L);

    // Coefficients of T^i after regularizing and evaluating the admissible words.
    using ZetaPolynomial = std::map<int, Estimate>;

    ZetaPolynomial zeta_regularized(const Composition& w, long double target_error = 1e-12L);
    ZetaPolynomial zeta_regularized(const WordPoly& p, long double target_error = 1e-12L);

    ZetaPolynomial operator*(const ZetaPolynomial& a, const ZetaPolynomial& b);

}  // namespace renormkit

#endif  // RENORMKIT_MZV_HPP
