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
 // Exception types shared by every module.

#ifndef RENORMKIT_ERRORS_HPP
#define RENORMKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace renormkit {

    struct Error : std::runtime_error {
        using std::runtime_error::runtime_error;
    };

    // Bad argument to an operation (violated precondition).
    struct PreconditionError : Error {
        using Error::Error;
    };

    // zeta() on a non-admissible index.
    struct DivergentSeriesError : Error {
        using Error::Error;
    };

    // T -> T - gamma applied to a negative power of T.
    struct UnsupportedSubstitutionError : Error {
        using Error::Error;
    };

    // Series composition f(g) with g(0) != 0.
    struct CompositionDomainError : Error {
        using Error::Error;
    };

    struct NotInvertibleError : Error {
        using Error::Error;
    };

    // Input truncated below the degree a computation needs.
    struct TruncationError : Error {
        using Error::Error;
    };

    // Non-finite values or an unreachable error target in numeric kernels.
    struct NumericError : Error {
        using Error::Error;
    };

    struct DegenerateCapError : Error {
        using Error::Error;
    };

    // Ill-typed expression in the evaluator.
    struct TypeError : Error {
        using Error::Error;
    };

}  // namespace renormkit

#endif  // RENORMKIT_ERRORS_HPP
