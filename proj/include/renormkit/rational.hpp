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
 // Arbitrary-precision rationals (GMP) and their exact text form.

#ifndef RENORMKIT_RATIONAL_HPP
#define RENORMKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace renormkit {

    using Rational = mpq_class;
    using Integer = mpz_class;

    // num/den in lowest terms; den must be nonzero.
    inline Rational ratio(long num, long den) {
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    // "p/q" in lowest terms, or "p" when the denominator is 1.
    std::string to_string(const Rational& q);

    // Accepts "p", "-p", "p/q". Throws PreconditionError on malformed input
    // or a zero denominator.
    Rational parse_rational(std::string_view text);

    inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

    Rational factorial(unsigned n);

    Rational binomial(long n, long k);

    inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace renormkit

#endif  // RENORMKIT_RATIONAL_HPP
