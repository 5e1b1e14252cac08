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

#include "renormkit/rational.hpp"

#include <cctype>

#include "renormkit/errors.hpp"

namespace renormkit {

    std::string to_string(const Rational& q) {
        return q.get_str();
    }

    namespace {
        bool valid_integer(std::string_view s) {
            if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
                s.remove_prefix(1);
            }
            if (s.empty()) {
                return false;
            }
            for (char c : s) {
                if (!std::isdigit(static_cast<unsigned char>(c))) {
                    return false;
                }
            }
            return true;
        }
    }  // namespace

    Rational parse_rational(std::string_view text) {
        auto slash = text.find('/');
        std::string_view num = text.substr(0, slash);
        std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
        if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+') {
            throw PreconditionError("malformed rational: '" + std::string(text) + "'");
        }
        std::string n(num.front() == '+' ? num.substr(1) : num);
        Integer p(n, 10);
        Integer q(std::string(den), 10);
        if (q == 0) {
            throw PreconditionError("zero denominator in rational: '" + std::string(text) + "'");
        }
        Rational r(p, q);
        r.canonicalize();
        return r;
    }

    Rational factorial(unsigned n) {
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), n);
        return Rational(f);
    }

    Rational binomial(long n, long k) {
        if (k < 0 || n < 0 || k > n) {
            return 0;
        }
        Integer b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return Rational(b);
    }

}  // namespace renormkit
