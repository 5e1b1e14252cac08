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
 // Sparse commutative polynomials over Q in named, indexed variables (p1, m3, t2, ...).

#ifndef RENORMKIT_POLYNOMIAL_HPP
#define RENORMKIT_POLYNOMIAL_HPP

#include <compare>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "renormkit/rational.hpp"

namespace renormkit {

    // A variable is a family letter plus an index; index 0 prints as the bare letter.
    struct Var {
        char family = 'x';
        int index = 0;

        std::string str() const;

        auto operator<=>(const Var&) const = default;
        bool operator==(const Var&) const = default;
    };

    class Monomial {
    public:
        Monomial() = default;
        explicit Monomial(Var v, int exponent = 1);

        const std::vector<std::pair<Var, int>>& powers() const { return powers_; }
        bool is_one() const { return powers_.empty(); }

        int degree() const;
        int degree_in(char family) const;
        int exponent(Var v) const;

        Monomial operator*(const Monomial& other) const;

        // Drop the given variable, returning its exponent.
        std::pair<Monomial, int> split(Var v) const;

        std::string str() const;

        auto operator<=>(const Monomial&) const = default;
        bool operator==(const Monomial&) const = default;

    private:
        std::vector<std::pair<Var, int>> powers_;  // sorted by Var, exponents > 0
    };

    class Poly {
    public:
        using Terms = std::map<Monomial, Rational>;

        Poly() = default;
        Poly(const Rational& c);  // NOLINT: constants convert implicitly
        Poly(int c) : Poly(Rational(c)) {}  // NOLINT
        Poly(const Monomial& m, const Rational& c);

        static Poly variable(Var v) { return Poly(Monomial(v), 1); }
        static Poly variable(char family, int index = 0) { return variable(Var{family, index}); }

        const Terms& terms() const { return terms_; }
        bool is_zero() const { return terms_.empty(); }
        bool is_constant() const;
        Rational constant_term() const;
        Rational coefficient(const Monomial& m) const;

        int degree() const;

        // Every coefficient is an integer.
        bool is_integral() const;

        Poly& operator+=(const Poly& other);
        Poly& operator-=(const Poly& other);
        Poly& operator*=(const Poly& other);
        Poly& operator*=(const Rational& c);

        friend Poly operator+(Poly a, const Poly& b) { return a += b; }
        friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
        friend Poly operator*(const Poly& a, const Poly& b);
        friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
        friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
        Poly operator-() const;

        Poly pow(unsigned n) const;

        // Replace variables by polynomials; variables not in the map are kept.
        Poly substitute(const std::map<Var, Poly>& values) const;

        // Collect by powers of one variable: result[k] is the coefficient of v^k.
        std::map<int, Poly> collect(Var v) const;

        std::string str() const;

        bool operator==(const Poly&) const = default;

    private:
        void add_term(const Monomial& m, const Rational& c);

        Terms terms_;
    };

    inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace renormkit

#endif  // RENORMKIT_POLYNOMIAL_HPP
