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
 // Symmetric functions over Q in the monomial, elementary, complete and power-sum bases.

#ifndef RENORMKIT_SYMMFUNC_HPP
#define RENORMKIT_SYMMFUNC_HPP

#include <map>
#include <ostream>
#include <string>

#include "renormkit/combinatorics.hpp"
#include "renormkit/polynomial.hpp"
#include "renormkit/quasishuffle.hpp"
#include "renormkit/rational.hpp"

namespace renormkit {

    enum class Basis { m, e, h, p };

    char basis_letter(Basis b);
    // Throws PreconditionError for anything other than m, e, h, p.
    Basis parse_basis(char letter);

    /* A finite rational combination of basis elements b_lambda = b_{l1} b_{l2} ... (for m, the
     * monomial symmetric function m_lambda). The empty partition is the unit in every basis. */
    class SymPoly {
    public:
        using Terms = std::map<Partition, Rational>;

        explicit SymPoly(Basis basis = Basis::p) : basis_(basis) {}
        SymPoly(Basis basis, const Partition& lambda, const Rational& c = 1);

        static SymPoly unit(Basis basis = Basis::p) { return SymPoly(basis, Partition{}); }

        Basis basis() const { return basis_; }
        const Terms& terms() const { return terms_; }
        bool is_zero() const { return terms_.empty(); }
        Rational coefficient(const Partition& lambda) const;
        int degree() const;  // -1 for zero

        void add_term(const Partition& lambda, const Rational& c);

        // The right operand is first converted to the left operand's basis.
        SymPoly& operator+=(const SymPoly& other);
        SymPoly& operator-=(const SymPoly& other);
        SymPoly& operator*=(const Rational& c);

        friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
        friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
        friend SymPoly operator*(SymPoly a, const Rational& c) { return a *= c; }
        friend SymPoly operator*(const Rational& c, SymPoly a) { return a *= c; }

        // "p(2,1) - 1/2*p(3)"; zero prints as "0", the unit as "1".
        std::string str() const;

        // Same basis and coefficients; compare across bases with convert().
        bool operator==(const SymPoly&) const = default;

    private:
        Basis basis_;
        Terms terms_;
    };

    std::ostream& operator<<(std::ostream& os, const SymPoly& f);

    // Product of symmetric functions, expressed in the basis of a.
    SymPoly operator*(const SymPoly& a, const SymPoly& b);

    // Exact change of basis. Conversion tables are built once per degree and shared.
    SymPoly convert(const SymPoly& f, Basis target);

    // <h_lambda, m_mu> = [lambda == mu], extended bilinearly.
    Rational hall_pairing(const SymPoly& f, const SymPoly& g);

    // m_lambda -> sum of M_I over the distinct rearrangements I of lambda. Other bases
    // are converted to m first.
    WordPoly embed_qsymm(const SymPoly& f);

    // p_k, with the unit for k = 0. Throws PreconditionError for k < 0.
    SymPoly cp_class(int k);

    // The p-basis expansion as a polynomial in the variables p1, p2, ...
    Poly to_power_sum_poly(const SymPoly& f);
    // Inverse of to_power_sum_poly; throws PreconditionError on a variable outside p1, p2, ...
    SymPoly from_power_sum_poly(const Poly& f);

}  // namespace renormkit

#endif  // RENORMKIT_SYMMFUNC_HPP
