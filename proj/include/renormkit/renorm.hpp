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
 // The Chern character exp(bT), the flow generator D = sum_n (p_{n-1}/n) d_T^n with p_0 = 1,
 // the renormalization Z = (exp(-D) then T = 0), and the modulus exp(-sum_n p_{n-1} b^n / n).

#ifndef RENORMKIT_RENORM_HPP
#define RENORMKIT_RENORM_HPP

#include <map>
#include <string>
#include <utility>

#include "renormkit/fgl.hpp"
#include "renormkit/polynomial.hpp"

namespace renormkit {

    // p_k as a polynomial variable, with p_0 = 1.
    Poly power_sum(int k);

    /* Double series sum c_{ij} b^i T^j with coefficients in Q[p_1, p_2, ...], kept for
     * i <= max_b and j <= max_T. Truncating each variable separately keeps b^k T^k / k!
     * in exp(bT) for every k <= maxdeg. */
    class BTSeries {
    public:
        using Key = std::pair<int, int>;  // (b-degree, T-degree)
        using Terms = std::map<Key, Poly>;

        explicit BTSeries(int maxdeg) : BTSeries(maxdeg, maxdeg) {}
        BTSeries(int max_b, int max_T);

        static BTSeries constant(int maxdeg, const Poly& c);
        static BTSeries monomial(int max_b, int max_T, int b_degree, int t_degree, const Poly& c);

        int max_b() const { return max_b_; }
        int max_T() const { return max_T_; }
        const Terms& terms() const { return terms_; }
        bool is_zero() const { return terms_.empty(); }
        Poly coefficient(int b_degree, int t_degree) const;

        void add_term(int b_degree, int t_degree, const Poly& c);

        BTSeries& operator+=(const BTSeries& other);
        BTSeries& operator-=(const BTSeries& other);
        // Multiplication by a coefficient free of b and T.
        BTSeries& operator*=(const Poly& c);

        friend BTSeries operator+(BTSeries a, const BTSeries& b) { return a += b; }
        friend BTSeries operator-(BTSeries a, const BTSeries& b) { return a -= b; }
        friend BTSeries operator*(const BTSeries& a, const BTSeries& b);
        friend BTSeries operator*(BTSeries a, const Poly& c) { return a *= c; }

        BTSeries derivative_T() const;
        // The T^0 part as a series in b.
        TruncSeries at_T_zero() const;
        // Drops terms with b-degree + T-degree > d.
        BTSeries total_degree_at_most(int d) const;

        std::string str() const;

        bool operator==(const BTSeries&) const = default;

    private:
        int max_b_;
        int max_T_;
        Terms terms_;
    };

    std::ostream& operator<<(std::ostream& os, const BTSeries& s);

    /* A constant-coefficient differential operator sum_n c_n d_T^n, n = 0..max_order. Orders
     * above max_order are dropped, which is exact on series of T-degree <= max_order. */
    class FlowOperator {
    public:
        explicit FlowOperator(int max_order);

        static FlowOperator identity(int max_order);

        int max_order() const { return max_order_; }
        const std::map<int, Poly>& coefficients() const { return coeffs_; }
        Poly coefficient(int order) const;
        void add_term(int order, const Poly& c);

        FlowOperator& operator+=(const FlowOperator& other);
        FlowOperator& operator*=(const Poly& c);
        friend FlowOperator operator+(FlowOperator a, const FlowOperator& b) { return a += b; }
        friend FlowOperator operator*(FlowOperator a, const Poly& c) { return a *= c; }
        // Composition; the coefficients are central, so this is commutative.
        friend FlowOperator operator*(const FlowOperator& a, const FlowOperator& b);

        BTSeries apply(const BTSeries& s) const;

        // exp(s * this), a finite sum once truncated when the operator has no order-0 term.
        FlowOperator exp(const Rational& s = 1) const;

        std::string str() const;

        bool operator==(const FlowOperator&) const = default;

    private:
        int max_order_;
        std::map<int, Poly> coeffs_;
    };

    // sum_{k <= maxdeg} b^k T^k / k!. Throws PreconditionError if maxdeg < 0.
    BTSeries chern_character(int maxdeg);

    // D = sum_{n=1}^{maxorder} (p_{n-1}/n) d_T^n. Throws PreconditionError if maxorder < 1.
    FlowOperator cartier_generator(int maxorder);

    /* exp(-D) applied to s, evaluated at T = 0, through b^maxdeg. Throws TruncationError if
     * s is truncated below maxdeg in b or in T. */
    TruncSeries renormalize(const BTSeries& s, int maxdeg);

    // L(b) = sum_{n=1}^{maxdeg} p_{n-1} b^n / n.
    TruncSeries log_mu(int maxdeg);

    // exp(-L(b)) through b^maxdeg. Throws PreconditionError if maxdeg < 0.
    TruncSeries st_modulus(int maxdeg);

}  // namespace renormkit

#endif  // RENORMKIT_RENORM_HPP
