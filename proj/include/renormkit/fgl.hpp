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
 // Truncated multivariate power series, the universal formal group law X,Y -> m^{-1}(m(X) + m(Y)),
 // the Landweber-Novikov coaction of substitutions t(T) = T + t_1 T^2 + ... on e_1, e_2, ...,
 // and the total Chern polynomial prod_i t(x_i).

#ifndef RENORMKIT_FGL_HPP
#define RENORMKIT_FGL_HPP

#include <map>
#include <string>
#include <vector>

#include "renormkit/polynomial.hpp"

namespace renormkit {

    /* Power series in a fixed list of variables with polynomial coefficients, truncated at a
     * total degree: every term of degree > maxdeg is dropped, so products behave as in
     * Q[...][[X, Y, ...]] / (degree > maxdeg). */
    class TruncSeries {
    public:
        using Exponents = std::vector<int>;
        using Terms = std::map<Exponents, Poly>;

        TruncSeries(std::vector<std::string> vars, int maxdeg);

        static TruncSeries constant(std::vector<std::string> vars, int maxdeg, const Poly& c);
        // The i-th variable itself.
        static TruncSeries variable(std::vector<std::string> vars, int maxdeg, std::size_t i);
        // One-variable series sum_k coeffs[k] T^k.
        static TruncSeries univariate(const std::vector<Poly>& coeffs, int maxdeg, const std::string& var = "T");

        const std::vector<std::string>& vars() const { return vars_; }
        std::size_t nvars() const { return vars_.size(); }
        int maxdeg() const { return maxdeg_; }
        const Terms& terms() const { return terms_; }
        bool is_zero() const { return terms_.empty(); }

        Poly coefficient(const Exponents& e) const;
        // One-variable convenience: the coefficient of T^k.
        Poly coefficient(int k) const { return coefficient(Exponents{k}); }
        Poly constant_term() const { return coefficient(Exponents(vars_.size(), 0)); }

        void add_term(const Exponents& e, const Poly& c);

        // Same variables; the result keeps the smaller truncation.
        TruncSeries& operator+=(const TruncSeries& other);
        TruncSeries& operator-=(const TruncSeries& other);
        TruncSeries& operator*=(const Poly& c);

        friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
        friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
        friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
        friend TruncSeries operator*(TruncSeries a, const Poly& c) { return a *= c; }

        TruncSeries pow(unsigned n) const;
        TruncSeries truncated(int maxdeg) const;
        // Rename or reorder the variables of a series whose exponents already fit.
        TruncSeries with_vars(std::vector<std::string> vars) const;

        // Applies a map to every coefficient.
        template <typename F>
        TruncSeries map_coefficients(F&& f) const {
            TruncSeries out(vars_, maxdeg_);
            for (const auto& [e, c] : terms_) {
                out.add_term(e, f(c));
            }
            return out;
        }

        // "X + Y - 2*m1*X*Y + O(3)"
        std::string str() const;

        bool operator==(const TruncSeries&) const = default;

    private:
        std::vector<std::string> vars_;
        int maxdeg_;
        Terms terms_;
    };

    std::ostream& operator<<(std::ostream& os, const TruncSeries& s);

    /* f(g_1, ..., g_k) for f in k variables. All g share one variable list and have zero
     * constant term (CompositionDomainError otherwise); the result is truncated at the
     * smallest maxdeg involved. */
    TruncSeries compose(const TruncSeries& f, const std::vector<TruncSeries>& g);
    TruncSeries compose(const TruncSeries& f, const TruncSeries& g);

    /* Compositional inverse of a one-variable series with f(0) = 0 and a nonzero rational
     * linear coefficient. Throws NotInvertibleError otherwise. */
    TruncSeries invert(const TruncSeries& f);

    // exp(f) = sum_k f^k / k! for f with zero constant term (CompositionDomainError otherwise).
    TruncSeries exp_series(const TruncSeries& f);

    // T + sum_{i=1}^{maxdeg-1} family_i T^{i+1} with the family_i free variables.
    TruncSeries generic_substitution(char family, int maxdeg, const std::string& var = "T");

    // m(T) = T + m_1 T^2 + m_2 T^3 + ...
    TruncSeries mishchenko_series(int maxdeg);

    /* F(X, Y) = m^{-1}(m(X) + m(Y)) through total degree maxdeg, with coefficients in
     * Q[m_1, m_2, ...]. Throws PreconditionError if maxdeg < 1. */
    TruncSeries universal_fgl(int maxdeg);

    /* The image of e_n (n = 0..maxdeg) under t: the T^n coefficient of sum_k e_k t(T)^k,
     * as a polynomial in e_1, e_2, ... and the coefficients of t. */
    using Coaction = std::map<int, Poly>;
    Coaction landweber_coaction(const TruncSeries& t, int maxdeg);

    // Applies a coaction to a polynomial in e_1, e_2, ... (other variables are coefficients).
    Poly apply_coaction(const Coaction& rho, const Poly& f);

    /* prod_{i=1..n} t(x_i) through total x-degree maxdeg, rewritten as a polynomial in the
     * elementary symmetric functions e_1..e_n of x_1..x_n. Throws PreconditionError if n < 1. */
    Poly chern_polynomial(int n, const TruncSeries& t, int maxdeg);

    // Expresses a symmetric polynomial in x_1..x_n as a polynomial in e_1..e_n. Variables
    // other than x_i are treated as coefficients. Throws PreconditionError if not symmetric.
    Poly to_elementary(const Poly& f, int n);

}  // namespace renormkit

#endif  // RENORMKIT_FGL_HPP
