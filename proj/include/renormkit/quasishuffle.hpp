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
 // The Hoffman algebra h^1 = Q<y_1, y_2, ...> with its quasi-shuffle products, the
 // deconcatenation coproduct, Hoffman's exp/log, the regularization h^1 = h^0[T], the
 // NSymm/QSymm pairing and translations T -> T - gamma of Laurent polynomials.

#ifndef RENORMKIT_QUASISHUFFLE_HPP
#define RENORMKIT_QUASISHUFFLE_HPP

#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "renormkit/combinatorics.hpp"
#include "renormkit/rational.hpp"

namespace renormkit {

    /* Finite rational combination of words. Zero coefficients are never stored. */
    class WordPoly {
    public:
        using Terms = std::map<Composition, Rational>;

        WordPoly() = default;
        WordPoly(const Composition& w, const Rational& c = 1);  // NOLINT

        // c times the empty word.
        static WordPoly scalar(const Rational& c) { return WordPoly(Composition{}, c); }

        const Terms& terms() const { return terms_; }
        bool is_zero() const { return terms_.empty(); }
        std::size_t size() const { return terms_.size(); }
        Rational coefficient(const Composition& w) const;

        // All words share one weight (the zero polynomial counts as homogeneous).
        bool is_homogeneous() const;
        int max_weight() const;

        void add_term(const Composition& w, const Rational& c);

        WordPoly& operator+=(const WordPoly& other);
        WordPoly& operator-=(const WordPoly& other);
        WordPoly& operator*=(const Rational& c);

        friend WordPoly operator+(WordPoly a, const WordPoly& b) { return a += b; }
        friend WordPoly operator-(WordPoly a, const WordPoly& b) { return a -= b; }
        friend WordPoly operator*(WordPoly a, const Rational& c) { return a *= c; }
        friend WordPoly operator*(const Rational& c, WordPoly a) { return a *= c; }
        WordPoly operator-() const { return *this * Rational(-1); }

        // "(1,2) + 1/2*(3)"; zero prints as "0".
        std::string str() const;

        bool operator==(const WordPoly&) const = default;

    private:
        Terms terms_;
    };

    std::ostream& operator<<(std::ostream& os, const WordPoly& p);

    /* The letter-merging rule of a quasi-shuffle product: a commutative map from a pair of
     * letters to a rational combination of letters. */
    class Bracket {
    public:
        using LetterSum = std::vector<std::pair<int, Rational>>;
        using Rule = std::function<LetterSum(int, int)>;

        Bracket(Rule rule, std::string name) : rule_(std::move(rule)), name_(std::move(name)) {}

        // (a, b) -> y_{a+b}: the stuffle product *.
        static Bracket standard();
        // (a, b) -> 0: the shuffle product.
        static Bracket null();

        LetterSum operator()(int a, int b) const { return rule_ ? rule_(a, b) : LetterSum{}; }
        const std::string& name() const { return name_; }

    private:
        Rule rule_;
        std::string name_;
    };

    WordPoly quasi_shuffle(const Composition& u, const Composition& v, const Bracket& br);
    WordPoly quasi_shuffle(const WordPoly& u, const WordPoly& v, const Bracket& br);

    // Standard-bracket product.
    WordPoly stuffle(const WordPoly& u, const WordPoly& v);
    // Null-bracket product.
    WordPoly shuffle(const WordPoly& u, const WordPoly& v);
    // Noncommutative concatenation product (the product of NSymm).
    WordPoly concatenate(const WordPoly& u, const WordPoly& v);

    // n-th power under the given product, with p^0 the empty word.
    WordPoly power(const WordPoly& p, unsigned n, const Bracket& br);

    // ------------------------------------------------------------ Hopf structure

    // Every splitting w = u.v, from (empty, w) to (w, empty).
    std::vector<std::pair<Composition, Composition>> deconcat_coproduct(const Composition& w);

    /* Element of h^1 (x) h^1. */
    class TensorPoly {
    public:
        using Key = std::pair<Composition, Composition>;
        using Terms = std::map<Key, Rational>;

        TensorPoly() = default;

        const Terms& terms() const { return terms_; }
        bool is_zero() const { return terms_.empty(); }
        Rational coefficient(const Composition& left, const Composition& right) const;

        void add_term(const Composition& left, const Composition& right, const Rational& c);
        TensorPoly& operator+=(const TensorPoly& other);

        bool operator==(const TensorPoly&) const = default;

    private:
        Terms terms_;
    };

    TensorPoly coproduct(const WordPoly& p);

    // (a (x) b)(c (x) d) = (a * c) (x) (b * d) under the given bracket on both sides.
    TensorPoly tensor_product(const TensorPoly& x, const TensorPoly& y, const Bracket& br);

    // Coefficient of the empty word.
    Rational counit(const WordPoly& p);

    // S(empty) = 1, S(w) = -sum_{w = u.v, v nonempty} S(u) * v.
    WordPoly antipode(const WordPoly& p, const Bracket& br);

    // ----------------------------------------------------------- Hoffman exp/log

    /* Sums over all ways of merging runs of consecutive letters. A run of length i is
     * merged by iterating the bracket and weighted by 1/i! (exp) or (-1)^{i-1}/i (log).
     * With the standard bracket, hoffman_exp(u # v) = hoffman_exp(u) * hoffman_exp(v). */
    WordPoly hoffman_exp(const WordPoly& p, const Bracket& br = Bracket::standard());
    WordPoly hoffman_log(const WordPoly& p, const Bracket& br = Bracket::standard());

    // ------------------------------------------------------------ regularization

    /* Polynomial in a central variable T whose coefficients are supported on admissible
     * words; coefficients multiply on the left: sum_i coeff(i) * T^i. */
    class RegularizedPoly {
    public:
        RegularizedPoly() = default;

        // The element c * T^power.
        static RegularizedPoly monomial(const WordPoly& c, int power);

        const std::map<int, WordPoly>& coefficients() const { return coeffs_; }
        WordPoly coefficient(int power) const;
        int degree() const;  // -1 for zero
        bool is_zero() const { return coeffs_.empty(); }

        RegularizedPoly& operator+=(const RegularizedPoly& other);
        RegularizedPoly& operator-=(const RegularizedPoly& other);
        RegularizedPoly& operator*=(const Rational& c);

        friend RegularizedPoly operator+(RegularizedPoly a, const RegularizedPoly& b) { return a += b; }
        friend RegularizedPoly operator-(RegularizedPoly a, const RegularizedPoly& b) { return a -= b; }

        std::string str() const;

        bool operator==(const RegularizedPoly&) const = default;

    private:
        void add(int power, const WordPoly& c);

        std::map<int, WordPoly> coeffs_;
    };

    std::ostream& operator<<(std::ostream& os, const RegularizedPoly& r);

    // Stuffle product with T central.
    RegularizedPoly operator*(const RegularizedPoly& a, const RegularizedPoly& b);

    // The stuffle-algebra isomorphism h^1 -> h^0[T] sending y_1 to T.
    RegularizedPoly regularize(const WordPoly& p);
    RegularizedPoly regularize(const Composition& w);

    // Inverse of regularize: T^i becomes the i-th stuffle power of y_1.
    WordPoly unregularize(const RegularizedPoly& r);

    // ------------------------------------------------------------------- pairing

    // <y_I, M_J> = [I == J], extended bilinearly.
    Rational pairing(const Composition& nsymm_word, const WordPoly& qsymm_elt);
    Rational pairing(const WordPoly& nsymm_elt, const WordPoly& qsymm_elt);
    Rational pairing(const TensorPoly& nsymm_elt, const TensorPoly& qsymm_elt);

    // ------------------------------------------------------- Laurent polynomials

    /* Finite Laurent polynomial in T. */
    class LaurentPoly {
    public:
        LaurentPoly() = default;

        static LaurentPoly monomial(int exponent, const Rational& c);

        const std::map<int, Rational>& coefficients() const { return coeffs_; }
        Rational coefficient(int exponent) const;
        void add_term(int exponent, const Rational& c);

        LaurentPoly& operator+=(const LaurentPoly& other);
        friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }

        std::string str() const;

        bool operator==(const LaurentPoly&) const = default;

    private:
        std::map<int, Rational> coeffs_;
    };

    std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

    /* T -> T - gamma, with gamma a rational multiple of the formal unit 2*pi. Throws
     * UnsupportedSubstitutionError if p has a negative power of T and gamma != 0. */
    LaurentPoly alexander_twist(const LaurentPoly& p, const Rational& gamma);

}  // namespace renormkit

#endif  // RENORMKIT_QUASISHUFFLE_HPP
