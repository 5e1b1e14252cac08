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

#include "renormkit/renorm.hpp"

#include <algorithm>

#include "renormkit/errors.hpp"

namespace renormkit {

    Poly power_sum(int k) {
        if (k < 0) {
            throw PreconditionError("power_sum: negative index");
        }
        return k == 0 ? Poly(1) : Poly::variable('p', k);
    }

    // ------------------------------------------------------------------ BTSeries

    BTSeries::BTSeries(int max_b, int max_T) : max_b_(max_b), max_T_(max_T) {
        if (max_b < 0 || max_T < 0) {
            throw PreconditionError("BTSeries: truncation must be nonnegative");
        }
    }

    BTSeries BTSeries::constant(int maxdeg, const Poly& c) {
        return monomial(maxdeg, maxdeg, 0, 0, c);
    }

    BTSeries BTSeries::monomial(int max_b, int max_T, int b_degree, int t_degree, const Poly& c) {
        BTSeries s(max_b, max_T);
        s.add_term(b_degree, t_degree, c);
        return s;
    }

    Poly BTSeries::coefficient(int b_degree, int t_degree) const {
        auto it = terms_.find(Key{b_degree, t_degree});
        return it == terms_.end() ? Poly() : it->second;
    }

    void BTSeries::add_term(int b_degree, int t_degree, const Poly& c) {
        if (b_degree < 0 || t_degree < 0) {
            throw PreconditionError("BTSeries: negative exponent");
        }
        if (c.is_zero() || b_degree > max_b_ || t_degree > max_T_) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(Key{b_degree, t_degree}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    BTSeries& BTSeries::operator+=(const BTSeries& other) {
        max_b_ = std::min(max_b_, other.max_b_);
        max_T_ = std::min(max_T_, other.max_T_);
        std::erase_if(terms_, [this](const auto& t) { return t.first.first > max_b_ || t.first.second > max_T_; });
        for (const auto& [k, c] : other.terms_) {
            add_term(k.first, k.second, c);
        }
        return *this;
    }

    BTSeries& BTSeries::operator-=(const BTSeries& other) {
        return *this += other * Poly(-1);
    }

    BTSeries& BTSeries::operator*=(const Poly& c) {
        Terms scaled;
        for (const auto& [k, coeff] : terms_) {
            Poly p = coeff * c;
            if (!p.is_zero()) {
                scaled.emplace(k, std::move(p));
            }
        }
        terms_ = std::move(scaled);
        return *this;
    }

    BTSeries operator*(const BTSeries& a, const BTSeries& b) {
        BTSeries out(std::min(a.max_b_, b.max_b_), std::min(a.max_T_, b.max_T_));
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
            }
        }
        return out;
    }

    BTSeries BTSeries::derivative_T() const {
        BTSeries out(max_b_, max_T_ > 0 ? max_T_ - 1 : 0);
        for (const auto& [k, c] : terms_) {
            if (k.second > 0) {
                out.add_term(k.first, k.second - 1, c * Poly(k.second));
            }
        }
        return out;
    }

    TruncSeries BTSeries::at_T_zero() const {
        TruncSeries out({"b"}, max_b_);
        for (const auto& [k, c] : terms_) {
            if (k.second == 0) {
                out.add_term({k.first}, c);
            }
        }
        return out;
    }

    BTSeries BTSeries::total_degree_at_most(int d) const {
        BTSeries out(max_b_, max_T_);
        for (const auto& [k, c] : terms_) {
            if (k.first + k.second <= d) {
                out.add_term(k.first, k.second, c);
            }
        }
        return out;
    }

    namespace {
        // Appends c*mono with the sign pulled out of single-term coefficients.
        void append_term(std::string& out, const Poly& c, const std::string& mono) {
            const bool negative = c.terms().size() == 1 && c.terms().begin()->second < 0;
            const Poly mag = negative ? -c : c;
            std::string coeff = mag.terms().size() == 1 ? mag.str() : "(" + mag.str() + ")";
            std::string term = mono.empty() ? coeff : mag == Poly(1) ? mono : coeff + "*" + mono;
            if (out.empty()) {
                out = (negative ? "-" : "") + term;
            } else {
                out += (negative ? " - " : " + ") + term;
            }
        }
    }  // namespace

    std::string BTSeries::str() const {
        std::string out;
        for (const auto& [k, c] : terms_) {
            std::string mono;
            if (k.first > 0) {
                mono += k.first == 1 ? "b" : "b^" + std::to_string(k.first);
            }
            if (k.second > 0) {
                mono += (mono.empty() ? "" : "*") + std::string(k.second == 1 ? "T" : "T^" + std::to_string(k.second));
            }
            append_term(out, c, mono);
        }
        return out.empty() ? "0" : out;
    }

    std::ostream& operator<<(std::ostream& os, const BTSeries& s) {
        return os << s.str();
    }

    // -------------------------------------------------------------- FlowOperator

    FlowOperator::FlowOperator(int max_order) : max_order_(max_order) {
        if (max_order < 0) {
            throw PreconditionError("FlowOperator: negative truncation order");
        }
    }

    FlowOperator FlowOperator::identity(int max_order) {
        FlowOperator op(max_order);
        op.add_term(0, Poly(1));
        return op;
    }

    Poly FlowOperator::coefficient(int order) const {
        auto it = coeffs_.find(order);
        return it == coeffs_.end() ? Poly() : it->second;
    }

    void FlowOperator::add_term(int order, const Poly& c) {
        if (order < 0) {
            throw PreconditionError("FlowOperator: negative order");
        }
        if (c.is_zero() || order > max_order_) {
            return;
        }
        auto [it, inserted] = coeffs_.try_emplace(order, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                coeffs_.erase(it);
            }
        }
    }

    FlowOperator& FlowOperator::operator+=(const FlowOperator& other) {
        max_order_ = std::min(max_order_, other.max_order_);
        std::erase_if(coeffs_, [this](const auto& t) { return t.first > max_order_; });
        for (const auto& [n, c] : other.coeffs_) {
            add_term(n, c);
        }
        return *this;
    }

    FlowOperator& FlowOperator::operator*=(const Poly& c) {
        std::map<int, Poly> scaled;
        for (const auto& [n, coeff] : coeffs_) {
            Poly p = coeff * c;
            if (!p.is_zero()) {
                scaled.emplace(n, std::move(p));
            }
        }
        coeffs_ = std::move(scaled);
        return *this;
    }

    FlowOperator operator*(const FlowOperator& a, const FlowOperator& b) {
        FlowOperator out(std::min(a.max_order_, b.max_order_));
        for (const auto& [na, ca] : a.coeffs_) {
            for (const auto& [nb, cb] : b.coeffs_) {
                out.add_term(na + nb, ca * cb);
            }
        }
        return out;
    }

    BTSeries FlowOperator::apply(const BTSeries& s) const {
        BTSeries out(s.max_b(), s.max_T());
        for (const auto& [k, c] : s.terms()) {
            // d_T^n T^j = j!/(j-n)! T^{j-n}
            Rational falling = 1;
            for (int n = 0; n <= k.second; ++n) {
                if (n > 0) {
                    falling *= k.second - n + 1;
                }
                auto it = coeffs_.find(n);
                if (it != coeffs_.end()) {
                    out.add_term(k.first, k.second - n, it->second * c * Poly(falling));
                }
            }
        }
        return out;
    }

    FlowOperator FlowOperator::exp(const Rational& s) const {
        if (!coefficient(0).is_zero()) {
            throw PreconditionError("FlowOperator::exp: operator must have no order-0 term");
        }
        FlowOperator scaled = *this * Poly(s);
        FlowOperator out = identity(max_order_);
        FlowOperator term = out;
        for (int k = 1; k <= max_order_; ++k) {
            term = term * scaled * Poly(Rational(1, k));
            out += term;
        }
        return out;
    }

    std::string FlowOperator::str() const {
        std::string out;
        for (const auto& [n, c] : coeffs_) {
            append_term(out, c, n == 0 ? "" : n == 1 ? "d_T" : "d_T^" + std::to_string(n));
        }
        return out.empty() ? "0" : out;
    }

    // ------------------------------------------------------------ renormalization

    BTSeries chern_character(int maxdeg) {
        if (maxdeg < 0) {
            throw PreconditionError("chern_character: maxdeg must be nonnegative");
        }
        BTSeries s(maxdeg);
        for (int k = 0; k <= maxdeg; ++k) {
            s.add_term(k, k, Poly(1 / factorial(static_cast<unsigned>(k))));
        }
        return s;
    }

    FlowOperator cartier_generator(int maxorder) {
        if (maxorder < 1) {
            throw PreconditionError("cartier_generator: maxorder must be at least 1");
        }
        FlowOperator d(maxorder);
        for (int n = 1; n <= maxorder; ++n) {
            d.add_term(n, power_sum(n - 1) * Poly(Rational(1, n)));
        }
        return d;
    }

    TruncSeries renormalize(const BTSeries& s, int maxdeg) {
        if (maxdeg < 0) {
            throw PreconditionError("renormalize: maxdeg must be nonnegative");
        }
        if (s.max_b() < maxdeg || s.max_T() < maxdeg) {
            throw TruncationError("renormalize: series truncated at (b^" + std::to_string(s.max_b()) + ", T^" +
                                  std::to_string(s.max_T()) + "), below the requested degree " +
                                  std::to_string(maxdeg));
        }
        const int order = std::max(1, s.max_T());
        const FlowOperator z = cartier_generator(order).exp(-1);
        return z.apply(s).at_T_zero().truncated(maxdeg);
    }

    TruncSeries log_mu(int maxdeg) {
        TruncSeries out({"b"}, maxdeg);
        for (int n = 1; n <= maxdeg; ++n) {
            out.add_term({n}, power_sum(n - 1) * Poly(Rational(1, n)));
        }
        return out;
    }

    TruncSeries st_modulus(int maxdeg) {
        if (maxdeg < 0) {
            throw PreconditionError("st_modulus: maxdeg must be nonnegative");
        }
        return exp_series(log_mu(maxdeg) * Poly(-1));
    }

}  // namespace renormkit
