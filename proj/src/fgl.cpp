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

#include "renormkit/fgl.hpp"

#include <algorithm>
#include <numeric>

#include "renormkit/errors.hpp"

namespace renormkit {

    namespace {
        int total(const TruncSeries::Exponents& e) {
            return std::accumulate(e.begin(), e.end(), 0);
        }

        void require_same_vars(const TruncSeries& a, const TruncSeries& b) {
            if (a.vars() != b.vars()) {
                throw PreconditionError("series over different variables");
            }
        }
    }  // namespace

    // --------------------------------------------------------------- TruncSeries

    TruncSeries::TruncSeries(std::vector<std::string> vars, int maxdeg) : vars_(std::move(vars)), maxdeg_(maxdeg) {
        if (maxdeg < 0) {
            throw PreconditionError("maxdeg must be nonnegative");
        }
    }

    TruncSeries TruncSeries::constant(std::vector<std::string> vars, int maxdeg, const Poly& c) {
        TruncSeries s(std::move(vars), maxdeg);
        s.add_term(Exponents(s.nvars(), 0), c);
        return s;
    }

    TruncSeries TruncSeries::variable(std::vector<std::string> vars, int maxdeg, std::size_t i) {
        TruncSeries s(std::move(vars), maxdeg);
        if (i >= s.nvars()) {
            throw PreconditionError("variable index out of range");
        }
        Exponents e(s.nvars(), 0);
        e[i] = 1;
        s.add_term(e, Poly(1));
        return s;
    }

    TruncSeries TruncSeries::univariate(const std::vector<Poly>& coeffs, int maxdeg, const std::string& var) {
        TruncSeries s({var}, maxdeg);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            s.add_term(Exponents{static_cast<int>(k)}, coeffs[k]);
        }
        return s;
    }

    Poly TruncSeries::coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Poly() : it->second;
    }

    void TruncSeries::add_term(const Exponents& e, const Poly& c) {
        if (e.size() != vars_.size()) {
            throw PreconditionError("exponent vector has the wrong length");
        }
        if (c.is_zero() || total(e) > maxdeg_) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    TruncSeries& TruncSeries::operator+=(const TruncSeries& other) {
        require_same_vars(*this, other);
        if (other.maxdeg_ < maxdeg_) {
            *this = truncated(other.maxdeg_);
        }
        for (const auto& [e, c] : other.terms_) {
            add_term(e, c);
        }
        return *this;
    }

    TruncSeries& TruncSeries::operator-=(const TruncSeries& other) {
        require_same_vars(*this, other);
        if (other.maxdeg_ < maxdeg_) {
            *this = truncated(other.maxdeg_);
        }
        for (const auto& [e, c] : other.terms_) {
            add_term(e, -c);
        }
        return *this;
    }

    TruncSeries& TruncSeries::operator*=(const Poly& c) {
        Terms scaled;
        for (auto& [e, coeff] : terms_) {
            Poly p = coeff * c;
            if (!p.is_zero()) {
                scaled.emplace(e, std::move(p));
            }
        }
        terms_ = std::move(scaled);
        return *this;
    }

    TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        require_same_vars(a, b);
        TruncSeries out(a.vars_, std::min(a.maxdeg_, b.maxdeg_));
        TruncSeries::Exponents e(a.nvars());
        for (const auto& [ea, ca] : a.terms_) {
            const int da = total(ea);
            for (const auto& [eb, cb] : b.terms_) {
                if (da + total(eb) > out.maxdeg_) {
                    continue;
                }
                for (std::size_t i = 0; i < e.size(); ++i) {
                    e[i] = ea[i] + eb[i];
                }
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    TruncSeries TruncSeries::pow(unsigned n) const {
        TruncSeries out = constant(vars_, maxdeg_, Poly(1));
        for (unsigned i = 0; i < n; ++i) {
            out = out * *this;
        }
        return out;
    }

    TruncSeries TruncSeries::truncated(int maxdeg) const {
        TruncSeries out(vars_, std::min(maxdeg, maxdeg_));
        for (const auto& [e, c] : terms_) {
            out.add_term(e, c);
        }
        return out;
    }

    TruncSeries TruncSeries::with_vars(std::vector<std::string> vars) const {
        if (vars.size() != vars_.size()) {
            throw PreconditionError("with_vars: variable count mismatch");
        }
        TruncSeries out(std::move(vars), maxdeg_);
        out.terms_ = terms_;
        return out;
    }

    std::string TruncSeries::str() const {
        std::vector<std::pair<Exponents, Poly>> sorted(terms_.begin(), terms_.end());
        std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
            return total(a.first) < total(b.first) || (total(a.first) == total(b.first) && a.first > b.first);
        });
        std::string out;
        for (const auto& [e, c] : sorted) {
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) {
                    continue;
                }
                mono += (mono.empty() ? "" : "*") + vars_[i];
                if (e[i] > 1) {
                    mono += "^" + std::to_string(e[i]);
                }
            }
            bool negative = false;
            std::string coeff;
            if (c.is_constant()) {
                const Rational r = c.constant_term();
                negative = r < 0;
                if (abs(r) != 1 || mono.empty()) {
                    coeff = to_string(abs(r));
                }
            } else if (c.terms().size() == 1 && c.terms().begin()->second < 0) {
                negative = true;
                coeff = (-c).str();
            } else {
                coeff = c.terms().size() == 1 ? c.str() : "(" + c.str() + ")";
            }
            std::string term = coeff.empty() ? mono : mono.empty() ? coeff : coeff + "*" + mono;
            if (out.empty()) {
                out = (negative ? "-" : "") + term;
            } else {
                out += (negative ? " - " : " + ") + term;
            }
        }
        return (out.empty() ? "0" : out) + " + O(" + std::to_string(maxdeg_ + 1) + ")";
    }

    std::ostream& operator<<(std::ostream& os, const TruncSeries& s) {
        return os << s.str();
    }

    // --------------------------------------------------------------- composition

    TruncSeries compose(const TruncSeries& f, const std::vector<TruncSeries>& g) {
        if (g.size() != f.nvars() || g.empty()) {
            throw PreconditionError("compose: need one inner series per outer variable");
        }
        int maxdeg = f.maxdeg();
        for (const auto& gi : g) {
            require_same_vars(g.front(), gi);
            if (!gi.constant_term().is_zero()) {
                throw CompositionDomainError("compose: inner series has a nonzero constant term");
            }
            maxdeg = std::min(maxdeg, gi.maxdeg());
        }
        // powers[i][k] = g_i^k, built lazily up to the largest exponent f needs
        std::vector<std::vector<TruncSeries>> powers(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            powers[i].push_back(TruncSeries::constant(g[i].vars(), maxdeg, Poly(1)));
        }
        TruncSeries out(g.front().vars(), maxdeg);
        for (const auto& [e, c] : f.terms()) {
            if (total(e) > maxdeg) {
                continue;
            }
            TruncSeries term = TruncSeries::constant(out.vars(), maxdeg, c);
            for (std::size_t i = 0; i < e.size(); ++i) {
                auto& pw = powers[i];
                while (static_cast<int>(pw.size()) <= e[i]) {
                    pw.push_back((pw.back() * g[i]).truncated(maxdeg));
                }
                if (e[i] > 0) {
                    term = term * pw[static_cast<std::size_t>(e[i])];
                }
            }
            out += term;
        }
        return out;
    }

    TruncSeries compose(const TruncSeries& f, const TruncSeries& g) {
        return compose(f, std::vector<TruncSeries>{g});
    }

    TruncSeries invert(const TruncSeries& f) {
        if (f.nvars() != 1) {
            throw PreconditionError("invert: one-variable series expected");
        }
        const Poly a = f.coefficient(1);
        if (!f.constant_term().is_zero() || !a.is_constant() || a.is_zero()) {
            throw NotInvertibleError("invert: need f(0) = 0 and a nonzero rational linear coefficient");
        }
        const Rational inv_a = 1 / a.constant_term();
        TruncSeries g(f.vars(), f.maxdeg());
        g.add_term({1}, Poly(inv_a));
        for (int k = 2; k <= f.maxdeg(); ++k) {
            const Poly c = compose(f, g).coefficient(k);
            if (!c.is_zero()) {
                g.add_term({k}, -c * inv_a);
            }
        }
        return g;
    }

    TruncSeries exp_series(const TruncSeries& f) {
        if (!f.constant_term().is_zero()) {
            throw CompositionDomainError("exp_series: nonzero constant term");
        }
        TruncSeries out = TruncSeries::constant(f.vars(), f.maxdeg(), Poly(1));
        TruncSeries term = out;
        for (int k = 1; k <= f.maxdeg(); ++k) {
            term = term * f * Poly(Rational(1, k));
            out += term;
        }
        return out;
    }

    TruncSeries generic_substitution(char family, int maxdeg, const std::string& var) {
        std::vector<Poly> coeffs{Poly(0), Poly(1)};
        for (int i = 1; i + 1 <= maxdeg; ++i) {
            coeffs.push_back(Poly::variable(family, i));
        }
        return TruncSeries::univariate(coeffs, maxdeg, var);
    }

    TruncSeries mishchenko_series(int maxdeg) {
        return generic_substitution('m', maxdeg);
    }

    TruncSeries universal_fgl(int maxdeg) {
        if (maxdeg < 1) {
            throw PreconditionError("universal_fgl: maxdeg must be at least 1");
        }
        const TruncSeries m = mishchenko_series(maxdeg);
        const std::vector<std::string> xy{"X", "Y"};
        const TruncSeries mx = compose(m, TruncSeries::variable(xy, maxdeg, 0));
        const TruncSeries my = compose(m, TruncSeries::variable(xy, maxdeg, 1));
        return compose(invert(m), mx + my);
    }

    // ------------------------------------------------------- Landweber-Novikov

    Coaction landweber_coaction(const TruncSeries& t, int maxdeg) {
        if (t.nvars() != 1 || !t.constant_term().is_zero()) {
            throw PreconditionError("landweber_coaction: need a one-variable series with t(0) = 0");
        }
        const TruncSeries tt = t.truncated(maxdeg);
        Coaction rho;
        for (int n = 0; n <= maxdeg; ++n) {
            rho[n] = Poly();
        }
        TruncSeries power = TruncSeries::constant(tt.vars(), tt.maxdeg(), Poly(1));
        for (int k = 0; k <= maxdeg; ++k) {
            const Poly ek = k == 0 ? Poly(1) : Poly::variable('e', k);
            for (const auto& [e, c] : power.terms()) {
                rho[e[0]] += ek * c;
            }
            power = power * tt;
        }
        return rho;
    }

    Poly apply_coaction(const Coaction& rho, const Poly& f) {
        std::map<Var, Poly> values;
        for (const auto& [n, image] : rho) {
            if (n >= 1) {
                values[Var{'e', n}] = image;
            }
        }
        return f.substitute(values);
    }

    // ------------------------------------------------------------ Chern classes

    namespace {
        // Symmetric-polynomial workspace: x-exponent vector -> coefficient in the other variables.
        using XPoly = std::map<std::vector<int>, Poly>;

        XPoly split_x(const Poly& f, int n) {
            XPoly out;
            for (const auto& [mono, c] : f.terms()) {
                std::vector<int> ex(static_cast<std::size_t>(n), 0);
                Poly rest(c);
                for (const auto& [v, e] : mono.powers()) {
                    if (v.family == 'x') {
                        if (v.index < 1 || v.index > n) {
                            throw PreconditionError("to_elementary: variable " + v.str() + " outside x1..xn");
                        }
                        ex[static_cast<std::size_t>(v.index - 1)] = e;
                    } else {
                        rest *= Poly(Monomial(v, e), 1);
                    }
                }
                Poly& slot = out[ex];
                slot += rest;
                if (slot.is_zero()) {
                    out.erase(ex);
                }
            }
            return out;
        }

        void add_into(XPoly& acc, const XPoly& f, const Poly& scale) {
            for (const auto& [e, c] : f) {
                Poly& slot = acc[e];
                slot += c * scale;
                if (slot.is_zero()) {
                    acc.erase(e);
                }
            }
        }

        XPoly multiply(const XPoly& a, const XPoly& b) {
            XPoly out;
            for (const auto& [ea, ca] : a) {
                for (const auto& [eb, cb] : b) {
                    std::vector<int> e(ea.size());
                    for (std::size_t i = 0; i < e.size(); ++i) {
                        e[i] = ea[i] + eb[i];
                    }
                    Poly& slot = out[e];
                    slot += ca * cb;
                    if (slot.is_zero()) {
                        out.erase(e);
                    }
                }
            }
            return out;
        }
    }  // namespace

    Poly to_elementary(const Poly& f, int n) {
        if (n < 1) {
            throw PreconditionError("to_elementary: n must be at least 1");
        }
        const auto un = static_cast<std::size_t>(n);
        std::vector<XPoly> e(un + 1);
        for (int k = 1; k <= n; ++k) {
            // e_k = sum over k-subsets of x1..xn
            std::vector<int> mask(un, 0);
            std::fill(mask.begin(), mask.begin() + k, 1);
            std::sort(mask.begin(), mask.end());
            do {
                e[static_cast<std::size_t>(k)][mask] = Poly(1);
            } while (std::next_permutation(mask.begin(), mask.end()));
        }
        XPoly rem = split_x(f, n);
        Poly out;
        while (!rem.empty()) {
            const auto [lead, c] = *rem.rbegin();
            XPoly product{{std::vector<int>(un, 0), Poly(1)}};
            Poly e_mono(1);
            for (std::size_t k = 0; k < un; ++k) {
                const int b = lead[k] - (k + 1 < un ? lead[k + 1] : 0);
                if (b < 0) {
                    throw PreconditionError("to_elementary: polynomial is not symmetric");
                }
                for (int j = 0; j < b; ++j) {
                    product = multiply(product, e[k + 1]);
                }
                if (b > 0) {
                    e_mono *= Poly::variable('e', static_cast<int>(k + 1)).pow(static_cast<unsigned>(b));
                }
            }
            out += e_mono * c;
            add_into(rem, product, -c);
        }
        return out;
    }

    Poly chern_polynomial(int n, const TruncSeries& t, int maxdeg) {
        if (n < 1) {
            throw PreconditionError("chern_polynomial: n must be at least 1");
        }
        if (t.nvars() != 1 || !t.constant_term().is_zero()) {
            throw PreconditionError("chern_polynomial: need a one-variable series with t(0) = 0");
        }
        auto truncate_x = [maxdeg](const Poly& p) {
            Poly out;
            for (const auto& [mono, c] : p.terms()) {
                if (mono.degree_in('x') <= maxdeg) {
                    out += Poly(mono, c);
                }
            }
            return out;
        };
        Poly product(1);
        for (int i = 1; i <= n; ++i) {
            Poly factor;
            for (const auto& [e, c] : t.terms()) {
                if (e[0] <= maxdeg) {
                    factor += c * Poly::variable('x', i).pow(static_cast<unsigned>(e[0]));
                }
            }
            product = truncate_x(product * factor);
        }
        return to_elementary(product, n);
    }

}  // namespace renormkit
