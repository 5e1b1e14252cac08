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

#include "renormkit/polynomial.hpp"

#include <algorithm>

namespace renormkit {

    std::string Var::str() const {
        return index == 0 ? std::string(1, family) : std::string(1, family) + std::to_string(index);
    }

    // ------------------------------------------------------------------ Monomial

    Monomial::Monomial(Var v, int exponent) {
        if (exponent > 0) {
            powers_.emplace_back(v, exponent);
        }
    }

    int Monomial::degree() const {
        int d = 0;
        for (const auto& [v, e] : powers_) {
            d += e;
        }
        return d;
    }

    int Monomial::degree_in(char family) const {
        int d = 0;
        for (const auto& [v, e] : powers_) {
            if (v.family == family) {
                d += e;
            }
        }
        return d;
    }

    int Monomial::exponent(Var v) const {
        for (const auto& [w, e] : powers_) {
            if (w == v) {
                return e;
            }
        }
        return 0;
    }

    Monomial Monomial::operator*(const Monomial& other) const {
        Monomial out;
        out.powers_.reserve(powers_.size() + other.powers_.size());
        auto a = powers_.begin();
        auto b = other.powers_.begin();
        while (a != powers_.end() || b != other.powers_.end()) {
            if (b == other.powers_.end() || (a != powers_.end() && a->first < b->first)) {
                out.powers_.push_back(*a++);
            } else if (a == powers_.end() || b->first < a->first) {
                out.powers_.push_back(*b++);
            } else {
                out.powers_.emplace_back(a->first, a->second + b->second);
                ++a;
                ++b;
            }
        }
        return out;
    }

    std::pair<Monomial, int> Monomial::split(Var v) const {
        Monomial rest;
        int e = 0;
        for (const auto& p : powers_) {
            if (p.first == v) {
                e = p.second;
            } else {
                rest.powers_.push_back(p);
            }
        }
        return {rest, e};
    }

    std::string Monomial::str() const {
        std::string out;
        for (const auto& [v, e] : powers_) {
            if (!out.empty()) {
                out += '*';
            }
            out += v.str();
            if (e != 1) {
                out += '^' + std::to_string(e);
            }
        }
        return out.empty() ? "1" : out;
    }

    // ---------------------------------------------------------------------- Poly

    Poly::Poly(const Rational& c) {
        add_term(Monomial{}, c);
    }

    Poly::Poly(const Monomial& m, const Rational& c) {
        add_term(m, c);
    }

    void Poly::add_term(const Monomial& m, const Rational& c) {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    bool Poly::is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    Rational Poly::constant_term() const {
        return coefficient(Monomial{});
    }

    Rational Poly::coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int Poly::degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) {
            d = std::max(d, m.degree());
        }
        return d;
    }

    bool Poly::is_integral() const {
        return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return is_integer(t.second); });
    }

    Poly& Poly::operator+=(const Poly& other) {
        for (const auto& [m, c] : other.terms_) {
            add_term(m, c);
        }
        return *this;
    }

    Poly& Poly::operator-=(const Poly& other) {
        for (const auto& [m, c] : other.terms_) {
            add_term(m, -c);
        }
        return *this;
    }

    Poly operator*(const Poly& a, const Poly& b) {
        Poly out;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                out.add_term(ma * mb, ca * cb);
            }
        }
        return out;
    }

    Poly& Poly::operator*=(const Poly& other) {
        *this = *this * other;
        return *this;
    }

    Poly& Poly::operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, coeff] : terms_) {
            coeff *= c;
        }
        return *this;
    }

    Poly Poly::operator-() const {
        Poly out = *this;
        out *= Rational(-1);
        return out;
    }

    Poly Poly::pow(unsigned n) const {
        Poly result(1);
        Poly base = *this;
        while (n) {
            if (n & 1U) {
                result *= base;
            }
            n >>= 1U;
            if (n) {
                base *= base;
            }
        }
        return result;
    }

    Poly Poly::substitute(const std::map<Var, Poly>& values) const {
        Poly out;
        std::map<std::pair<Var, int>, Poly> powers;
        for (const auto& [m, c] : terms_) {
            Poly term(c);
            Monomial kept;
            for (const auto& [v, e] : m.powers()) {
                auto it = values.find(v);
                if (it == values.end()) {
                    kept = kept * Monomial(v, e);
                    continue;
                }
                auto key = std::make_pair(v, e);
                auto pit = powers.find(key);
                if (pit == powers.end()) {
                    pit = powers.emplace(key, it->second.pow(static_cast<unsigned>(e))).first;
                }
                term *= pit->second;
            }
            out += term * Poly(kept, 1);
        }
        return out;
    }

    std::map<int, Poly> Poly::collect(Var v) const {
        std::map<int, Poly> out;
        for (const auto& [m, c] : terms_) {
            auto [rest, e] = m.split(v);
            out[e].add_term(rest, c);
        }
        std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
        return out;
    }

    std::string Poly::str() const {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational mag = abs(c);
            if (first) {
                out += c < 0 ? "-" : "";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            first = false;
            if (m.is_one()) {
                out += to_string(mag);
            } else {
                if (mag != 1) {
                    out += to_string(mag) + '*';
                }
                out += m.str();
            }
        }
        return out;
    }

}  // namespace renormkit
