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

#include "renormkit/quasishuffle.hpp"

#include <algorithm>

#include "renormkit/errors.hpp"

namespace renormkit {

    // ------------------------------------------------------------------ WordPoly

    WordPoly::WordPoly(const Composition& w, const Rational& c) {
        add_term(w, c);
    }

    Rational WordPoly::coefficient(const Composition& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool WordPoly::is_homogeneous() const {
        if (terms_.empty()) {
            return true;
        }
        const int w = terms_.begin()->first.weight();
        return std::all_of(terms_.begin(), terms_.end(), [w](const auto& t) { return t.first.weight() == w; });
    }

    int WordPoly::max_weight() const {
        int w = -1;
        for (const auto& [word, c] : terms_) {
            w = std::max(w, word.weight());
        }
        return w;
    }

    void WordPoly::add_term(const Composition& w, const Rational& c) {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    WordPoly& WordPoly::operator+=(const WordPoly& other) {
        for (const auto& [w, c] : other.terms_) {
            add_term(w, c);
        }
        return *this;
    }

    WordPoly& WordPoly::operator-=(const WordPoly& other) {
        for (const auto& [w, c] : other.terms_) {
            add_term(w, -c);
        }
        return *this;
    }

    WordPoly& WordPoly::operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, coeff] : terms_) {
            coeff *= c;
        }
        return *this;
    }

    std::string WordPoly::str() const {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            Rational mag = abs(c);
            if (first) {
                out += c < 0 ? "-" : "";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            first = false;
            if (mag != 1) {
                out += to_string(mag) + '*';
            }
            out += w.str();
        }
        return out;
    }

    std::ostream& operator<<(std::ostream& os, const WordPoly& p) {
        return os << p.str();
    }

    // ------------------------------------------------------------------- Bracket

    Bracket Bracket::standard() {
        return Bracket([](int a, int b) { return LetterSum{{a + b, Rational(1)}}; }, "stuffle");
    }

    Bracket Bracket::null() {
        return Bracket(Rule{}, "shuffle");
    }

    // ------------------------------------------------------------------ products

    namespace {
        WordPoly prepend_all(int letter, const WordPoly& p, const Rational& scale = 1) {
            WordPoly out;
            for (const auto& [w, c] : p.terms()) {
                out.add_term(w.prepend(letter), c * scale);
            }
            return out;
        }
    }  // namespace

    WordPoly quasi_shuffle(const Composition& u, const Composition& v, const Bracket& br) {
        const std::size_t n = u.length();
        const std::size_t m = v.length();
        // table[i][j] = u[i..] * v[j..]
        std::vector<std::vector<WordPoly>> table(n + 1, std::vector<WordPoly>(m + 1));
        for (std::size_t i = 0; i <= n; ++i) {
            table[i][m] = WordPoly(u.slice(i, n));
        }
        for (std::size_t j = 0; j <= m; ++j) {
            table[n][j] = WordPoly(v.slice(j, m));
        }
        for (std::size_t i = n; i-- > 0;) {
            for (std::size_t j = m; j-- > 0;) {
                WordPoly cell = prepend_all(u[i], table[i + 1][j]);
                cell += prepend_all(v[j], table[i][j + 1]);
                for (const auto& [letter, coeff] : br(u[i], v[j])) {
                    cell += prepend_all(letter, table[i + 1][j + 1], coeff);
                }
                table[i][j] = std::move(cell);
            }
        }
        return table[0][0];
    }

    WordPoly quasi_shuffle(const WordPoly& u, const WordPoly& v, const Bracket& br) {
        WordPoly out;
        for (const auto& [a, ca] : u.terms()) {
            for (const auto& [b, cb] : v.terms()) {
                out += quasi_shuffle(a, b, br) * (ca * cb);
            }
        }
        return out;
    }

    WordPoly stuffle(const WordPoly& u, const WordPoly& v) {
        return quasi_shuffle(u, v, Bracket::standard());
    }

    WordPoly shuffle(const WordPoly& u, const WordPoly& v) {
        return quasi_shuffle(u, v, Bracket::null());
    }

    WordPoly concatenate(const WordPoly& u, const WordPoly& v) {
        WordPoly out;
        for (const auto& [a, ca] : u.terms()) {
            for (const auto& [b, cb] : v.terms()) {
                out.add_term(a.concat(b), ca * cb);
            }
        }
        return out;
    }

    WordPoly power(const WordPoly& p, unsigned n, const Bracket& br) {
        WordPoly out = WordPoly::scalar(1);
        for (unsigned i = 0; i < n; ++i) {
            out = quasi_shuffle(out, p, br);
        }
        return out;
    }

    // ------------------------------------------------------------ Hopf structure

    std::vector<std::pair<Composition, Composition>> deconcat_coproduct(const Composition& w) {
        std::vector<std::pair<Composition, Composition>> out;
        out.reserve(w.length() + 1);
        for (std::size_t k = 0; k <= w.length(); ++k) {
            out.emplace_back(w.slice(0, k), w.slice(k, w.length()));
        }
        return out;
    }

    Rational TensorPoly::coefficient(const Composition& left, const Composition& right) const {
        auto it = terms_.find(Key{left, right});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void TensorPoly::add_term(const Composition& left, const Composition& right, const Rational& c) {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(Key{left, right}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    TensorPoly& TensorPoly::operator+=(const TensorPoly& other) {
        for (const auto& [k, c] : other.terms_) {
            add_term(k.first, k.second, c);
        }
        return *this;
    }

    TensorPoly coproduct(const WordPoly& p) {
        TensorPoly out;
        for (const auto& [w, c] : p.terms()) {
            for (const auto& [left, right] : deconcat_coproduct(w)) {
                out.add_term(left, right, c);
            }
        }
        return out;
    }

    TensorPoly tensor_product(const TensorPoly& x, const TensorPoly& y, const Bracket& br) {
        TensorPoly out;
        for (const auto& [kx, cx] : x.terms()) {
            for (const auto& [ky, cy] : y.terms()) {
                const WordPoly left = quasi_shuffle(kx.first, ky.first, br);
                const WordPoly right = quasi_shuffle(kx.second, ky.second, br);
                const Rational c = cx * cy;
                for (const auto& [l, cl] : left.terms()) {
                    for (const auto& [r, cr] : right.terms()) {
                        out.add_term(l, r, c * cl * cr);
                    }
                }
            }
        }
        return out;
    }

    Rational counit(const WordPoly& p) {
        return p.coefficient(Composition{});
    }

    WordPoly antipode(const WordPoly& p, const Bracket& br) {
        std::map<Composition, WordPoly> memo;
        std::function<const WordPoly&(const Composition&)> on_word = [&](const Composition& w) -> const WordPoly& {
            auto it = memo.find(w);
            if (it != memo.end()) {
                return it->second;
            }
            WordPoly result = WordPoly::scalar(1);
            if (!w.empty()) {
                result = WordPoly{};
                for (std::size_t k = 0; k < w.length(); ++k) {
                    const WordPoly& head = on_word(w.slice(0, k));
                    result -= quasi_shuffle(head, WordPoly(w.slice(k, w.length())), br);
                }
            }
            return memo.emplace(w, std::move(result)).first->second;
        };
        WordPoly out;
        for (const auto& [w, c] : p.terms()) {
            out += on_word(w) * c;
        }
        return out;
    }

    // ----------------------------------------------------------- Hoffman exp/log

    namespace {
        using LetterSum = Bracket::LetterSum;

        // Iterated bracket of a run of letters.
        LetterSum merge_run(const Composition& w, std::size_t begin, std::size_t end, const Bracket& br) {
            std::map<int, Rational> acc{{w[begin], Rational(1)}};
            for (std::size_t k = begin + 1; k < end; ++k) {
                std::map<int, Rational> next;
                for (const auto& [letter, c] : acc) {
                    for (const auto& [merged, cm] : br(letter, w[k])) {
                        next[merged] += c * cm;
                    }
                }
                std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
                acc = std::move(next);
            }
            return LetterSum(acc.begin(), acc.end());
        }

        template <typename RunWeight>
        WordPoly contract_runs(const WordPoly& p, const Bracket& br, RunWeight run_weight) {
            WordPoly out;
            for (const auto& [w, c] : p.terms()) {
                const std::size_t n = w.length();
                if (n == 0) {
                    out.add_term(w, c);
                    continue;
                }
                for (const auto& blocks : compositions_of(static_cast<int>(n))) {
                    Rational weight = c;
                    WordPoly expansion = WordPoly::scalar(1);
                    std::size_t begin = 0;
                    for (int len : blocks.parts()) {
                        const std::size_t end = begin + static_cast<std::size_t>(len);
                        weight *= run_weight(len);
                        WordPoly next;
                        const LetterSum merged = len == 1 ? LetterSum{{w[begin], Rational(1)}}
                                                          : merge_run(w, begin, end, br);
                        for (const auto& [word, cw] : expansion.terms()) {
                            for (const auto& [letter, cl] : merged) {
                                next.add_term(word.concat(Composition{letter}), cw * cl);
                            }
                        }
                        expansion = std::move(next);
                        begin = end;
                    }
                    out += expansion * weight;
                }
            }
            return out;
        }
    }  // namespace

    WordPoly hoffman_exp(const WordPoly& p, const Bracket& br) {
        return contract_runs(p, br, [](int len) -> Rational { return 1 / factorial(static_cast<unsigned>(len)); });
    }

    WordPoly hoffman_log(const WordPoly& p, const Bracket& br) {
        return contract_runs(p, br, [](int len) -> Rational { return Rational(len % 2 ? 1 : -1, len); });
    }

    // ------------------------------------------------------------ regularization

    RegularizedPoly RegularizedPoly::monomial(const WordPoly& c, int power) {
        RegularizedPoly r;
        r.add(power, c);
        return r;
    }

    WordPoly RegularizedPoly::coefficient(int power) const {
        auto it = coeffs_.find(power);
        return it == coeffs_.end() ? WordPoly{} : it->second;
    }

    int RegularizedPoly::degree() const {
        return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
    }

    void RegularizedPoly::add(int power, const WordPoly& c) {
        if (c.is_zero()) {
            return;
        }
        WordPoly& slot = coeffs_[power];
        slot += c;
        if (slot.is_zero()) {
            coeffs_.erase(power);
        }
    }

    RegularizedPoly& RegularizedPoly::operator+=(const RegularizedPoly& other) {
        for (const auto& [k, c] : other.coeffs_) {
            add(k, c);
        }
        return *this;
    }

    RegularizedPoly& RegularizedPoly::operator-=(const RegularizedPoly& other) {
        for (const auto& [k, c] : other.coeffs_) {
            add(k, -c);
        }
        return *this;
    }

    RegularizedPoly& RegularizedPoly::operator*=(const Rational& c) {
        if (c == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& [k, p] : coeffs_) {
            p *= c;
        }
        return *this;
    }

    RegularizedPoly operator*(const RegularizedPoly& a, const RegularizedPoly& b) {
        RegularizedPoly out;
        for (const auto& [i, ca] : a.coefficients()) {
            for (const auto& [j, cb] : b.coefficients()) {
                out += RegularizedPoly::monomial(stuffle(ca, cb), i + j);
            }
        }
        return out;
    }

    std::string RegularizedPoly::str() const {
        if (coeffs_.empty()) {
            return "0";
        }
        std::string out;
        for (const auto& [k, c] : coeffs_) {
            if (!out.empty()) {
                out += " + ";
            }
            out += '[' + c.str() + ']';
            if (k == 1) {
                out += "*T";
            } else if (k > 1) {
                out += "*T^" + std::to_string(k);
            }
        }
        return out;
    }

    std::ostream& operator<<(std::ostream& os, const RegularizedPoly& r) {
        return os << r.str();
    }

    std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
        return os << p.str();
    }

    namespace {
        std::size_t leading_ones(const Composition& w) {
            std::size_t k = 0;
            while (k < w.length() && w[k] == 1) {
                ++k;
            }
            return k;
        }

        class Regularizer {
        public:
            const RegularizedPoly& word(const Composition& w) {
                auto it = memo_.find(w);
                if (it != memo_.end()) {
                    return it->second;
                }
                RegularizedPoly result;
                const std::size_t k = leading_ones(w);
                if (k == 0) {
                    result = RegularizedPoly::monomial(WordPoly(w), 0);
                } else {
                    // y_1 * v = c.w + (words with fewer leading y_1), c = k.
                    const Composition v = w.slice(1, w.length());
                    WordPoly product = quasi_shuffle(Composition{1}, v, Bracket::standard());
                    const Rational c = product.coefficient(w);
                    product.add_term(w, -c);
                    RegularizedPoly t_times_v;
                    for (const auto& [power, coeff] : word(v).coefficients()) {
                        t_times_v += RegularizedPoly::monomial(coeff, power + 1);
                    }
                    result = t_times_v - poly(product);
                    result *= 1 / c;
                }
                return memo_.emplace(w, std::move(result)).first->second;
            }

            RegularizedPoly poly(const WordPoly& p) {
                RegularizedPoly out;
                for (const auto& [w, c] : p.terms()) {
                    RegularizedPoly term = word(w);
                    term *= c;
                    out += term;
                }
                return out;
            }

        private:
            std::map<Composition, RegularizedPoly> memo_;
        };
    }  // namespace

    RegularizedPoly regularize(const WordPoly& p) {
        Regularizer reg;
        return reg.poly(p);
    }

    RegularizedPoly regularize(const Composition& w) {
        return regularize(WordPoly(w));
    }

    WordPoly unregularize(const RegularizedPoly& r) {
        WordPoly out;
        const WordPoly y1(Composition{1});
        WordPoly t_power = WordPoly::scalar(1);
        int reached = 0;
        for (const auto& [k, c] : r.coefficients()) {
            while (reached < k) {
                t_power = stuffle(t_power, y1);
                ++reached;
            }
            out += stuffle(c, t_power);
        }
        return out;
    }

    // ------------------------------------------------------------------- pairing

    Rational pairing(const Composition& nsymm_word, const WordPoly& qsymm_elt) {
        return qsymm_elt.coefficient(nsymm_word);
    }

    Rational pairing(const WordPoly& nsymm_elt, const WordPoly& qsymm_elt) {
        Rational total = 0;
        for (const auto& [w, c] : nsymm_elt.terms()) {
            total += c * qsymm_elt.coefficient(w);
        }
        return total;
    }

    Rational pairing(const TensorPoly& nsymm_elt, const TensorPoly& qsymm_elt) {
        Rational total = 0;
        for (const auto& [k, c] : nsymm_elt.terms()) {
            total += c * qsymm_elt.coefficient(k.first, k.second);
        }
        return total;
    }

    // ------------------------------------------------------- Laurent polynomials

    LaurentPoly LaurentPoly::monomial(int exponent, const Rational& c) {
        LaurentPoly p;
        p.add_term(exponent, c);
        return p;
    }

    Rational LaurentPoly::coefficient(int exponent) const {
        auto it = coeffs_.find(exponent);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    void LaurentPoly::add_term(int exponent, const Rational& c) {
        if (c == 0) {
            return;
        }
        Rational& slot = coeffs_[exponent];
        slot += c;
        if (slot == 0) {
            coeffs_.erase(exponent);
        }
    }

    LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
        for (const auto& [k, c] : other.coeffs_) {
            add_term(k, c);
        }
        return *this;
    }

    std::string LaurentPoly::str() const {
        if (coeffs_.empty()) {
            return "0";
        }
        std::string out;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            const auto& [k, c] = *it;
            if (!out.empty()) {
                out += c < 0 ? " - " : " + ";
            } else if (c < 0) {
                out += "-";
            }
            Rational mag = abs(c);
            if (k == 0) {
                out += to_string(mag);
                continue;
            }
            if (mag != 1) {
                out += to_string(mag) + '*';
            }
            out += k == 1 ? "T" : "T^" + std::to_string(k);
        }
        return out;
    }

    LaurentPoly alexander_twist(const LaurentPoly& p, const Rational& gamma) {
        if (gamma == 0) {
            return p;
        }
        LaurentPoly out;
        for (const auto& [n, c] : p.coefficients()) {
            if (n < 0) {
                throw UnsupportedSubstitutionError("alexander_twist: cannot substitute T -> T - gamma into T^" +
                                                   std::to_string(n));
            }
            // (T - gamma)^n = sum_j C(n, j) T^j (-gamma)^{n-j}
            Rational neg_gamma_power = 1;
            for (int j = n; j >= 0; --j) {
                out.add_term(j, c * binomial(n, j) * neg_gamma_power);
                neg_gamma_power *= -gamma;
            }
        }
        return out;
    }

}  // namespace renormkit
