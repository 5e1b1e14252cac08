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

#include "renormkit/symmfunc.hpp"

#include <array>
#include <memory>
#include <mutex>

#include "renormkit/errors.hpp"
#include "renormkit/linalg.hpp"

namespace renormkit {

    char basis_letter(Basis b) {
        switch (b) {
            case Basis::m: return 'm';
            case Basis::e: return 'e';
            case Basis::h: return 'h';
            case Basis::p: return 'p';
        }
        return '?';
    }

    Basis parse_basis(char letter) {
        switch (letter) {
            case 'm': return Basis::m;
            case 'e': return Basis::e;
            case 'h': return Basis::h;
            case 'p': return Basis::p;
            default: throw PreconditionError(std::string("unknown symmetric-function basis '") + letter + "'");
        }
    }

    // ------------------------------------------------------------------- SymPoly

    SymPoly::SymPoly(Basis basis, const Partition& lambda, const Rational& c) : basis_(basis) {
        add_term(lambda, c);
    }

    Rational SymPoly::coefficient(const Partition& lambda) const {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int SymPoly::degree() const {
        int d = -1;
        for (const auto& [lambda, c] : terms_) {
            d = std::max(d, lambda.weight());
        }
        return d;
    }

    void SymPoly::add_term(const Partition& lambda, const Rational& c) {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(lambda, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    SymPoly& SymPoly::operator+=(const SymPoly& other) {
        const SymPoly& rhs = other.basis_ == basis_ ? other : convert(other, basis_);
        for (const auto& [lambda, c] : rhs.terms_) {
            add_term(lambda, c);
        }
        return *this;
    }

    SymPoly& SymPoly::operator-=(const SymPoly& other) {
        const SymPoly& rhs = other.basis_ == basis_ ? other : convert(other, basis_);
        for (const auto& [lambda, c] : rhs.terms_) {
            add_term(lambda, -c);
        }
        return *this;
    }

    SymPoly& SymPoly::operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [lambda, coeff] : terms_) {
            coeff *= c;
        }
        return *this;
    }

    std::string SymPoly::str() const {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        bool first = true;
        for (const auto& [lambda, c] : terms_) {
            Rational mag = abs(c);
            if (first) {
                out += c < 0 ? "-" : "";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            first = false;
            if (lambda.empty()) {
                out += to_string(mag);
                continue;
            }
            if (mag != 1) {
                out += to_string(mag) + '*';
            }
            out += basis_letter(basis_) + lambda.str();
        }
        return out;
    }

    std::ostream& operator<<(std::ostream& os, const SymPoly& f) {
        return os << f.str();
    }

    // ---------------------------------------------------------- conversion tables

    namespace {
        using PExpansion = std::map<Partition, Rational>;

        PExpansion p_multiply(const PExpansion& a, const PExpansion& b) {
            PExpansion out;
            for (const auto& [la, ca] : a) {
                for (const auto& [lb, cb] : b) {
                    Rational& slot = out[la.join(lb)];
                    slot += ca * cb;
                }
            }
            std::erase_if(out, [](const auto& t) { return t.second == 0; });
            return out;
        }

        // Newton: n e_n = sum_r (-1)^{r-1} e_{n-r} p_r and n h_n = sum_r h_{n-r} p_r.
        std::vector<PExpansion> generator_expansions(int n, bool elementary) {
            std::vector<PExpansion> g(static_cast<std::size_t>(n) + 1);
            g[0][Partition{}] = 1;
            for (int k = 1; k <= n; ++k) {
                PExpansion& gk = g[static_cast<std::size_t>(k)];
                for (int r = 1; r <= k; ++r) {
                    const Rational sign = (elementary && r % 2 == 0) ? -1 : 1;
                    for (const auto& [lambda, c] : g[static_cast<std::size_t>(k - r)]) {
                        gk[lambda.join(Partition{r})] += sign * c / k;
                    }
                }
                std::erase_if(gk, [](const auto& t) { return t.second == 0; });
            }
            return g;
        }

        // Number of maps f from the parts of lambda onto slots with sum_{f(i)=j} lambda_i = cap_j;
        // this is the coefficient of m_mu in p_lambda for cap = mu.
        Integer count_fillings(const std::vector<int>& lambda, std::size_t i, std::vector<int> cap,
                               std::map<std::pair<std::size_t, std::vector<int>>, Integer>& memo) {
            if (i == lambda.size()) {
                return std::all_of(cap.begin(), cap.end(), [](int c) { return c == 0; }) ? 1 : 0;
            }
            std::sort(cap.begin(), cap.end());
            auto key = std::make_pair(i, cap);
            if (auto it = memo.find(key); it != memo.end()) {
                return it->second;
            }
            Integer total = 0;
            for (std::size_t j = 0; j < cap.size(); ++j) {
                if (cap[j] >= lambda[i]) {
                    cap[j] -= lambda[i];
                    total += count_fillings(lambda, i + 1, cap, memo);
                    cap[j] += lambda[i];
                }
            }
            memo.emplace(std::move(key), total);
            return total;
        }

        struct DegreeTables {
            std::vector<Partition> parts;
            std::map<Partition, std::size_t> index;
            // Indexed by m, e, h. Rows are source basis elements, columns target ones.
            std::array<RationalMatrix, 3> to_p;
            std::array<RationalMatrix, 3> from_p;
        };

        std::size_t slot(Basis b) {
            return b == Basis::m ? 0 : b == Basis::e ? 1 : 2;
        }

        std::shared_ptr<const DegreeTables> build_tables(int n) {
            auto t = std::make_shared<DegreeTables>();
            t->parts = partitions_of(n);
            const std::size_t dim = t->parts.size();
            for (std::size_t i = 0; i < dim; ++i) {
                t->index[t->parts[i]] = i;
            }
            const auto e = generator_expansions(n, true);
            const auto h = generator_expansions(n, false);
            for (int which = 1; which <= 2; ++which) {
                const auto& gens = which == 1 ? e : h;
                RationalMatrix m(dim, std::vector<Rational>(dim));
                for (std::size_t i = 0; i < dim; ++i) {
                    PExpansion prod{{Partition{}, Rational(1)}};
                    for (int part : t->parts[i].parts()) {
                        prod = p_multiply(prod, gens[static_cast<std::size_t>(part)]);
                    }
                    for (const auto& [lambda, c] : prod) {
                        m[i][t->index.at(lambda)] = c;
                    }
                }
                t->from_p[static_cast<std::size_t>(which)] = *inverse(m);
                t->to_p[static_cast<std::size_t>(which)] = std::move(m);
            }
            RationalMatrix p_in_m(dim, std::vector<Rational>(dim));
            for (std::size_t i = 0; i < dim; ++i) {
                std::map<std::pair<std::size_t, std::vector<int>>, Integer> memo;
                for (std::size_t j = 0; j < dim; ++j) {
                    p_in_m[i][j] = count_fillings(t->parts[i].parts(), 0, t->parts[j].parts(), memo);
                }
            }
            t->to_p[0] = *inverse(p_in_m);
            t->from_p[0] = std::move(p_in_m);
            return t;
        }

        std::shared_ptr<const DegreeTables> tables(int n) {
            static std::mutex mutex;
            static std::map<int, std::shared_ptr<const DegreeTables>> cache;
            {
                std::lock_guard<std::mutex> lock(mutex);
                if (auto it = cache.find(n); it != cache.end()) {
                    return it->second;
                }
            }
            auto built = build_tables(n);
            std::lock_guard<std::mutex> lock(mutex);
            return cache.emplace(n, std::move(built)).first->second;
        }

        // Rows of `matrix` combined with the coefficients of the given degree-n terms.
        void apply(const DegreeTables& t, const RationalMatrix& matrix, const std::map<Partition, Rational>& terms,
                   SymPoly& out) {
            std::vector<Rational> acc(t.parts.size());
            for (const auto& [lambda, c] : terms) {
                const auto& row = matrix[t.index.at(lambda)];
                for (std::size_t j = 0; j < row.size(); ++j) {
                    if (row[j] != 0) {
                        acc[j] += c * row[j];
                    }
                }
            }
            for (std::size_t j = 0; j < acc.size(); ++j) {
                out.add_term(t.parts[j], acc[j]);
            }
        }
    }  // namespace

    SymPoly convert(const SymPoly& f, Basis target) {
        if (f.basis() == target) {
            return f;
        }
        std::map<int, std::map<Partition, Rational>> by_degree;
        for (const auto& [lambda, c] : f.terms()) {
            by_degree[lambda.weight()].emplace(lambda, c);
        }
        SymPoly out(target);
        for (const auto& [n, terms] : by_degree) {
            auto t = tables(n);
            if (f.basis() == Basis::p) {
                apply(*t, t->from_p[slot(target)], terms, out);
            } else if (target == Basis::p) {
                apply(*t, t->to_p[slot(f.basis())], terms, out);
            } else {
                SymPoly via_p(Basis::p);
                apply(*t, t->to_p[slot(f.basis())], terms, via_p);
                apply(*t, t->from_p[slot(target)], via_p.terms(), out);
            }
        }
        return out;
    }

    SymPoly operator*(const SymPoly& a, const SymPoly& b) {
        if (a.basis() == Basis::m) {
            return convert(convert(a, Basis::p) * b, Basis::m);
        }
        const SymPoly rhs = convert(b, a.basis());
        SymPoly out(a.basis());
        for (const auto& [la, ca] : a.terms()) {
            for (const auto& [lb, cb] : rhs.terms()) {
                out.add_term(la.join(lb), ca * cb);
            }
        }
        return out;
    }

    Rational hall_pairing(const SymPoly& f, const SymPoly& g) {
        const SymPoly fh = convert(f, Basis::h);
        const SymPoly gm = convert(g, Basis::m);
        Rational total = 0;
        for (const auto& [lambda, c] : fh.terms()) {
            total += c * gm.coefficient(lambda);
        }
        return total;
    }

    WordPoly embed_qsymm(const SymPoly& f) {
        WordPoly out;
        const SymPoly fm = convert(f, Basis::m);
        for (const auto& [lambda, c] : fm.terms()) {
            for (const auto& w : rearrangements(lambda)) {
                out.add_term(w, c);
            }
        }
        return out;
    }

    SymPoly cp_class(int k) {
        if (k < 0) {
            throw PreconditionError("cp_class: k must be nonnegative");
        }
        return k == 0 ? SymPoly::unit(Basis::p) : SymPoly(Basis::p, Partition{k});
    }

    Poly to_power_sum_poly(const SymPoly& f) {
        Poly out;
        const SymPoly fp = convert(f, Basis::p);
        for (const auto& [lambda, c] : fp.terms()) {
            Poly term(c);
            for (int part : lambda.parts()) {
                term *= Poly::variable('p', part);
            }
            out += term;
        }
        return out;
    }

    SymPoly from_power_sum_poly(const Poly& f) {
        SymPoly out(Basis::p);
        for (const auto& [mono, c] : f.terms()) {
            std::vector<int> parts;
            for (const auto& [v, e] : mono.powers()) {
                if (v.family != 'p' || v.index < 1) {
                    throw PreconditionError("from_power_sum_poly: unexpected variable " + v.str());
                }
                parts.insert(parts.end(), static_cast<std::size_t>(e), v.index);
            }
            out.add_term(Partition(parts), c);
        }
        return out;
    }

}  // namespace renormkit
