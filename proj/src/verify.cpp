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

#include "renormkit/verify.hpp"

#include <cfloat>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "renormkit/combinatorics.hpp"
#include "renormkit/expr.hpp"
#include "renormkit/fgl.hpp"
#include "renormkit/mzv.hpp"
#include "renormkit/quasishuffle.hpp"
#include "renormkit/renorm.hpp"
#include "renormkit/spheremaps.hpp"
#include "renormkit/symmfunc.hpp"

namespace renormkit {

    namespace {

        struct Outcome {
            bool passed = true;
            std::ostringstream detail;

            // Records a failed sub-check; only the first one is described.
            void fail(const std::string& what) {
                if (passed) {
                    detail << "FAILED: " << what << "; ";
                }
                passed = false;
            }
        };

        struct CriterionInfo {
            const char* title;
            double time_limit;  // seconds, 0 for none
        };

        const CriterionInfo kCriteria[kCriterionCount] = {
            {"renormalization identity (exact, maxdeg 6)", 5},
            {"formal group law integrality through degree 8", 30},
            {"formal group law axioms through degree 6", 0},
            {"Hoffman exp/log intertwining, total weight <= 7", 0},
            {"regularization homomorphism, weights <= 5", 0},
            {"quasi-shuffle bialgebra compatibility, weights <= 4", 0},
            {"stuffle relations vs numeric zeta values", 60},
            {"Newton identities through degree 10", 0},
            {"Landweber-Novikov monoid action through degree 5", 0},
            {"Symm in QSymm multiplicativity through weight 6", 0},
            {"Dirac sea encode/decode and grading, exhaustive window", 0},
            {"sphere quadrature: volume, degree, cap volume, alpha", 120},
            {"expression parser round trip and positioned errors", 0},
        };

        std::vector<Composition> nonempty_up_to(int w) {
            std::vector<Composition> out;
            for (int n = 1; n <= w; ++n) {
                const auto level = compositions_of(n);
                out.insert(out.end(), level.begin(), level.end());
            }
            return out;
        }

        bool variables_within(const Poly& p, char family, int max_index) {
            for (const auto& [m, c] : p.terms()) {
                for (const auto& [v, e] : m.powers()) {
                    if (v.family != family || v.index < 1 || v.index > max_index) {
                        return false;
                    }
                }
            }
            return true;
        }

        Outcome renormalization(int maxdeg) {
            Outcome out;
            const TruncSeries lhs = renormalize(chern_character(maxdeg), maxdeg);
            const TruncSeries rhs = st_modulus(maxdeg);
            if (!(lhs == rhs)) {
                out.fail("renormalized Chern character differs from exp(-L)");
            }
            for (const auto& [e, c] : rhs.terms()) {
                if (!variables_within(c, 'p', std::max(1, maxdeg - 1))) {
                    out.fail("coefficient outside Q[p_1..p_" + std::to_string(maxdeg - 1) + "]");
                }
            }
            out.detail << rhs.terms().size() << " coefficients of b^0..b^" << maxdeg << " agree";
            return out;
        }

        Outcome fgl_integrality() {
            Outcome out;
            const TruncSeries F = universal_fgl(8);
            std::size_t monomials = 0;
            for (const auto& [e, c] : F.terms()) {
                monomials += c.terms().size();
                if (!c.is_integral()) {
                    out.fail("non-integral coefficient " + c.str());
                }
            }
            out.detail << F.terms().size() << " coefficients, " << monomials << " monomials in m_i, all integral";
            return out;
        }

        Outcome fgl_axioms() {
            Outcome out;
            const int N = 6;
            const TruncSeries F = universal_fgl(N);
            const TruncSeries x = TruncSeries::variable({"X"}, N, 0);
            const TruncSeries zero({"X"}, N);
            if (!(compose(F, {x, zero}) == x)) {
                out.fail("F(X,0) != X");
            }
            if (!(compose(F, {zero, x}) == x)) {
                out.fail("F(0,Y) != Y");
            }
            const std::vector<std::string> xy{"X", "Y"};
            const TruncSeries X = TruncSeries::variable(xy, N, 0);
            const TruncSeries Y = TruncSeries::variable(xy, N, 1);
            if (!(compose(F, {Y, X}) == F)) {
                out.fail("F(Y,X) != F(X,Y)");
            }
            const std::vector<std::string> xyz{"X", "Y", "Z"};
            const TruncSeries X3 = TruncSeries::variable(xyz, N, 0);
            const TruncSeries Y3 = TruncSeries::variable(xyz, N, 1);
            const TruncSeries Z3 = TruncSeries::variable(xyz, N, 2);
            const TruncSeries left = compose(F, {compose(F, {X3, Y3}), Z3});
            const TruncSeries right = compose(F, {X3, compose(F, {Y3, Z3})});
            if (!(left == right)) {
                out.fail("F(F(X,Y),Z) != F(X,F(Y,Z))");
            }
            out.detail << "unit, commutativity and associativity hold with " << left.terms().size()
                       << " coefficients in F(F(X,Y),Z)";
            return out;
        }

        Outcome hoffman() {
            Outcome out;
            const int W = 7;
            const auto words = nonempty_up_to(W);
            std::map<Composition, WordPoly> exp_of;
            for (const auto& w : words) {
                exp_of[w] = hoffman_exp(WordPoly(w));
                if (!(hoffman_log(exp_of[w]) == WordPoly(w))) {
                    out.fail("log(exp(" + w.str() + ")) != " + w.str());
                }
            }
            std::size_t pairs = 0;
            for (const auto& u : words) {
                for (const auto& v : words) {
                    if (u.weight() + v.weight() > W) {
                        continue;
                    }
                    ++pairs;
                    if (!(hoffman_exp(shuffle(WordPoly(u), WordPoly(v))) == stuffle(exp_of[u], exp_of[v]))) {
                        out.fail("exp(u # v) != exp(u) * exp(v) for u = " + u.str() + ", v = " + v.str());
                    }
                }
            }
            out.detail << pairs << " pairs and " << words.size() << " log/exp round trips";
            return out;
        }

        Outcome regularization() {
            Outcome out;
            const auto words = nonempty_up_to(5);
            std::map<Composition, RegularizedPoly> reg;
            for (const auto& w : words) {
                reg[w] = regularize(w);
            }
            std::size_t pairs = 0;
            for (const auto& u : words) {
                for (const auto& v : words) {
                    ++pairs;
                    if (!(regularize(stuffle(WordPoly(u), WordPoly(v))) == reg[u] * reg[v])) {
                        out.fail("reg(u * v) != reg(u) * reg(v) for u = " + u.str() + ", v = " + v.str());
                    }
                }
            }
            out.detail << pairs << " pairs";
            return out;
        }

        Outcome bialgebra() {
            Outcome out;
            const auto words = compositions_up_to(4);
            std::size_t pairs = 0;
            for (const auto& u : words) {
                for (const auto& v : words) {
                    ++pairs;
                    const WordPoly uv = stuffle(WordPoly(u), WordPoly(v));
                    const TensorPoly lhs = coproduct(uv);
                    const TensorPoly rhs = tensor_product(coproduct(WordPoly(u)), coproduct(WordPoly(v)), Bracket::standard());
                    if (!(lhs == rhs)) {
                        out.fail("coproduct(u * v) mismatch for u = " + u.str() + ", v = " + v.str());
                    }
                }
            }
            out.detail << pairs << " pairs";
            return out;
        }

        // Single sums by direct summation, bracketing the tail between the integrals from
        // N and N + 1. Independent of the iterated-integral kernel used for depth >= 2.
        Estimate direct_zeta(int k) {
            const long N = 200000;
            long double sum = 0;
            for (long n = N; n >= 1; --n) {
                sum += std::pow(static_cast<long double>(n), -k);
            }
            const long double lo = 1 / ((k - 1) * std::pow(static_cast<long double>(N + 1), k - 1));
            const long double hi = 1 / ((k - 1) * std::pow(static_cast<long double>(N), k - 1));
            return {sum + (lo + hi) / 2, (hi - lo) / 2 + N * 4 * LDBL_EPSILON * (sum + 1)};
        }

        Outcome stuffle_numeric() {
            Outcome out;
            const long double target = 1e-11L;
            auto z = [&](const Composition& c) {
                const MzvValue v = zeta(c, target);
                return Estimate{v.value, v.error_bound};
            };
            const Estimate z2 = direct_zeta(2);
            const Estimate z3 = direct_zeta(3);
            const Estimate lhs_a = z2 * z2;
            const Estimate rhs_a = 2.0L * z({2, 2}) + direct_zeta(4);
            const Estimate lhs_b = z2 * z3;
            const Estimate rhs_b = z({2, 3}) + z({3, 2}) + direct_zeta(5);
            const long double res_a = std::fabs(lhs_a.value - rhs_a.value);
            const long double res_b = std::fabs(lhs_b.value - rhs_b.value);
            const long double euler = std::fabs(z({2, 1}).value - z3.value);
            const StuffleCheck kernel_a = check_stuffle({2}, {2}, target);
            const StuffleCheck kernel_b = check_stuffle({2}, {3}, target);
            if (!(res_a < 1e-8L) || !(kernel_a.residual < 1e-8L)) {
                out.fail("zeta(2)^2 residual");
            }
            if (!(res_b < 1e-8L) || !(kernel_b.residual < 1e-8L)) {
                out.fail("zeta(2)zeta(3) residual");
            }
            if (!(euler < 2e-9L)) {
                out.fail("|zeta(2,1) - zeta(3)|");
            }
            out.detail << std::scientific << std::setprecision(2) << "residuals " << static_cast<double>(res_a) << ", "
                       << static_cast<double>(res_b) << " (within the kernel alone " << static_cast<double>(kernel_a.residual)
                       << ", " << static_cast<double>(kernel_b.residual) << "), |zeta(2,1) - zeta(3)| = "
                       << static_cast<double>(euler) << "; single sums by direct summation";
            return out;
        }

        Outcome newton() {
            Outcome out;
            const int N = 10;
            std::size_t trips = 0;
            for (int n = 0; n <= N; ++n) {
                for (const auto& lambda : partitions_of(n)) {
                    for (Basis b : {Basis::e, Basis::h, Basis::p}) {
                        const SymPoly f(b, lambda);
                        for (Basis via : {Basis::e, Basis::h, Basis::p}) {
                            if (via == b) {
                                continue;
                            }
                            ++trips;
                            if (!(convert(convert(f, via), b) == f)) {
                                out.fail(std::string(1, basis_letter(b)) + lambda.str() + " via " + basis_letter(via));
                            }
                        }
                    }
                }
            }
            std::vector<Poly> log_coeffs(N + 1, Poly());
            for (int r = 1; r <= N; ++r) {
                log_coeffs[static_cast<std::size_t>(r)] = Poly::variable('p', r) * ratio(r % 2 ? 1 : -1, r);
            }
            const TruncSeries E = exp_series(TruncSeries::univariate(log_coeffs, N));
            for (int n = 0; n <= N; ++n) {
                const SymPoly en = n == 0 ? SymPoly::unit(Basis::e) : SymPoly(Basis::e, Partition{n});
                if (!(E.coefficient(n) == to_power_sum_poly(convert(en, Basis::p)))) {
                    out.fail("generating identity at t^" + std::to_string(n));
                }
            }
            out.detail << trips << " round trips; E(t) = exp(sum (-1)^(r-1) p_r t^r / r) through t^" << N;
            return out;
        }

        Outcome landweber() {
            Outcome out;
            const int N = 5;
            const TruncSeries t = generic_substitution('t', N);
            const TruncSeries s = generic_substitution('s', N);
            const Coaction rho_t = landweber_coaction(t, N);
            const Coaction rho_s = landweber_coaction(s, N);
            const Coaction rho_st = landweber_coaction(compose(s, t), N);
            for (int n = 0; n <= N; ++n) {
                if (!(apply_coaction(rho_s, rho_t.at(n)) == rho_st.at(n))) {
                    out.fail("action law at e_" + std::to_string(n));
                }
            }
            out.detail << "rho_s(rho_t(e_n)) = rho_(s o t)(e_n) for n <= " << N << " with generic s, t";
            return out;
        }

        Outcome symm_embedding() {
            Outcome out;
            const int W = 6;
            std::vector<Partition> parts;
            for (int n = 0; n <= W; ++n) {
                const auto level = partitions_of(n);
                parts.insert(parts.end(), level.begin(), level.end());
            }
            std::size_t pairs = 0;
            for (const auto& a : parts) {
                for (const auto& b : parts) {
                    if (a.weight() + b.weight() > W) {
                        continue;
                    }
                    ++pairs;
                    const SymPoly ma(Basis::m, a);
                    const SymPoly mb(Basis::m, b);
                    if (!(embed_qsymm(ma * mb) == stuffle(embed_qsymm(ma), embed_qsymm(mb)))) {
                        out.fail("embed(m" + a.str() + " m" + b.str() + ")");
                    }
                }
            }
            out.detail << pairs << " pairs";
            return out;
        }

        Outcome dirac() {
            Outcome out;
            const int kMissing = 16;
            const int kExtra = 8;
            std::size_t sets = 0;
            for (unsigned mm = 0; mm < (1U << kMissing); ++mm) {
                std::vector<int> missing;
                for (int b = 0; b < kMissing; ++b) {
                    if (mm & (1U << b)) {
                        missing.push_back(b);
                    }
                }
                for (unsigned em = 0; em < (1U << kExtra); ++em) {
                    std::vector<int> extra;
                    for (int b = 0; b < kExtra; ++b) {
                        if (em & (1U << b)) {
                            extra.push_back(-kExtra + b);
                        }
                    }
                    ++sets;
                    const CommensurableSet s(missing, extra);
                    const DiracCode code = encode(s);
                    if (!(decode(code) == s)) {
                        out.fail("decode(encode(S)) != S");
                    }
                    // Elements listed directly from the window: extra, then the non-missing naturals.
                    const long card = static_cast<long>(missing.size()) - static_cast<long>(extra.size());
                    if (relative_cardinality(s) != card) {
                        out.fail("#S");
                    }
                    std::vector<int> elems = extra;
                    for (int n = 0; static_cast<int>(elems.size()) < kMissing + kExtra + 4; ++n) {
                        if (n >= kMissing || !(mm & (1U << n))) {
                            elems.push_back(n);
                        }
                    }
                    if (code.s0 != elems.front()) {
                        out.fail("s0 is not the least element");
                    }
                    for (std::size_t k = 0; k < elems.size(); ++k) {
                        if (elems[k] >= kMissing && elems[k] != static_cast<long>(k) + card) {
                            out.fail("s_k != k + #S in the tail");
                        }
                    }
                }
            }
            out.detail << sets << " sets";
            return out;
        }

        Outcome spheres() {
            Outcome out;
            const QuadratureGrid grid;
            const double two_pi_sq = 2 * std::numbers::pi * std::numbers::pi;
            const double vol_err = std::fabs(sphere3_volume(grid) - two_pi_sq);
            const double id_err = std::fabs(degree(identity_map(), grid) - 1);
            const double sq_err = std::fabs(degree(quaternion_square_map(), grid) - 2);
            if (!(vol_err < 1e-8)) {
                out.fail("vol(S^3)");
            }
            if (!(id_err < 1e-4) || !(sq_err < 1e-4)) {
                out.fail("mapping degree");
            }
            double cap_err = 0;
            double alpha_err = 0;
            double half_err = 0;  // distance from alpha to -v/2, the value the volume normalization gives
            for (int i = 0; i < 11; ++i) {
                const double lambda = -std::numbers::pi + 2 * std::numbers::pi * (i + 0.5) / 11;
                const MercatorResult m = mercator(lambda, grid);
                cap_err = std::max(cap_err, std::fabs(m.normalized_volume - m.closed_form));
                const AlphaResult a = nambu_goto_alpha(m.south_cap, m.north_cap, grid);
                alpha_err = std::max(alpha_err, distance_mod_one(a.alpha, m.normalized_volume));
                half_err = std::max(half_err, distance_mod_one(a.alpha, -m.normalized_volume / 2));
            }
            if (!(cap_err < 1e-8)) {
                out.fail("cap volume vs closed form");
            }
            if (!(alpha_err < 1e-5)) {
                out.fail("alpha(boundary) != pi^-2 vol(B_lambda) mod 1");
            }
            out.detail << std::scientific << std::setprecision(2) << "|vol - 2pi^2| = " << vol_err
                       << ", degree errors " << id_err << ", " << sq_err << ", cap volume error " << cap_err
                       << ", max alpha distance to v " << std::defaultfloat << std::setprecision(4) << alpha_err
                       << " (to -v/2: " << std::scientific << std::setprecision(2) << half_err << ")";
            return out;
        }

        // A parse either succeeds and round-trips, or fails with a position inside the input.
        bool well_behaved(const std::string& src, std::string& why) {
            try {
                const Expr e = parse(src);
                if (!(parse(print(e)) == e)) {
                    why = "accepted input does not round-trip: " + src;
                    return false;
                }
                return true;
            } catch (const ParseError& err) {
                int lines = 1;
                std::size_t longest = 0;
                std::size_t current = 0;
                for (char c : src) {
                    if (c == '\n') {
                        ++lines;
                        longest = std::max(longest, current);
                        current = 0;
                    } else {
                        ++current;
                    }
                }
                longest = std::max(longest, current);
                const auto& p = err.pos();
                if (p.line < 1 || p.line > lines || p.column < 1 || static_cast<std::size_t>(p.column) > longest + 1) {
                    why = "error position out of range for: " + src;
                    return false;
                }
                return true;
            } catch (const std::exception& other) {
                why = std::string("unexpected exception '") + other.what() + "' for: " + src;
                return false;
            }
        }

        Outcome parser() {
            Outcome out;
            std::vector<std::string> corpus;
            for (std::uint64_t seed = 0; seed < 200; ++seed) {
                const Expr e = random_expr(seed);
                const std::string text = print(e);
                corpus.push_back(text);
                const Expr back = parse(text);
                if (!(back == e) || print(back) != text) {
                    out.fail("round trip of " + text);
                }
            }
            std::vector<std::string> malformed{"",        "w(",         "w(1",         "w(0)",     "w(1,,2)", "3/",
                                               "3/0",     "exp(w(1),",  "w(1) +",      "* w(1)",   ")",       "w(1))",
                                               "p(1 2)",  "$",          "w(1) @ w(2)", "((((",     "zeta(2,", "-",
                                               "1/2/3",   "w(1).",      "\n\n  w(1) +\n", "w(-1)", "m(1,0)",  "w(1)\x01"};
            malformed.push_back(std::string(5000, '('));
            std::size_t rejected = 0;
            for (const auto& src : malformed) {
                try {
                    parse(src);
                    out.fail("accepted malformed input '" + src + "'");
                } catch (const ParseError&) {
                    ++rejected;
                } catch (const std::exception& e) {
                    out.fail(std::string("non-parse exception '") + e.what() + "'");
                }
                std::string why;
                if (!well_behaved(src, why)) {
                    out.fail(why);
                }
            }
            std::mt19937_64 rng(2026);
            const std::string noise = "w()p,+-*#./0123 \n$";
            std::size_t mutants = 0;
            for (const auto& text : corpus) {
                for (int k = 0; k < 10; ++k) {
                    std::string m = text;
                    const std::size_t at = m.empty() ? 0 : rng() % m.size();
                    switch (rng() % 3) {
                    case 0:
                        if (!m.empty()) {
                            m.erase(at, 1);
                        }
                        break;
                    case 1:
                        m.insert(at, 1, noise[rng() % noise.size()]);
                        break;
                    default:
                        m.resize(at);
                        break;
                    }
                    ++mutants;
                    std::string why;
                    if (!well_behaved(m, why)) {
                        out.fail(why);
                    }
                }
            }
            out.detail << corpus.size() << " expressions round-trip; " << rejected << "/" << malformed.size()
                       << " malformed inputs rejected with positions; " << mutants << " mutants handled";
            return out;
        }

        Outcome dispatch(int id) {
            switch (id) {
            case 1: return renormalization(6);
            case 2: return fgl_integrality();
            case 3: return fgl_axioms();
            case 4: return hoffman();
            case 5: return regularization();
            case 6: return bialgebra();
            case 7: return stuffle_numeric();
            case 8: return newton();
            case 9: return landweber();
            case 10: return symm_embedding();
            case 11: return dirac();
            case 12: return spheres();
            default: return parser();
            }
        }

        CriterionResult timed(int id, const std::string& title, double limit, const std::function<Outcome()>& body) {
            CriterionResult r;
            r.id = id;
            r.title = title;
            const auto start = std::chrono::steady_clock::now();
            try {
                Outcome out = body();
                r.passed = out.passed;
                r.detail = out.detail.str();
            } catch (const std::exception& e) {
                r.passed = false;
                r.detail = std::string("FAILED: exception: ") + e.what();
            }
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (limit > 0 && r.seconds > limit) {
                r.passed = false;
                std::ostringstream os;
                os << "; FAILED: took longer than " << limit << " s";
                r.detail += os.str();
            }
            return r;
        }

    }  // namespace

    CriterionResult run_criterion(int id) {
        if (id < 1 || id > kCriterionCount) {
            CriterionResult r;
            r.id = id;
            r.title = "unknown criterion";
            r.detail = "criteria are numbered 1.." + std::to_string(kCriterionCount);
            return r;
        }
        const CriterionInfo& info = kCriteria[id - 1];
        return timed(id, info.title, info.time_limit, [id] { return dispatch(id); });
    }

    CriterionResult check_renormalization(int maxdeg) {
        return timed(1, "renormalization identity (exact, maxdeg " + std::to_string(maxdeg) + ")", 0,
                     [maxdeg] { return renormalization(maxdeg); });
    }

    std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& on_result) {
        std::vector<CriterionResult> results;
        for (int id = 1; id <= kCriterionCount; ++id) {
            results.push_back(run_criterion(id));
            if (on_result) {
                on_result(results.back());
            }
        }
        return results;
    }

    std::string format_result(const CriterionResult& r) {
        std::ostringstream os;
        os << (r.passed ? "PASS" : "FAIL") << ' ' << std::setw(2) << r.id << ' ' << r.title << " (" << std::fixed
           << std::setprecision(2) << r.seconds << " s): " << r.detail;
        return os.str();
    }

}  // namespace renormkit
