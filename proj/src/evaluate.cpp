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

#include "renormkit/evaluate.hpp"

#include <cfloat>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <variant>

#include "renormkit/errors.hpp"
#include "renormkit/renorm.hpp"
#include "renormkit/spheremaps.hpp"

namespace renormkit {

    namespace {

        std::string trim(const std::string& s) {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos) {
                return "";
            }
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        }

        template <typename T>
        T parse_number(const std::string& key, const std::string& text) {
            std::istringstream in(text);
            T v{};
            in >> v;
            if (!in || !(in >> std::ws).eof()) {
                throw PreconditionError("config: bad value for " + key + ": '" + text + "'");
            }
            return v;
        }

        // ---------------------------------------------------------------- values

        struct Report {
            Json json;
        };

        using Value = std::variant<WordPoly, SymPoly, RegularizedPoly, TensorPoly, TruncSeries, ZetaPolynomial, Report>;

        const char* type_name(const Value& v) {
            static const char* names[] = {"word polynomial", "symmetric function", "regularized polynomial",
                                          "tensor", "power series", "zeta polynomial", "report"};
            return names[v.index()];
        }

        std::optional<Rational> as_scalar(const Value& v) {
            const auto* w = std::get_if<WordPoly>(&v);
            if (!w) {
                return std::nullopt;
            }
            for (const auto& [word, c] : w->terms()) {
                if (!word.empty()) {
                    return std::nullopt;
                }
            }
            return w->coefficient(Composition{});
        }

        // The scalar c in the type of `like`.
        Value promote(const Rational& c, const Value& like) {
            switch (like.index()) {
            case 1:
                return SymPoly::unit(std::get<SymPoly>(like).basis()) * c;
            case 2:
                return RegularizedPoly::monomial(WordPoly::scalar(c), 0);
            case 3: {
                TensorPoly t;
                t.add_term({}, {}, c);
                return t;
            }
            case 4: {
                const auto& s = std::get<TruncSeries>(like);
                return TruncSeries::constant(s.vars(), s.maxdeg(), Poly(c));
            }
            case 5: {
                const long double x = to_double(c);
                return ZetaPolynomial{{0, Estimate{x, std::fabs(x) * LDBL_EPSILON}}};
            }
            default:
                return WordPoly::scalar(c);
            }
        }

        int weight(const WordPoly& p) {
            return p.is_zero() ? 0 : p.max_weight();
        }

        int weight(const Value& v) {
            switch (v.index()) {
            case 0:
                return weight(std::get<WordPoly>(v));
            case 1:
                return std::max(0, std::get<SymPoly>(v).degree());
            case 2: {
                int w = 0;
                for (const auto& [power, c] : std::get<RegularizedPoly>(v).coefficients()) {
                    w = std::max(w, power + weight(c));
                }
                return w;
            }
            case 3: {
                int w = 0;
                for (const auto& [key, c] : std::get<TensorPoly>(v).terms()) {
                    w = std::max(w, key.first.weight() + key.second.weight());
                }
                return w;
            }
            default:
                return 0;
            }
        }

        ZetaPolynomial add(const ZetaPolynomial& a, const ZetaPolynomial& b) {
            ZetaPolynomial out = a;
            for (const auto& [k, e] : b) {
                out[k] = out[k] + e;
            }
            return out;
        }

        class Evaluator {
        public:
            explicit Evaluator(const EvalConfig& cfg) : cfg_(cfg) {}

            Value eval(const Expr& e) {
                Value v = dispatch(e);
                if (weight(v) > cfg_.max_weight) {
                    refuse(e, weight(v));
                }
                return v;
            }

        private:
            [[noreturn]] void refuse(const Expr& e, int w) const {
                throw TruncationError(where(e) + "weight " + std::to_string(w) + " exceeds max_weight " +
                                      std::to_string(cfg_.max_weight));
            }

            static std::string where(const Expr& e) {
                return "line " + std::to_string(e.pos.line) + ", column " + std::to_string(e.pos.column) + ": ";
            }

            [[noreturn]] static void type_error(const Expr& e, const std::string& msg) {
                throw TypeError(where(e) + msg);
            }

            Value dispatch(const Expr& e) {
                switch (e.kind) {
                case Expr::Kind::Number:
                    return WordPoly::scalar(e.value);
                case Expr::Kind::Word:
                    return WordPoly(e.word);
                case Expr::Kind::Symmetric:
                    return SymPoly(parse_basis(e.basis), e.partition);
                case Expr::Kind::Symbol:
                    type_error(e, "'" + e.name + "' is only meaningful as a function argument");
                case Expr::Kind::Neg: {
                    Value v = eval(e.args.at(0));
                    return multiply(e, promote(-1, v), v, '*');
                }
                case Expr::Kind::Binary: {
                    Value a = eval(e.args.at(0));
                    Value b = eval(e.args.at(1));
                    switch (e.op) {
                    case '+':
                        return plus(e, a, b);
                    case '-':
                        return plus(e, a, multiply(e, promote(-1, b), b, '*'));
                    default:
                        if (weight(a) + weight(b) > cfg_.max_weight) {
                            refuse(e, weight(a) + weight(b));
                        }
                        return multiply(e, a, b, e.op);
                    }
                }
                case Expr::Kind::Call:
                    return call(e);
                }
                type_error(e, "unknown expression");
            }

            // Brings a scalar operand to the type of the other one.
            static void unify(Value& a, Value& b) {
                if (a.index() == b.index()) {
                    return;
                }
                if (auto c = as_scalar(a)) {
                    a = promote(*c, b);
                } else if (auto d = as_scalar(b)) {
                    b = promote(*d, a);
                }
            }

            Value plus(const Expr& e, Value a, Value b) {
                unify(a, b);
                if (a.index() != b.index()) {
                    type_error(e, std::string("cannot add ") + type_name(a) + " and " + type_name(b));
                }
                switch (a.index()) {
                case 0:
                    return std::get<WordPoly>(a) + std::get<WordPoly>(b);
                case 1:
                    return std::get<SymPoly>(a) + std::get<SymPoly>(b);
                case 2:
                    return std::get<RegularizedPoly>(a) + std::get<RegularizedPoly>(b);
                case 3: {
                    TensorPoly t = std::get<TensorPoly>(a);
                    t += std::get<TensorPoly>(b);
                    return t;
                }
                case 4:
                    same_vars(e, a, b);
                    return std::get<TruncSeries>(a) + std::get<TruncSeries>(b);
                case 5:
                    return add(std::get<ZetaPolynomial>(a), std::get<ZetaPolynomial>(b));
                default:
                    type_error(e, "reports do not support arithmetic");
                }
            }

            static void same_vars(const Expr& e, const Value& a, const Value& b) {
                if (std::get<TruncSeries>(a).vars() != std::get<TruncSeries>(b).vars()) {
                    type_error(e, "power series in different variables");
                }
            }

            Value multiply(const Expr& e, Value a, Value b, char op) {
                const auto ca = as_scalar(a);
                const auto cb = as_scalar(b);
                if (op != '.' && (ca || cb) && !(ca && cb)) {
                    // scalar multiplication is the same for every product
                    op = '*';
                }
                unify(a, b);
                if (a.index() != b.index()) {
                    type_error(e, std::string("cannot multiply ") + type_name(a) + " and " + type_name(b));
                }
                const std::string bad = std::string("operator '") + op + "' is not defined on " + type_name(a);
                switch (a.index()) {
                case 0: {
                    const auto& u = std::get<WordPoly>(a);
                    const auto& v = std::get<WordPoly>(b);
                    if (op == '*') {
                        return stuffle(u, v);
                    }
                    return op == '#' ? shuffle(u, v) : concatenate(u, v);
                }
                case 1:
                    if (op != '*') {
                        type_error(e, bad);
                    }
                    return std::get<SymPoly>(a) * std::get<SymPoly>(b);
                case 2:
                    if (op != '*') {
                        type_error(e, bad);
                    }
                    return std::get<RegularizedPoly>(a) * std::get<RegularizedPoly>(b);
                case 3:
                    if (op == '.') {
                        type_error(e, bad);
                    }
                    return tensor_product(std::get<TensorPoly>(a), std::get<TensorPoly>(b),
                                          op == '*' ? Bracket::standard() : Bracket::null());
                case 4:
                    if (op != '*') {
                        type_error(e, bad);
                    }
                    same_vars(e, a, b);
                    return std::get<TruncSeries>(a) * std::get<TruncSeries>(b);
                case 5:
                    if (op != '*') {
                        type_error(e, bad);
                    }
                    return std::get<ZetaPolynomial>(a) * std::get<ZetaPolynomial>(b);
                default:
                    type_error(e, "reports do not support arithmetic");
                }
            }

            // ------------------------------------------------------------ calls

            void arity(const Expr& e, std::size_t lo, std::size_t hi) const {
                if (e.args.size() < lo || e.args.size() > hi) {
                    type_error(e, e.name + " takes " +
                                      (lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi)) +
                                      " argument(s), got " + std::to_string(e.args.size()));
                }
            }

            WordPoly word_arg(const Expr& e) {
                Value v = eval(e);
                if (auto* w = std::get_if<WordPoly>(&v)) {
                    return *w;
                }
                type_error(e, std::string("expected a word polynomial, got ") + type_name(v));
            }

            SymPoly sym_arg(const Expr& e) {
                Value v = eval(e);
                if (auto* f = std::get_if<SymPoly>(&v)) {
                    return *f;
                }
                if (auto c = as_scalar(v)) {
                    return SymPoly::unit() * *c;
                }
                type_error(e, std::string("expected a symmetric function, got ") + type_name(v));
            }

            Rational scalar_arg(const Expr& e) {
                Value v = eval(e);
                if (auto c = as_scalar(v)) {
                    return *c;
                }
                type_error(e, std::string("expected a number, got ") + type_name(v));
            }

            long int_arg(const Expr& e, long lo, long hi) {
                const Rational c = scalar_arg(e);
                if (!is_integer(c) || c < lo || c > hi) {
                    type_error(e, "expected an integer in " + std::to_string(lo) + ".." + std::to_string(hi));
                }
                return c.get_num().get_si();
            }

            static std::string symbol_arg(const Expr& e) {
                if (e.kind != Expr::Kind::Symbol) {
                    type_error(e, "expected a name");
                }
                return e.name;
            }

            static Composition single_word(const Expr& at, const WordPoly& p) {
                if (p.size() != 1 || p.terms().begin()->second != 1) {
                    type_error(at, "expected a single word");
                }
                return p.terms().begin()->first;
            }

            int degree_arg(const Expr& e, std::size_t i) {
                const int n = e.args.size() > i ? static_cast<int>(int_arg(e.args[i], 0, 64)) : cfg_.max_weight;
                if (n > cfg_.max_weight) {
                    refuse(e, n);
                }
                return n;
            }

            Value call(const Expr& e) {
                const std::string& f = e.name;
                if (f == "exp" || f == "log" || f == "antipode" || f == "coproduct" || f == "regularize") {
                    arity(e, 1, 1);
                    const WordPoly x = word_arg(e.args[0]);
                    if (f == "exp") {
                        return hoffman_exp(x);
                    }
                    if (f == "log") {
                        return hoffman_log(x);
                    }
                    if (f == "antipode") {
                        return antipode(x, Bracket::standard());
                    }
                    if (f == "coproduct") {
                        return coproduct(x);
                    }
                    return regularize(x);
                }
                if (f == "unregularize") {
                    arity(e, 1, 1);
                    Value v = eval(e.args[0]);
                    if (auto* r = std::get_if<RegularizedPoly>(&v)) {
                        return unregularize(*r);
                    }
                    type_error(e.args[0], "expected a regularized polynomial");
                }
                if (f == "pair") {
                    arity(e, 2, 2);
                    Value a = eval(e.args[0]);
                    Value b = eval(e.args[1]);
                    if (std::holds_alternative<SymPoly>(a) || std::holds_alternative<SymPoly>(b)) {
                        return WordPoly::scalar(hall_pairing(sym_arg(e.args[0]), sym_arg(e.args[1])));
                    }
                    if (auto* ta = std::get_if<TensorPoly>(&a)) {
                        if (auto* tb = std::get_if<TensorPoly>(&b)) {
                            return WordPoly::scalar(pairing(*ta, *tb));
                        }
                    }
                    return WordPoly::scalar(pairing(word_arg(e.args[0]), word_arg(e.args[1])));
                }
                if (f == "embed") {
                    arity(e, 1, 1);
                    return embed_qsymm(sym_arg(e.args[0]));
                }
                if (f == "convert") {
                    arity(e, 2, 2);
                    const std::string b = symbol_arg(e.args[1]);
                    if (b.size() != 1) {
                        type_error(e.args[1], "expected one of m, e, h, p");
                    }
                    try {
                        return convert(sym_arg(e.args[0]), parse_basis(b[0]));
                    } catch (const PreconditionError&) {
                        type_error(e.args[1], "expected one of m, e, h, p");
                    }
                }
                if (f == "cp") {
                    arity(e, 1, 1);
                    return cp_class(static_cast<int>(int_arg(e.args[0], 0, 64)));
                }
                if (f == "zeta") {
                    if (e.args.size() == 1 && e.args[0].kind != Expr::Kind::Number) {
                        return zeta_regularized(word_arg(e.args[0]), cfg_.eps);
                    }
                    std::vector<int> parts;
                    for (const auto& a : e.args) {
                        parts.push_back(static_cast<int>(int_arg(a, 1, 1000)));
                    }
                    const MzvValue z = zeta(Composition(parts), cfg_.eps);
                    return ZetaPolynomial{{0, Estimate{z.value, z.error_bound}}};
                }
                if (f == "stuffle") {
                    arity(e, 2, 2);
                    const Composition I = single_word(e.args[0], word_arg(e.args[0]));
                    const Composition J = single_word(e.args[1], word_arg(e.args[1]));
                    return Report{stuffle_report(I, J, cfg_.eps)};
                }
                if (f == "fgl") {
                    arity(e, 0, 1);
                    return universal_fgl(degree_arg(e, 0));
                }
                if (f == "modulus") {
                    arity(e, 0, 1);
                    return st_modulus(degree_arg(e, 0));
                }
                if (f == "renorm") {
                    arity(e, 0, 1);
                    return Report{renorm_report(degree_arg(e, 0))};
                }
                if (f == "degree") {
                    arity(e, 1, 1);
                    const std::string name = symbol_arg(e.args[0]);
                    try {
                        return Report{degree_report(name, cfg_.grid)};
                    } catch (const PreconditionError& err) {
                        type_error(e.args[0], err.what());
                    }
                }
                if (f == "mercator") {
                    arity(e, 1, 1);
                    return Report{mercator_report(to_double(scalar_arg(e.args[0])), cfg_.grid)};
                }
                type_error(e, "unknown function '" + f + "'");
            }

            const EvalConfig& cfg_;
        };

        Json value_to_json(const Value& v) {
            return std::visit(
                [](const auto& x) -> Json {
                    using T = std::decay_t<decltype(x)>;
                    if constexpr (std::is_same_v<T, Report>) {
                        return x.json;
                    } else {
                        return to_json(x);
                    }
                },
                v);
        }

        std::string exponent_key(const std::vector<int>& e) {
            std::string s = "(";
            for (std::size_t i = 0; i < e.size(); ++i) {
                s += (i ? "," : "") + std::to_string(e[i]);
            }
            return s + ")";
        }

    }  // namespace

    EvalConfig load_config(const std::string& path, EvalConfig base) {
        std::ifstream in(path);
        if (!in) {
            throw PreconditionError("config: cannot read " + path);
        }
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            line = trim(line);
            if (line.empty() || line[0] == '#') {
                continue;
            }
            const auto eq = line.find('=');
            if (eq == std::string::npos) {
                throw PreconditionError("config: line " + std::to_string(lineno) + " is not key=value");
            }
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (key == "max_weight") {
                base.max_weight = parse_number<int>(key, value);
            } else if (key == "eps") {
                base.eps = parse_number<long double>(key, value);
            } else if (key == "grid") {
                base.grid = parse_number<int>(key, value);
            } else if (key == "pretty") {
                if (value != "true" && value != "false") {
                    throw PreconditionError("config: pretty must be true or false");
                }
                base.pretty = value == "true";
            } else {
                throw PreconditionError("config: unknown key '" + key + "'");
            }
        }
        return base;
    }

    EvalConfig config_from_environment() {
        const char* path = std::getenv(kConfigEnv);
        return path && *path ? load_config(path) : EvalConfig{};
    }

    Json to_json(const Composition& c) {
        return Json(c.parts());
    }

    Json to_json(const CommensurableSet& s) {
        return Json{{"missing", s.missing()}, {"extra", s.extra()}};
    }

    Json to_json(const DiracCode& code) {
        return Json{{"s0", code.s0}, {"pi", code.pi.parts()}};
    }

    Json to_json(const WordPoly& p) {
        Json j = Json::object();
        for (const auto& [w, c] : p.terms()) {
            j[w.str()] = to_string(c);
        }
        return j;
    }

    Json to_json(const TensorPoly& t) {
        Json j = Json::object();
        for (const auto& [key, c] : t.terms()) {
            j[key.first.str() + "|" + key.second.str()] = to_string(c);
        }
        return j;
    }

    Json to_json(const RegularizedPoly& r) {
        Json coeffs = Json::object();
        for (const auto& [power, c] : r.coefficients()) {
            coeffs[std::to_string(power)] = to_json(c);
        }
        return Json{{"variable", "T"}, {"coeffs", coeffs}};
    }

    Json to_json(const SymPoly& f) {
        Json terms = Json::object();
        for (const auto& [lambda, c] : f.terms()) {
            terms[lambda.str()] = to_string(c);
        }
        return Json{{"basis", std::string(1, basis_letter(f.basis()))}, {"terms", terms}};
    }

    Json to_json(const Poly& p) {
        Json j = Json::object();
        for (const auto& [m, c] : p.terms()) {
            j[m.str()] = to_string(c);
        }
        return j;
    }

    Json to_json(const TruncSeries& s) {
        Json coeffs = Json::object();
        for (const auto& [e, c] : s.terms()) {
            coeffs[exponent_key(e)] = to_json(c);
        }
        return Json{{"vars", s.vars()}, {"maxdeg", s.maxdeg()}, {"coeffs", coeffs}};
    }

    Json to_json(const Estimate& e) {
        return Json{{"value", static_cast<double>(e.value)}, {"error", static_cast<double>(e.error)}};
    }

    Json to_json(const ZetaPolynomial& z) {
        bool constant = true;
        for (const auto& [k, e] : z) {
            constant = constant && k == 0;
        }
        if (constant) {
            auto it = z.find(0);
            return to_json(it == z.end() ? Estimate{} : it->second);
        }
        Json coeffs = Json::object();
        for (const auto& [k, e] : z) {
            coeffs[std::to_string(k)] = to_json(e);
        }
        return Json{{"variable", "T"}, {"coeffs", coeffs}};
    }

    Json renorm_report(int maxdeg) {
        const TruncSeries lhs = renormalize(chern_character(maxdeg), maxdeg);
        const TruncSeries rhs = st_modulus(maxdeg);
        return Json{{"maxdeg", maxdeg}, {"renormalized", to_json(lhs)}, {"modulus", to_json(rhs)}, {"equal", lhs == rhs}};
    }

    Json stuffle_report(const Composition& I, const Composition& J, long double eps) {
        const StuffleCheck check = check_stuffle(I, J, eps);
        return Json{{"left", to_json(I)},
                    {"right", to_json(J)},
                    {"expansion", to_json(stuffle(WordPoly(I), WordPoly(J)))},
                    {"residual", static_cast<double>(check.residual)},
                    {"error_bound", static_cast<double>(check.error_bound)},
                    {"consistent", check.residual <= check.error_bound}};
    }

    Json dirac_report(const CommensurableSet& s) {
        const DiracCode code = encode(s);
        return Json{{"set", to_json(s)},
                    {"relative_cardinality", relative_cardinality(s)},
                    {"first_elements", s.first_elements(8)},
                    {"code", to_json(code)},
                    {"roundtrip", decode(code) == s}};
    }

    Json degree_report(const std::string& map_name, int grid) {
        SphereMap f;
        if (map_name == "identity") {
            f = identity_map();
        } else if (map_name == "antipodal") {
            f = antipodal_map();
        } else if (map_name == "qsquare") {
            f = quaternion_square_map();
        } else {
            throw PreconditionError("unknown map '" + map_name + "' (identity, antipodal, qsquare)");
        }
        const double d = degree(f, QuadratureGrid{grid});
        return Json{{"value", d}, {"residual", std::fabs(d - std::round(d))}, {"grid", grid}};
    }

    Json mercator_report(double lambda, int grid) {
        const MercatorResult m = mercator(lambda, QuadratureGrid{grid});
        return Json{{"value", m.normalized_volume},
                    {"closed_form", m.closed_form},
                    {"residual", std::fabs(m.normalized_volume - m.closed_form)},
                    {"grid", grid}};
    }

    Json evaluate(const Expr& e, const EvalConfig& cfg) {
        if (cfg.max_weight < 0 || cfg.grid < 1 || !(cfg.eps > 0)) {
            throw PreconditionError("config: need max_weight >= 0, grid >= 1 and eps > 0");
        }
        Evaluator ev(cfg);
        return value_to_json(ev.eval(e));
    }

    Json evaluate(const std::string& src, const EvalConfig& cfg) {
        return evaluate(parse(src), cfg);
    }

    std::string dump(const Json& j, const EvalConfig& cfg) {
        return cfg.pretty ? j.dump(2) : j.dump();
    }

}  // namespace renormkit
