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

#include "renormkit/expr.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <random>
#include <sstream>
#include <utility>

namespace renormkit {

    namespace {

        constexpr int kMaxNesting = 200;

        enum class Tok { Number, Ident, LParen, RParen, Comma, Plus, Minus, Star, Hash, Dot, Slash, End };

        struct Token {
            Tok kind = Tok::End;
            std::string text;
            SourcePos pos;
        };

        std::string describe(const Token& t) {
            switch (t.kind) {
            case Tok::Number:
                return "number '" + t.text + "'";
            case Tok::Ident:
                return "identifier '" + t.text + "'";
            case Tok::End:
                return "end of input";
            default:
                return "'" + t.text + "'";
            }
        }

        std::vector<Token> tokenize(const std::string& src) {
            std::vector<Token> out;
            SourcePos pos;
            std::size_t i = 0;
            auto advance = [&](std::size_t n) {
                for (std::size_t k = 0; k < n; ++k, ++i) {
                    if (src[i] == '\n') {
                        ++pos.line;
                        pos.column = 1;
                    } else {
                        ++pos.column;
                    }
                }
            };
            while (i < src.size()) {
                const unsigned char c = static_cast<unsigned char>(src[i]);
                if (std::isspace(c)) {
                    advance(1);
                    continue;
                }
                Token t;
                t.pos = pos;
                std::size_t len = 1;
                if (std::isdigit(c)) {
                    while (i + len < src.size() && std::isdigit(static_cast<unsigned char>(src[i + len]))) {
                        ++len;
                    }
                    t.kind = Tok::Number;
                } else if (std::isalpha(c) || c == '_') {
                    while (i + len < src.size() &&
                           (std::isalnum(static_cast<unsigned char>(src[i + len])) || src[i + len] == '_')) {
                        ++len;
                    }
                    t.kind = Tok::Ident;
                } else {
                    switch (c) {
                    case '(': t.kind = Tok::LParen; break;
                    case ')': t.kind = Tok::RParen; break;
                    case ',': t.kind = Tok::Comma; break;
                    case '+': t.kind = Tok::Plus; break;
                    case '-': t.kind = Tok::Minus; break;
                    case '*': t.kind = Tok::Star; break;
                    case '#': t.kind = Tok::Hash; break;
                    case '.': t.kind = Tok::Dot; break;
                    case '/': t.kind = Tok::Slash; break;
                    default: {
                        std::string shown = std::isprint(c) ? std::string(1, static_cast<char>(c))
                                                            : "\\x" + std::to_string(static_cast<int>(c));
                        throw ParseError(pos, "unexpected character '" + shown + "'",
                                         {"number", "identifier", "'('", "'-'"});
                    }
                    }
                }
                t.text = src.substr(i, len);
                out.push_back(t);
                advance(len);
            }
            Token end;
            end.pos = pos;
            out.push_back(end);
            return out;
        }

        bool is_basis_letter(const std::string& s) {
            return s == "m" || s == "e" || s == "h" || s == "p";
        }

        class Parser {
        public:
            explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

            Expr parse_all() {
                Expr e = sum();
                if (peek().kind != Tok::End) {
                    fail({"end of input", "'+'", "'-'", "'*'", "'#'", "'.'"});
                }
                return e;
            }

        private:
            const Token& peek() const { return toks_[at_]; }
            const Token& next() { return toks_[at_++]; }

            [[noreturn]] void fail(std::set<std::string> expected, const std::string& what = "") const {
                const Token& t = peek();
                throw ParseError(t.pos, what.empty() ? "unexpected " + describe(t) : what, std::move(expected));
            }

            void expect(Tok kind, const std::string& name) {
                if (peek().kind != kind) {
                    fail({name});
                }
                next();
            }

            struct DepthGuard {
                Parser& p;
                explicit DepthGuard(Parser& parser) : p(parser) {
                    if (++p.depth_ > kMaxNesting) {
                        p.fail({}, "expression nested too deeply");
                    }
                }
                ~DepthGuard() { --p.depth_; }
            };

            static Expr binary(char op, Expr lhs, Expr rhs, SourcePos pos) {
                Expr e;
                e.kind = Expr::Kind::Binary;
                e.op = op;
                e.pos = pos;
                e.args.push_back(std::move(lhs));
                e.args.push_back(std::move(rhs));
                return e;
            }

            Expr sum() {
                DepthGuard guard(*this);
                Expr lhs = product();
                while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
                    const Token& t = next();
                    lhs = binary(t.text[0], std::move(lhs), product(), t.pos);
                }
                return lhs;
            }

            Expr product() {
                Expr lhs = concat();
                while (peek().kind == Tok::Star || peek().kind == Tok::Hash) {
                    const Token& t = next();
                    lhs = binary(t.text[0], std::move(lhs), concat(), t.pos);
                }
                return lhs;
            }

            Expr concat() {
                Expr lhs = unary();
                while (peek().kind == Tok::Dot) {
                    const Token& t = next();
                    lhs = binary('.', std::move(lhs), unary(), t.pos);
                }
                return lhs;
            }

            Expr unary() {
                if (peek().kind == Tok::Minus) {
                    DepthGuard guard(*this);
                    Expr e;
                    e.kind = Expr::Kind::Neg;
                    e.pos = next().pos;
                    e.args.push_back(unary());
                    return e;
                }
                return primary();
            }

            int small_positive(const std::string& what) {
                if (peek().kind != Tok::Number) {
                    fail({"number"});
                }
                const Token& t = peek();
                if (t.text.size() > 9 || std::stoi(t.text) == 0) {
                    fail({}, what + " must be an integer in 1..999999999");
                }
                return std::stoi(next().text);
            }

            std::vector<int> parts(const std::string& what) {
                expect(Tok::LParen, "'('");
                std::vector<int> out;
                if (peek().kind == Tok::RParen) {
                    next();
                    return out;
                }
                out.push_back(small_positive(what));
                while (peek().kind == Tok::Comma) {
                    next();
                    out.push_back(small_positive(what));
                }
                if (peek().kind != Tok::RParen) {
                    fail({"','", "')'"});
                }
                next();
                return out;
            }

            Expr primary() {
                const Token& t = peek();
                Expr e;
                e.pos = t.pos;
                if (t.kind == Tok::Number) {
                    next();
                    e.kind = Expr::Kind::Number;
                    Rational num(t.text, 10);
                    if (peek().kind == Tok::Slash) {
                        next();
                        if (peek().kind != Tok::Number) {
                            fail({"number"});
                        }
                        const Token& d = next();
                        Rational den(d.text, 10);
                        if (den == 0) {
                            throw ParseError(d.pos, "zero denominator", {"number"});
                        }
                        num /= den;
                    }
                    num.canonicalize();
                    e.value = num;
                    return e;
                }
                if (t.kind == Tok::LParen) {
                    next();
                    e = sum();
                    if (peek().kind != Tok::RParen) {
                        fail({"')'", "'+'", "'-'", "'*'", "'#'", "'.'"});
                    }
                    next();
                    return e;
                }
                if (t.kind != Tok::Ident) {
                    fail({"number", "identifier", "'('", "'-'"});
                }
                next();
                const bool call = peek().kind == Tok::LParen;
                if (call && t.text == "w") {
                    e.kind = Expr::Kind::Word;
                    e.word = Composition(parts("a letter"));
                    return e;
                }
                if (call && is_basis_letter(t.text)) {
                    e.kind = Expr::Kind::Symmetric;
                    e.basis = t.text[0];
                    e.partition = Partition(parts("a partition part"));
                    return e;
                }
                e.name = t.text;
                if (!call) {
                    e.kind = Expr::Kind::Symbol;
                    return e;
                }
                e.kind = Expr::Kind::Call;
                DepthGuard guard(*this);
                next();
                if (peek().kind == Tok::RParen) {
                    next();
                    return e;
                }
                e.args.push_back(sum());
                while (peek().kind == Tok::Comma) {
                    next();
                    e.args.push_back(sum());
                }
                if (peek().kind != Tok::RParen) {
                    fail({"','", "')'", "'+'", "'-'", "'*'", "'#'", "'.'"});
                }
                next();
                return e;
            }

            std::vector<Token> toks_;
            std::size_t at_ = 0;
            int depth_ = 0;
        };

        int precedence(const Expr& e) {
            if (e.kind == Expr::Kind::Binary) {
                switch (e.op) {
                case '+':
                case '-':
                    return 1;
                case '*':
                case '#':
                    return 2;
                default:
                    return 3;
                }
            }
            return e.kind == Expr::Kind::Neg ? 4 : 5;
        }

        void print_to(std::ostream& os, const Expr& e, int min_prec);

        void print_parts(std::ostream& os, const std::vector<int>& parts) {
            os << '(';
            for (std::size_t i = 0; i < parts.size(); ++i) {
                os << (i ? "," : "") << parts[i];
            }
            os << ')';
        }

        void print_to(std::ostream& os, const Expr& e, int min_prec) {
            const int prec = precedence(e);
            if (prec < min_prec) {
                os << '(';
                print_to(os, e, 0);
                os << ')';
                return;
            }
            switch (e.kind) {
            case Expr::Kind::Number:
                os << to_string(e.value);
                break;
            case Expr::Kind::Word:
                os << 'w';
                print_parts(os, e.word.parts());
                break;
            case Expr::Kind::Symmetric:
                os << e.basis;
                print_parts(os, e.partition.parts());
                break;
            case Expr::Kind::Symbol:
                os << e.name;
                break;
            case Expr::Kind::Neg:
                os << '-';
                print_to(os, e.args.at(0), 4);
                break;
            case Expr::Kind::Binary:
                print_to(os, e.args.at(0), prec);
                if (e.op == '.') {
                    os << '.';
                } else {
                    os << ' ' << e.op << ' ';
                }
                print_to(os, e.args.at(1), prec + 1);
                break;
            case Expr::Kind::Call:
                os << e.name << '(';
                for (std::size_t i = 0; i < e.args.size(); ++i) {
                    if (i) {
                        os << ", ";
                    }
                    print_to(os, e.args[i], 0);
                }
                os << ')';
                break;
            }
        }

    }  // namespace

    bool Expr::operator==(const Expr& o) const {
        if (kind != o.kind) {
            return false;
        }
        switch (kind) {
        case Kind::Number:
            return value == o.value;
        case Kind::Word:
            return word == o.word;
        case Kind::Symmetric:
            return basis == o.basis && partition == o.partition;
        case Kind::Symbol:
            return name == o.name;
        case Kind::Neg:
            return args == o.args;
        case Kind::Binary:
            return op == o.op && args == o.args;
        case Kind::Call:
            return name == o.name && args == o.args;
        }
        return false;
    }

    ParseError::ParseError(SourcePos pos, std::string message, std::set<std::string> expected)
        : Error([&] {
              std::ostringstream os;
              os << "line " << pos.line << ", column " << pos.column << ": " << message;
              if (!expected.empty()) {
                  os << "; expected one of:";
                  for (const auto& e : expected) {
                      os << ' ' << e;
                  }
              }
              return os.str();
          }()),
          pos_(pos),
          detail_(std::move(message)),
          expected_(std::move(expected)) {}

    Expr parse(const std::string& src) {
        return Parser(tokenize(src)).parse_all();
    }

    std::string print(const Expr& e) {
        std::ostringstream os;
        print_to(os, e, 0);
        return os.str();
    }

    Expr random_expr(std::uint64_t seed, int max_depth) {
        std::mt19937_64 rng(seed);
        auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
        auto random_parts = [&](bool sorted) {
            std::vector<int> parts(static_cast<std::size_t>(pick(4)));
            for (auto& p : parts) {
                p = 1 + pick(4);
            }
            if (sorted) {
                std::sort(parts.rbegin(), parts.rend());
            }
            return parts;
        };
        static const std::vector<std::string> symbols{"m", "e", "identity", "qsquare"};
        static const std::vector<std::string> calls{"exp", "log", "regularize", "pair", "embed", "convert", "zeta",
                                                    "antipode"};
        std::function<Expr(int)> gen = [&](int depth) -> Expr {
            Expr e;
            const int choice = depth <= 0 ? pick(4) : pick(9);
            switch (choice) {
            case 0:
                e.kind = Expr::Kind::Number;
                e.value = ratio(pick(20), 1 + pick(5));
                break;
            case 1:
                e.kind = Expr::Kind::Word;
                e.word = Composition(random_parts(false));
                break;
            case 2:
                e.kind = Expr::Kind::Symmetric;
                e.basis = "mehp"[pick(4)];
                e.partition = Partition(random_parts(true));
                break;
            case 3:
                e.kind = Expr::Kind::Symbol;
                e.name = symbols[static_cast<std::size_t>(pick(static_cast<int>(symbols.size())))];
                break;
            case 4:
                e.kind = Expr::Kind::Neg;
                e.args.push_back(gen(depth - 1));
                break;
            case 5:
            case 6:
            case 7: {
                e.kind = Expr::Kind::Binary;
                e.op = "+-*#."[pick(5)];
                e.args.push_back(gen(depth - 1));
                e.args.push_back(gen(depth - 1));
                break;
            }
            default: {
                e.kind = Expr::Kind::Call;
                e.name = calls[static_cast<std::size_t>(pick(static_cast<int>(calls.size())))];
                const int n = pick(3);
                for (int i = 0; i < n; ++i) {
                    e.args.push_back(gen(depth - 1));
                }
                break;
            }
            }
            return e;
        };
        return gen(max_depth);
    }

}  // namespace renormkit
