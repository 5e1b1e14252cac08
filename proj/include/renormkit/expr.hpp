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
 // Expression language of the command line: abstract syntax with source positions, a
 // recursive-descent parser with positioned errors, and a minimal-parenthesis printer.

#ifndef RENORMKIT_EXPR_HPP
#define RENORMKIT_EXPR_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "renormkit/combinatorics.hpp"
#include "renormkit/errors.hpp"
#include "renormkit/rational.hpp"

namespace renormkit {

    struct SourcePos {
        int line = 1;
        int column = 1;
    };

    /* One node of the syntax tree. Which fields are meaningful depends on kind:
     *   Number     value (non-negative)
     *   Word       word, as in w(1,2)
     *   Symmetric  basis letter and partition, as in p(2,1)
     *   Symbol     name, a bare identifier such as an argument "qsquare"
     *   Neg        args[0]
     *   Binary     op in + - * # . and args[0], args[1]
     *   Call       name and args */
    struct Expr {
        enum class Kind { Number, Word, Symmetric, Symbol, Neg, Binary, Call };

        Kind kind = Kind::Number;
        Rational value;
        Composition word;
        char basis = 'p';
        Partition partition;
        char op = '+';
        std::string name;
        std::vector<Expr> args;
        SourcePos pos;

        // Structural equality; source positions are ignored.
        bool operator==(const Expr& other) const;
    };

    /* Syntax error at a position, with the set of tokens that would have been accepted. */
    class ParseError : public Error {
    public:
        ParseError(SourcePos pos, std::string message, std::set<std::string> expected);

        const SourcePos& pos() const { return pos_; }
        const std::set<std::string>& expected() const { return expected_; }
        const std::string& detail() const { return detail_; }

    private:
        SourcePos pos_;
        std::string detail_;
        std::set<std::string> expected_;
    };

    /* Grammar, loosest binding first:
     *   sum     := product (('+' | '-') product)*
     *   product := concat (('*' | '#') concat)*
     *   concat  := unary ('.' unary)*
     *   unary   := '-' unary | primary
     *   primary := NUMBER ('/' NUMBER)? | 'w' '(' parts ')' | [mehp] '(' parts ')'
     *            | IDENT '(' (sum (',' sum)*)? ')' | IDENT | '(' sum ')'
     * Binary operators associate to the left. */
    Expr parse(const std::string& src);

    // Canonical text with the fewest parentheses that parse back to the same tree.
    std::string print(const Expr& e);

    // Pseudo-random well-formed expression of bounded depth, for round-trip corpora.
    Expr random_expr(std::uint64_t seed, int max_depth = 4);

}  // namespace renormkit

#endif  // RENORMKIT_EXPR_HPP
