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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "renormkit/evaluate.hpp"
#include "renormkit/expr.hpp"

using namespace renormkit;

namespace {

Json j(const std::string& text) {
    return Json::parse(text);
}

SourcePos error_pos(const std::string& src) {
    try {
        parse(src);
    } catch (const ParseError& e) {
        return e.pos();
    }
    ADD_FAILURE() << "no error for " << src;
    return {};
}

}  // namespace

TEST(Parse, Examples) {
    const Expr product = parse("w(1) * w(2)");
    ASSERT_EQ(product.kind, Expr::Kind::Binary);
    EXPECT_EQ(product.op, '*');
    EXPECT_EQ(product.args[0].word, (Composition{1}));
    EXPECT_EQ(product.args[1].word, (Composition{2}));

    const Expr call = parse("regularize(w(1,2))");
    ASSERT_EQ(call.kind, Expr::Kind::Call);
    EXPECT_EQ(call.name, "regularize");
    ASSERT_EQ(call.args.size(), 1u);
    EXPECT_EQ(call.args[0].word, (Composition{1, 2}));

    const Expr sum = parse("w(1) * w(2) + w(3)");
    EXPECT_EQ(sum.op, '+');
    EXPECT_EQ(sum, parse("(w(1) * w(2)) + w(3)"));
    EXPECT_NE(sum, parse("w(1) * (w(2) + w(3))"));
}

TEST(Parse, PrecedenceAndAssociativity) {
    EXPECT_EQ(parse("w(1).w(2) * w(3)"), parse("(w(1).w(2)) * w(3)"));
    EXPECT_EQ(parse("w(1) # w(2) * w(3)"), parse("(w(1) # w(2)) * w(3)"));
    EXPECT_EQ(parse("w(1) - w(2) - w(3)"), parse("(w(1) - w(2)) - w(3)"));
    EXPECT_EQ(parse("-w(1).w(2)"), parse("(-w(1)).w(2)"));
    EXPECT_EQ(parse("exp(w(1)).w(2)"), parse("(exp(w(1))).w(2)"));
    EXPECT_EQ(print(parse("w(1) - (w(2) - w(3))")), "w(1) - (w(2) - w(3))");
    EXPECT_EQ(print(parse("((w(1)))")), "w(1)");
}

TEST(Parse, Literals) {
    const Expr half = parse("6/4");
    EXPECT_EQ(half.value, ratio(3, 2));
    EXPECT_EQ(print(half), "3/2");
    EXPECT_EQ(parse("p(1,2,1)").partition, (Partition{2, 1, 1}));
    EXPECT_EQ(parse("w()").word, Composition{});
    EXPECT_EQ(parse("m").kind, Expr::Kind::Symbol);
    EXPECT_EQ(parse("fgl()").kind, Expr::Kind::Call);
}

TEST(Parse, RoundTripCorpus) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Expr e = random_expr(seed);
        const std::string text = print(e);
        const Expr back = parse(text);
        EXPECT_EQ(back, e) << text;
        EXPECT_EQ(print(back), text);
    }
}

TEST(Parse, PositionedErrors) {
    auto at = [](const std::string& src, int line, int column) {
        const SourcePos p = error_pos(src);
        EXPECT_EQ(p.line, line) << src;
        EXPECT_EQ(p.column, column) << src;
    };
    at("w(1) * ", 1, 8);
    at("w(1,\n  0)", 2, 3);
    at("3/0", 1, 3);
    at("w(1) $ w(2)", 1, 6);
    at("exp(w(1)", 1, 9);
    at("w(1) w(2)", 1, 6);
    at("", 1, 1);
    try {
        parse("exp(w(1)");
    } catch (const ParseError& e) {
        EXPECT_TRUE(e.expected().count("')'"));
        EXPECT_TRUE(e.expected().count("','"));
        EXPECT_NE(std::string(e.what()).find("line 1, column 9"), std::string::npos);
    }
}

TEST(Parse, MalformedInputNeverEscapes) {
    EXPECT_THROW(parse(std::string(100000, '(')), ParseError);
    EXPECT_THROW(parse(std::string(100000, '-')), ParseError);
    EXPECT_THROW(parse("w(99999999999)"), ParseError);
    EXPECT_EQ(parse("09/012").value, ratio(3, 4));
    const std::string alphabet = "w()p,+-*#./0123 \nzeta9x$";
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        std::string src;
        const auto len = rng() % 20;
        for (std::size_t k = 0; k < len; ++k) {
            src += alphabet[rng() % alphabet.size()];
        }
        try {
            const Expr e = parse(src);
            EXPECT_EQ(parse(print(e)), e) << src;
        } catch (const ParseError& err) {
            EXPECT_GE(err.pos().line, 1);
            EXPECT_GE(err.pos().column, 1);
        }
    }
}

TEST(Evaluate, Examples) {
    EXPECT_EQ(evaluate("w(1) * w(2)"), j(R"js({"(1,2)":"1","(2,1)":"1","(3)":"1"})js"));
    EXPECT_EQ(evaluate("1"), j(R"js({"()":"1"})js"));
    EvalConfig cfg;
    cfg.eps = 1e-8L;
    const Json z = evaluate("zeta(2)", cfg);
    EXPECT_NEAR(z["value"].get<double>(), std::numbers::pi * std::numbers::pi / 6, 1e-8);
    EXPECT_LE(z["error"].get<double>(), 1e-8);
    EXPECT_EQ(evaluate("w(1) # w(2)"), j(R"js({"(1,2)":"1","(2,1)":"1"})js"));
    EXPECT_EQ(evaluate("w(1).w(2) - 1/2*w(3)"), j(R"js({"(1,2)":"1","(3)":"-1/2"})js"));
    EXPECT_EQ(evaluate("regularize(w(1))"), j(R"js({"variable":"T","coeffs":{"1":{"()":"1"}}})js"));
    EXPECT_EQ(evaluate("embed(m(2,1))"), j(R"js({"(1,2)":"1","(2,1)":"1"})js"));
    EXPECT_EQ(evaluate("convert(p(2), e)"), j(R"js({"basis":"e","terms":{"(1,1)":"1","(2)":"-2"}})js"));
    EXPECT_EQ(evaluate("coproduct(w(1,2))"), j(R"js({"()|(1,2)":"1","(1)|(2)":"1","(1,2)|()":"1"})js"));
}

// Identities checked through the evaluator against direct computation of the other side.
TEST(Evaluate, Identities) {
    EXPECT_EQ(evaluate("exp(w(1) # w(2,1))"), evaluate("exp(w(1)) * exp(w(2,1))"));
    EXPECT_EQ(evaluate("log(exp(w(1,1,2) - 3*w(2)))"), evaluate("w(1,1,2) - 3*w(2)"));
    EXPECT_EQ(evaluate("regularize(w(1) * w(2,1))"), evaluate("regularize(w(1)) * regularize(w(2,1))"));
    EXPECT_EQ(evaluate("unregularize(regularize(w(1,1,2)))"), evaluate("w(1,1,2)"));
    EXPECT_EQ(evaluate("pair(w(1,2), w(1,2) + 2*w(3))"), j(R"js({"()":"1"})js"));
    EXPECT_EQ(evaluate("embed(m(1) * m(2))"), evaluate("embed(m(1)) * embed(m(2))"));
    EXPECT_EQ(evaluate("convert(e(2) + h(2), p)"), evaluate("p(1,1)"));
    EXPECT_EQ(evaluate("pair(h(2,1), m(2,1) + m(3))"), j(R"js({"()":"1"})js"));
    EXPECT_EQ(evaluate("antipode(w(1,2))"), evaluate("w(2,1) + w(3)"));
    EXPECT_EQ(evaluate("renorm(4)")["equal"], true);
    EXPECT_EQ(evaluate("modulus(3)"), evaluate("renorm(3)")["modulus"]);
}

TEST(Evaluate, Numeric) {
    const Json prod = evaluate("zeta(2) * zeta(3)");
    const Json rhs = evaluate("zeta(w(2) * w(3))");
    EXPECT_NEAR(prod["value"].get<double>(), rhs["value"].get<double>(),
                prod["error"].get<double>() + rhs["error"].get<double>());
    const Json st = evaluate("stuffle(w(2), w(2))");
    EXPECT_TRUE(st["consistent"].get<bool>());
    const Json reg = evaluate("zeta(w(1,2))");
    EXPECT_TRUE(reg.contains("coeffs"));
    const Json deg = evaluate("degree(qsquare)");
    EXPECT_NEAR(deg["value"].get<double>(), 2.0, 1e-4);
    EXPECT_EQ(deg["grid"].get<int>(), 24);
    const Json m = evaluate("mercator(0)");
    EXPECT_NEAR(m["value"].get<double>(), 1.0, 1e-8);
}

TEST(Evaluate, Errors) {
    EXPECT_THROW(evaluate("w(1) + p(1)"), TypeError);
    EXPECT_THROW(evaluate("p(1) # p(1)"), TypeError);
    EXPECT_THROW(evaluate("foo(1)"), TypeError);
    EXPECT_THROW(evaluate("qsquare"), TypeError);
    EXPECT_THROW(evaluate("degree(torus)"), TypeError);
    EXPECT_THROW(evaluate("zeta(1)"), DivergentSeriesError);
    EXPECT_THROW(evaluate("exp(w(5,5))"), TruncationError);
    EXPECT_THROW(evaluate("w(4) * w(5)"), TruncationError);
    EXPECT_THROW(evaluate("fgl(20)"), TruncationError);
    EXPECT_THROW(evaluate("w(1"), ParseError);
    EvalConfig wide;
    wide.max_weight = 10;
    EXPECT_NO_THROW(evaluate("w(4) * w(5)", wide));
}

TEST(Evaluate, Deterministic) {
    EvalConfig cfg;
    cfg.pretty = true;
    for (const char* src : {"exp(w(1,2,1)) * w(2)", "fgl(4)", "convert(h(3,1), m)", "zeta(3,1)"}) {
        EXPECT_EQ(dump(evaluate(src, cfg), cfg), dump(evaluate(src, cfg), cfg)) << src;
    }
}

TEST(Config, LoadsKeyValueFile) {
    const std::string path = ::testing::TempDir() + "renormkit_test.cfg";
    {
        std::ofstream out(path);
        out << "# defaults\nmax_weight = 5\neps=1e-6\n\ngrid = 12\npretty = true\n";
    }
    const EvalConfig cfg = load_config(path);
    EXPECT_EQ(cfg.max_weight, 5);
    EXPECT_EQ(cfg.grid, 12);
    EXPECT_TRUE(cfg.pretty);
    EXPECT_NEAR(static_cast<double>(cfg.eps), 1e-6, 1e-20);
    {
        std::ofstream out(path);
        out << "colour = red\n";
    }
    EXPECT_THROW(load_config(path), PreconditionError);
    {
        std::ofstream out(path);
        out << "grid = many\n";
    }
    EXPECT_THROW(load_config(path), PreconditionError);
    std::remove(path.c_str());
    EXPECT_THROW(load_config(path), PreconditionError);
}
