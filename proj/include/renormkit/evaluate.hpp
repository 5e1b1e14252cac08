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
 // Evaluation of parsed expressions to JSON, the JSON encodings of every value type, and
 // the flat key=value configuration shared by the command line and the evaluator.

#ifndef RENORMKIT_EVALUATE_HPP
#define RENORMKIT_EVALUATE_HPP

#include <optional>
#include <string>

#include "json.hpp"
#include "renormkit/combinatorics.hpp"
#include "renormkit/expr.hpp"
#include "renormkit/fgl.hpp"
#include "renormkit/mzv.hpp"
#include "renormkit/polynomial.hpp"
#include "renormkit/quasishuffle.hpp"
#include "renormkit/symmfunc.hpp"

namespace renormkit {

    using Json = nlohmann::json;

    // Environment variable naming the default configuration file.
    inline constexpr const char* kConfigEnv = "RENORMKIT_CONFIG";

    struct EvalConfig {
        int max_weight = 8;       // symbolic results of higher weight or degree are refused
        long double eps = 1e-8L;  // target error of numeric results
        int grid = 24;            // quadrature nodes per polar direction
        bool pretty = false;
    };

    /* Reads "key = value" lines (max_weight, eps, grid, pretty); blank lines and lines
     * starting with '#' are skipped. Throws PreconditionError on unknown keys, malformed
     * values or an unreadable file. */
    EvalConfig load_config(const std::string& path, EvalConfig base = {});

    // load_config on $RENORMKIT_CONFIG when set, the defaults otherwise.
    EvalConfig config_from_environment();

    Json to_json(const Composition& c);
    Json to_json(const CommensurableSet& s);
    Json to_json(const DiracCode& code);
    Json to_json(const WordPoly& p);
    Json to_json(const TensorPoly& t);
    Json to_json(const RegularizedPoly& r);
    Json to_json(const SymPoly& f);
    Json to_json(const Poly& p);
    Json to_json(const TruncSeries& s);
    Json to_json(const Estimate& e);
    Json to_json(const ZetaPolynomial& z);

    // Reports shared by the evaluator and the command line.
    // Both sides of the renormalization identity at degree maxdeg and whether they agree.
    Json renorm_report(int maxdeg);
    // zeta(I) zeta(J) against the stuffle expansion.
    Json stuffle_report(const Composition& I, const Composition& J, long double eps);
    // The set, its relative cardinality, its code and whether decoding returns the set.
    Json dirac_report(const CommensurableSet& s);
    // Degree of "identity", "antipodal" or "qsquare" as {value, residual, grid}.
    Json degree_report(const std::string& map_name, int grid);
    // Normalized cap volume against the closed form as {value, closed_form, residual, grid}.
    Json mercator_report(double lambda, int grid);

    /* Evaluates an expression. Numbers denote multiples of the empty word and act as
     * scalars on every other type. Throws TypeError on ill-typed input, TruncationError when
     * a symbolic result would exceed cfg.max_weight, and the module errors of the called
     * operations (for example DivergentSeriesError). */
    Json evaluate(const Expr& e, const EvalConfig& cfg = {});
    Json evaluate(const std::string& src, const EvalConfig& cfg = {});

    // Serializes with the configured layout; identical input gives byte-identical text.
    std::string dump(const Json& j, const EvalConfig& cfg);

}  // namespace renormkit

#endif  // RENORMKIT_EVALUATE_HPP
