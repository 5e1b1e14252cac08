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
 // Command-line front end: one subcommand per module, JSON on stdout.
 // Exit status: 0 success, 1 usage or input error, 2 failed verification.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "renormkit/combinatorics.hpp"
#include "renormkit/errors.hpp"
#include "renormkit/evaluate.hpp"
#include "renormkit/expr.hpp"
#include "renormkit/fgl.hpp"
#include "renormkit/mzv.hpp"
#include "renormkit/quasishuffle.hpp"
#include "renormkit/symmfunc.hpp"
#include "renormkit/verify.hpp"

using namespace renormkit;

namespace {

    constexpr int kOk = 0;
    constexpr int kUsage = 1;
    constexpr int kVerifyFailed = 2;

    // "1,2", "(1,2)", "()" or "" as a composition.
    Composition composition_arg(const std::string& text) {
        if (text.empty() || text == "()") {
            return Composition{};
        }
        return parse_composition(text.front() == '(' ? text : "(" + text + ")");
    }

    std::vector<int> int_list(const std::string& text) {
        std::vector<int> out;
        std::stringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) {
            try {
                std::size_t used = 0;
                out.push_back(std::stoi(item, &used));
                if (used != item.size()) {
                    throw std::invalid_argument(item);
                }
            } catch (const std::logic_error&) {
                throw PreconditionError("not an integer list: '" + text + "'");
            }
        }
        return out;
    }

    struct Globals {
        std::optional<int> max_weight;
        std::optional<double> eps;
        std::optional<int> grid;
        bool json = false;
        bool pretty = false;
        std::string config;

        EvalConfig resolve() const {
            EvalConfig cfg = config.empty() ? config_from_environment() : load_config(config);
            if (max_weight) {
                cfg.max_weight = *max_weight;
            }
            if (eps) {
                cfg.eps = *eps;
            }
            if (grid) {
                cfg.grid = *grid;
            }
            if (pretty) {
                cfg.pretty = true;
            } else if (json) {
                cfg.pretty = false;
            }
            return cfg;
        }
    };

    void emit(const Json& j, const EvalConfig& cfg) {
        std::cout << dump(j, cfg) << std::endl;
    }

    void refuse_weight(int w, const EvalConfig& cfg) {
        if (w > cfg.max_weight) {
            throw TruncationError("weight " + std::to_string(w) + " exceeds max_weight " + std::to_string(cfg.max_weight));
        }
    }

    int repl(const EvalConfig& cfg) {
        int status = kOk;
        std::string line;
        int lineno = 0;
        while (std::getline(std::cin, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') {
                continue;
            }
            try {
                emit(evaluate(line, cfg), cfg);
            } catch (const ParseError& e) {
                status = kUsage;
                emit(Json{{"error", e.detail()},
                          {"input_line", lineno},
                          {"column", e.pos().column},
                          {"expected", e.expected()}},
                     cfg);
            } catch (const Error& e) {
                status = kUsage;
                emit(Json{{"error", e.what()}, {"input_line", lineno}}, cfg);
            }
        }
        return status;
    }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact quasi-shuffle, symmetric-function and renormalization computations"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--max-weight", g.max_weight, "Largest weight or degree of symbolic results");
    app.add_option("--eps", g.eps, "Target error of numeric results")->check(CLI::PositiveNumber);
    app.add_option("--grid", g.grid, "Quadrature nodes per polar direction")->check(CLI::PositiveNumber);
    app.add_flag("--json", g.json, "Compact JSON output (the default)");
    app.add_flag("--pretty", g.pretty, "Indented JSON output");
    app.add_option("--config", g.config, std::string("key=value configuration file (default: $") + kConfigEnv + ")");

    std::function<int(const EvalConfig&)> action;

    // qsh
    std::string qu, qv, product = "stuffle";
    auto* qsh = app.add_subcommand("qsh", "Quasi-shuffle, shuffle or concatenation product of two words");
    qsh->add_option("u", qu, "First word, e.g. 1,2")->required();
    qsh->add_option("v", qv, "Second word")->required();
    qsh->add_option("--product", product, "stuffle, shuffle or concat")
        ->check(CLI::IsMember({"stuffle", "shuffle", "concat"}));
    qsh->callback([&] {
        action = [&](const EvalConfig& cfg) {
            const Composition u = composition_arg(qu);
            const Composition v = composition_arg(qv);
            refuse_weight(u.weight() + v.weight(), cfg);
            const WordPoly a(u);
            const WordPoly b(v);
            emit(to_json(product == "stuffle" ? stuffle(a, b) : product == "shuffle" ? shuffle(a, b) : concatenate(a, b)),
                 cfg);
            return kOk;
        };
    });

    // hopf
    std::string hw, op = "coproduct";
    auto* hopf = app.add_subcommand("hopf", "Hopf structure, Hoffman exp/log and regularization of a word");
    hopf->add_option("word", hw, "Word, e.g. 1,1,2")->required();
    hopf->add_option("--op", op, "coproduct, antipode, exp, log or regularize")
        ->check(CLI::IsMember({"coproduct", "antipode", "exp", "log", "regularize"}));
    hopf->callback([&] {
        action = [&](const EvalConfig& cfg) {
            const Composition w = composition_arg(hw);
            refuse_weight(w.weight(), cfg);
            const WordPoly p(w);
            if (op == "coproduct") {
                emit(to_json(coproduct(p)), cfg);
            } else if (op == "antipode") {
                emit(to_json(antipode(p, Bracket::standard())), cfg);
            } else if (op == "exp") {
                emit(to_json(hoffman_exp(p)), cfg);
            } else if (op == "log") {
                emit(to_json(hoffman_log(p)), cfg);
            } else {
                emit(to_json(regularize(p)), cfg);
            }
            return kOk;
        };
    });

    // sym
    std::string sb, sl, target;
    auto* sym = app.add_subcommand("sym", "Change of basis of symmetric functions");
    sym->add_option("basis", sb, "m, e, h or p")->required()->check(CLI::IsMember({"m", "e", "h", "p"}));
    sym->add_option("partition", sl, "Partition, e.g. 2,1")->required();
    sym->add_option("--to", target, "Target basis")->check(CLI::IsMember({"m", "e", "h", "p"}));
    sym->callback([&] {
        action = [&](const EvalConfig& cfg) {
            const Partition lambda = sl.empty() || sl == "()" ? Partition{} : Partition(int_list(sl));
            refuse_weight(lambda.weight(), cfg);
            const SymPoly f(parse_basis(sb[0]), lambda);
            emit(to_json(target.empty() ? f : convert(f, parse_basis(target[0]))), cfg);
            return kOk;
        };
    });

    // fgl
    int fgl_deg = 4;
    auto* fgl = app.add_subcommand("fgl", "Universal formal group law through a total degree");
    fgl->add_option("--maxdeg", fgl_deg, "Total degree")->check(CLI::Range(1, 64));
    fgl->callback([&] {
        action = [&](const EvalConfig& cfg) {
            refuse_weight(fgl_deg, cfg);
            emit(to_json(universal_fgl(fgl_deg)), cfg);
            return kOk;
        };
    });

    // renorm
    int ren_deg = 6;
    auto* ren = app.add_subcommand("renorm", "Renormalized Chern character against the modulus");
    ren->add_option("--maxdeg", ren_deg, "Degree in b")->check(CLI::Range(0, 64));
    ren->callback([&] {
        action = [&](const EvalConfig& cfg) {
            refuse_weight(ren_deg, cfg);
            const Json report = renorm_report(ren_deg);
            emit(report, cfg);
            return report["equal"].get<bool>() ? kOk : kVerifyFailed;
        };
    });

    // zeta
    std::string zi;
    auto* zeta_cmd = app.add_subcommand("zeta", "Multiple zeta value with a certified error bound");
    zeta_cmd->add_option("composition", zi, "Index, e.g. 2,1")->required();
    zeta_cmd->callback([&] {
        action = [&](const EvalConfig& cfg) {
            const MzvValue z = zeta(composition_arg(zi), cfg.eps);
            emit(to_json(Estimate{z.value, z.error_bound}), cfg);
            return kOk;
        };
    });

    // stuffle
    std::string si, sj;
    auto* stuffle_cmd = app.add_subcommand("stuffle", "Numeric check of zeta(I) zeta(J) against the stuffle product");
    stuffle_cmd->add_option("I", si, "First index")->required();
    stuffle_cmd->add_option("J", sj, "Second index")->required();
    stuffle_cmd->callback([&] {
        action = [&](const EvalConfig& cfg) {
            const Json report = stuffle_report(composition_arg(si), composition_arg(sj), cfg.eps);
            emit(report, cfg);
            return report["consistent"].get<bool>() ? kOk : kVerifyFailed;
        };
    });

    // dirac
    std::string missing, extra, pi;
    std::optional<int> s0;
    auto* dirac = app.add_subcommand("dirac", "Relative cardinality and code of a set commensurable with the naturals");
    dirac->add_option("--missing", missing, "Naturals absent from the set, e.g. 0,3");
    dirac->add_option("--extra", extra, "Negative members, e.g. --extra=-2,-1");
    auto* s0_opt = dirac->add_option("--s0", s0, "Decode: least element");
    dirac->add_option("--pi", pi, "Decode: gaps, e.g. 2,1")->needs(s0_opt);
    dirac->callback([&] {
        action = [&](const EvalConfig& cfg) {
            if (s0) {
                if (!missing.empty() || !extra.empty()) {
                    throw PreconditionError("give either --s0/--pi or --missing/--extra");
                }
                emit(dirac_report(decode(*s0, int_list(pi))), cfg);
            } else {
                emit(dirac_report(CommensurableSet(int_list(missing), int_list(extra))), cfg);
            }
            return kOk;
        };
    });

    // ng
    auto* ng = app.add_subcommand("ng", "Sphere quadrature: mapping degrees and cap volumes");
    ng->require_subcommand(1);
    std::string map_name = "identity";
    std::optional<int> ng_n;
    double lambda = 0;
    auto* ng_degree = ng->add_subcommand("degree", "Degree of a map S^3 -> S^3");
    ng_degree->add_option("--map", map_name, "identity, antipodal or qsquare")
        ->check(CLI::IsMember({"identity", "antipodal", "qsquare"}));
    ng_degree->add_option("--n", ng_n, "Quadrature nodes (overrides --grid)")->check(CLI::PositiveNumber);
    ng_degree->callback([&] {
        action = [&](const EvalConfig& cfg) {
            emit(degree_report(map_name, ng_n.value_or(cfg.grid)), cfg);
            return kOk;
        };
    });
    auto* ng_merc = ng->add_subcommand("mercator", "Normalized volume of the cap B_lambda");
    ng_merc->add_option("--lambda", lambda, "Latitude in (-pi, pi)")->required();
    ng_merc->add_option("--n", ng_n, "Quadrature nodes (overrides --grid)")->check(CLI::PositiveNumber);
    ng_merc->callback([&] {
        action = [&](const EvalConfig& cfg) {
            emit(mercator_report(lambda, ng_n.value_or(cfg.grid)), cfg);
            return kOk;
        };
    });

    // verify
    std::string what = "all";
    int ver_deg = 6;
    auto* verify = app.add_subcommand("verify", "Run the acceptance suite, one criterion, or the renormalization check");
    verify->add_option("target", what, "all, renorm, or a criterion number 1-13");
    verify->add_option("--maxdeg", ver_deg, "Degree for 'verify renorm'")->check(CLI::Range(0, 64));
    verify->callback([&] {
        action = [&](const EvalConfig& cfg) {
            std::vector<CriterionResult> results;
            auto report = [&](const CriterionResult& r) {
                if (!g.json && !g.pretty) {
                    std::cout << format_result(r) << std::endl;
                }
            };
            if (what == "all") {
                results = run_acceptance(report);
            } else if (what == "renorm") {
                results.push_back(check_renormalization(ver_deg));
                report(results.back());
            } else {
                const auto ids = int_list(what);
                if (ids.size() != 1 || ids[0] < 1 || ids[0] > kCriterionCount) {
                    throw PreconditionError("verify target must be all, renorm or 1.." + std::to_string(kCriterionCount));
                }
                results.push_back(run_criterion(ids[0]));
                report(results.back());
            }
            bool ok = true;
            Json out = Json::array();
            for (const auto& r : results) {
                ok = ok && r.passed;
                out.push_back(
                    Json{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
            }
            if (g.json || g.pretty) {
                emit(out, cfg);
            }
            return ok ? kOk : kVerifyFailed;
        };
    });

    // eval and repl
    std::string source;
    auto* eval = app.add_subcommand("eval", "Evaluate one expression");
    eval->add_option("expression", source, "e.g. \"exp(w(1) # w(2))\"")->required();
    eval->callback([&] {
        action = [&](const EvalConfig& cfg) {
            emit(evaluate(source, cfg), cfg);
            return kOk;
        };
    });
    auto* repl_cmd = app.add_subcommand("repl", "Evaluate one expression per line of standard input");
    repl_cmd->callback([&] { action = [](const EvalConfig& cfg) { return repl(cfg); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        return action(g.resolve());
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << std::endl;
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kUsage;
    }
}
