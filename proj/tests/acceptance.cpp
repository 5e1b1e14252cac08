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
 // Runs the acceptance suite and prints one PASS/FAIL line per criterion.

#include <cstdlib>
#include <iostream>

#include "renormkit/verify.hpp"

int main(int argc, char** argv) {
    std::vector<renormkit::CriterionResult> results;
    if (argc > 1) {
        for (int i = 1; i < argc; ++i) {
            results.push_back(renormkit::run_criterion(std::atoi(argv[i])));
            std::cout << renormkit::format_result(results.back()) << std::endl;
        }
    } else {
        results = renormkit::run_acceptance(
            [](const renormkit::CriterionResult& r) { std::cout << renormkit::format_result(r) << std::endl; });
    }
    int failed = 0;
    for (const auto& r : results) {
        failed += r.passed ? 0 : 1;
    }
    std::cout << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " criteria passed"
              << std::endl;
    return failed == 0 ? 0 : 1;
}
