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
 // The acceptance suite: thirteen end-to-end checks shared by the command line and the
 // acceptance test binary.

#ifndef RENORMKIT_VERIFY_HPP
#define RENORMKIT_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

namespace renormkit {

    struct CriterionResult {
        int id = 0;
        std::string title;
        bool passed = false;
        std::string detail;  // measured quantities, and the failing sub-check if any
        double seconds = 0;
    };

    inline constexpr int kCriterionCount = 13;

    // Runs one criterion (1..13). Exceptions from the checked code are reported as failures.
    CriterionResult run_criterion(int id);

    // Criterion 1 at an arbitrary degree.
    CriterionResult check_renormalization(int maxdeg);

    // Runs every criterion in order, calling on_result after each one.
    std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& on_result = {});

    // "PASS  7 stuffle vs analysis (1.2 s): ..." for one result.
    std::string format_result(const CriterionResult& r);

}  // namespace renormkit

#endif  // RENORMKIT_VERIFY_HPP
