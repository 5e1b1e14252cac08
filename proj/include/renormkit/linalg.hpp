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
 // Dense exact linear algebra over Q, sized for graded pieces of a few hundred dimensions.

#ifndef RENORMKIT_LINALG_HPP
#define RENORMKIT_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "renormkit/rational.hpp"

namespace renormkit {

    using RationalMatrix = std::vector<std::vector<Rational>>;

    std::size_t rank(RationalMatrix m);

    // Inverse of a square matrix, or nullopt if singular.
    std::optional<RationalMatrix> inverse(const RationalMatrix& m);

    RationalMatrix identity_matrix(std::size_t n);

}  // namespace renormkit

#endif  // RENORMKIT_LINALG_HPP
