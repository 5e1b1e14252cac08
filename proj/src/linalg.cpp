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

#include "renormkit/linalg.hpp"

#include <utility>

namespace renormkit {

    std::size_t rank(RationalMatrix m) {
        const std::size_t rows = m.size();
        if (rows == 0) {
            return 0;
        }
        const std::size_t cols = m.front().size();
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols && r < rows; ++c) {
            std::size_t pivot = r;
            while (pivot < rows && m[pivot][c] == 0) {
                ++pivot;
            }
            if (pivot == rows) {
                continue;
            }
            std::swap(m[r], m[pivot]);
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (m[i][c] == 0) {
                    continue;
                }
                Rational f = m[i][c] / m[r][c];
                for (std::size_t j = c; j < cols; ++j) {
                    m[i][j] -= f * m[r][j];
                }
            }
            ++r;
        }
        return r;
    }

    RationalMatrix identity_matrix(std::size_t n) {
        RationalMatrix id(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i) {
            id[i][i] = 1;
        }
        return id;
    }

    std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
        const std::size_t n = m.size();
        RationalMatrix a = m;
        RationalMatrix inv = identity_matrix(n);
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t pivot = c;
            while (pivot < n && a[pivot][c] == 0) {
                ++pivot;
            }
            if (pivot == n) {
                return std::nullopt;
            }
            std::swap(a[c], a[pivot]);
            std::swap(inv[c], inv[pivot]);
            Rational scale = 1 / a[c][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[c][j] *= scale;
                inv[c][j] *= scale;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (i == c || a[i][c] == 0) {
                    continue;
                }
                Rational f = a[i][c];
                for (std::size_t j = 0; j < n; ++j) {
                    a[i][j] -= f * a[c][j];
                    inv[i][j] -= f * inv[c][j];
                }
            }
        }
        return inv;
    }

}  // namespace renormkit
