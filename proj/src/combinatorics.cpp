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

#include "renormkit/combinatorics.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include "renormkit/errors.hpp"

namespace renormkit {

    namespace {
        void check_positive(const std::vector<int>& parts, const char* what) {
            for (int p : parts) {
                if (p < 1) {
                    throw PreconditionError(std::string(what) + " parts must be positive, got " + std::to_string(p));
                }
            }
        }

        std::string join_parts(const std::vector<int>& parts) {
            std::string out = "(";
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (i) {
                    out += ',';
                }
                out += std::to_string(parts[i]);
            }
            out += ')';
            return out;
        }

        std::vector<int> parse_parts(const std::string& text) {
            std::string body = text;
            auto strip = [](std::string& s) {
                auto not_space = [](unsigned char c) { return !std::isspace(c); };
                s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
                s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
            };
            strip(body);
            if (!body.empty() && body.front() == '(') {
                if (body.back() != ')') {
                    throw PreconditionError("unbalanced parentheses in '" + text + "'");
                }
                body = body.substr(1, body.size() - 2);
                strip(body);
            }
            std::vector<int> parts;
            if (body.empty()) {
                return parts;
            }
            std::stringstream ss(body);
            std::string item;
            while (std::getline(ss, item, ',')) {
                strip(item);
                std::size_t used = 0;
                int value = 0;
                try {
                    value = std::stoi(item, &used);
                } catch (const std::exception&) {
                    throw PreconditionError("not an integer: '" + item + "' in '" + text + "'");
                }
                if (used != item.size()) {
                    throw PreconditionError("not an integer: '" + item + "' in '" + text + "'");
                }
                parts.push_back(value);
            }
            return parts;
        }
    }  // namespace

    // ---------------------------------------------------------------- Composition

    Composition::Composition(std::initializer_list<int> parts) : parts_(parts) {
        check_positive(parts_, "composition");
    }

    Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        check_positive(parts_, "composition");
    }

    int Composition::weight() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    Composition Composition::prepend(int letter) const {
        std::vector<int> out;
        out.reserve(parts_.size() + 1);
        out.push_back(letter);
        out.insert(out.end(), parts_.begin(), parts_.end());
        return Composition(std::move(out));
    }

    Composition Composition::concat(const Composition& other) const {
        std::vector<int> out = parts_;
        out.insert(out.end(), other.parts_.begin(), other.parts_.end());
        Composition c;
        c.parts_ = std::move(out);
        return c;
    }

    Composition Composition::slice(std::size_t begin, std::size_t end) const {
        Composition c;
        c.parts_.assign(parts_.begin() + static_cast<std::ptrdiff_t>(begin),
                        parts_.begin() + static_cast<std::ptrdiff_t>(end));
        return c;
    }

    Composition Composition::reversed() const {
        Composition c = *this;
        std::reverse(c.parts_.begin(), c.parts_.end());
        return c;
    }

    std::string Composition::str() const {
        return join_parts(parts_);
    }

    Composition parse_composition(const std::string& text) {
        return Composition(parse_parts(text));
    }

    // ------------------------------------------------------------------ Partition

    Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        check_positive(parts_, "partition");
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
    }

    int Partition::weight() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    Partition Partition::join(const Partition& other) const {
        std::vector<int> out = parts_;
        out.insert(out.end(), other.parts_.begin(), other.parts_.end());
        return Partition(std::move(out));
    }

    std::string Partition::str() const {
        return join_parts(parts_);
    }

    Partition parse_partition(const std::string& text) {
        return Partition(parse_parts(text));
    }

    // -------------------------------------------------------------- enumerations

    std::vector<Composition> compositions_of(int n) {
        if (n < 0) {
            return {};
        }
        if (n == 0) {
            return {Composition{}};
        }
        std::vector<Composition> out;
        for (int first = 1; first <= n; ++first) {
            for (const auto& rest : compositions_of(n - first)) {
                out.push_back(rest.prepend(first));
            }
        }
        return out;
    }

    std::vector<Composition> compositions_up_to(int max_weight) {
        std::vector<Composition> out;
        for (int n = 0; n <= max_weight; ++n) {
            auto level = compositions_of(n);
            out.insert(out.end(), level.begin(), level.end());
        }
        return out;
    }

    std::vector<Partition> partitions_of(int n) {
        std::vector<Partition> out;
        if (n < 0) {
            return out;
        }
        std::vector<int> current;
        std::function<void(int, int)> rec = [&](int remaining, int cap) {
            if (remaining == 0) {
                out.emplace_back(current);
                return;
            }
            for (int part = std::min(remaining, cap); part >= 1; --part) {
                current.push_back(part);
                rec(remaining - part, part);
                current.pop_back();
            }
        };
        rec(n, n);
        return out;
    }

    std::vector<Composition> rearrangements(const Partition& lambda) {
        std::vector<int> parts = lambda.parts();
        std::sort(parts.begin(), parts.end());
        std::vector<Composition> out;
        do {
            out.emplace_back(parts);
        } while (std::next_permutation(parts.begin(), parts.end()));
        return out;
    }

    // -------------------------------------------------------------------- Lyndon

    std::vector<Composition> lyndon_factorization(const Composition& w) {
        const auto& s = w.parts();
        const std::size_t n = s.size();
        std::vector<Composition> factors;
        std::size_t k = 0;
        while (k < n) {
            std::size_t i = k;
            std::size_t j = k + 1;
            while (j < n && s[i] <= s[j]) {
                i = s[i] < s[j] ? k : i + 1;
                ++j;
            }
            const std::size_t period = j - i;
            while (k <= i) {
                factors.push_back(w.slice(k, k + period));
                k += period;
            }
        }
        return factors;
    }

    bool is_lyndon(const Composition& w) {
        return !w.empty() && lyndon_factorization(w).size() == 1;
    }

    std::vector<Composition> lyndon_compositions(int max_weight) {
        if (max_weight < 1) {
            throw PreconditionError("lyndon_compositions: max_weight must be >= 1");
        }
        std::vector<Composition> out;
        for (int n = 1; n <= max_weight; ++n) {
            for (auto& c : compositions_of(n)) {
                if (is_lyndon(c)) {
                    out.push_back(std::move(c));
                }
            }
        }
        return out;
    }

    // --------------------------------------------------------- CommensurableSet

    namespace {
        void normalize(std::vector<int>& v) {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
        }
    }  // namespace

    CommensurableSet::CommensurableSet(std::vector<int> missing, std::vector<int> extra)
        : missing_(std::move(missing)), extra_(std::move(extra)) {
        normalize(missing_);
        normalize(extra_);
        if (!missing_.empty() && missing_.front() < 0) {
            throw PreconditionError("commensurable set: missing elements must be nonnegative");
        }
        if (!extra_.empty() && extra_.back() >= 0) {
            throw PreconditionError("commensurable set: extra elements must be negative");
        }
    }

    CommensurableSet CommensurableSet::from_elements(const std::vector<int>& listed, int tail_start) {
        CommensurableSet s;
        auto it = listed.begin();
        for (; it != listed.end() && *it < 0 && *it < tail_start; ++it) {
            s.extra_.push_back(*it);
        }
        for (int n = std::min(tail_start, 0); n < 0; ++n) {
            if (s.extra_.empty() || s.extra_.back() < n) {
                s.extra_.push_back(n);
            }
        }
        for (int n = 0; n < tail_start; ++n) {
            while (it != listed.end() && *it < n) {
                ++it;
            }
            if (it == listed.end() || *it != n) {
                s.missing_.push_back(n);
            }
        }
        return s;
    }

    bool CommensurableSet::contains(int n) const {
        return n >= 0 ? !std::binary_search(missing_.begin(), missing_.end(), n)
                      : std::binary_search(extra_.begin(), extra_.end(), n);
    }

    long CommensurableSet::relative_cardinality() const {
        return static_cast<long>(missing_.size()) - static_cast<long>(extra_.size());
    }

    std::vector<int> CommensurableSet::first_elements(std::size_t count) const {
        std::vector<int> out;
        out.reserve(count);
        int n = extra_.empty() ? 0 : extra_.front();
        while (out.size() < count) {
            if (contains(n)) {
                out.push_back(n);
            }
            ++n;
        }
        return out;
    }

    CommensurableSet CommensurableSet::shifted(int by) const {
        // From window_end on, every integer is in S.
        const int window_end = missing_.empty() ? 0 : missing_.back() + 1;
        const int window_begin = extra_.empty() ? 0 : extra_.front();
        std::vector<int> listed;
        for (int n = window_begin; n < window_end; ++n) {
            if (contains(n)) {
                listed.push_back(n + by);
            }
        }
        return from_elements(listed, window_end + by);
    }

    std::size_t CommensurableSet::stable_index() const {
        const long c = relative_cardinality();
        const int window_end = missing_.empty() ? 0 : missing_.back() + 1;
        // window_end is in S, at index window_end - c.
        const long last = static_cast<long>(window_end) - c;
        if (last <= 0) {
            return 0;
        }
        auto elems = first_elements(static_cast<std::size_t>(last) + 1);
        std::size_t k0 = static_cast<std::size_t>(last);
        while (k0 > 0 && elems[k0 - 1] == static_cast<long>(k0 - 1) + c) {
            --k0;
        }
        return k0;
    }

    long relative_cardinality(const CommensurableSet& s) {
        return s.relative_cardinality();
    }

    DiracCode encode(const CommensurableSet& s) {
        const std::size_t k_max = s.stable_index();
        auto elems = s.first_elements(k_max + 1);
        std::vector<int> gaps;
        gaps.reserve(k_max);
        for (std::size_t k = 1; k <= k_max; ++k) {
            gaps.push_back(elems[k] - elems[k - 1]);
        }
        return DiracCode{elems.front(), Composition(std::move(gaps))};
    }

    CommensurableSet decode(int s0, const std::vector<int>& pi) {
        std::vector<int> listed{s0};
        int current = s0;
        for (int gap : pi) {
            if (gap < 1) {
                throw PreconditionError("dirac code: parts must be positive, got " + std::to_string(gap));
            }
            current += gap;
            listed.push_back(current);
        }
        return CommensurableSet::from_elements(listed, current);
    }

    CommensurableSet decode(const DiracCode& code) {
        return decode(code.s0, code.pi.parts());
    }

}  // namespace renormkit
