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
 // Compositions, partitions, Lyndon words, and subsets of Z commensurable with Z_+.

#ifndef RENORMKIT_COMBINATORICS_HPP
#define RENORMKIT_COMBINATORICS_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace renormkit {

    /* A finite sequence of positive integers. Doubles as the word y_{a1}...y_{ak} in the
     * letters y_1, y_2, ... and as the index of the monomial quasi-symmetric function M_I.
     * Ordering is lexicographic part-by-part with a proper prefix smaller than its extensions. */
    class Composition {
    public:
        Composition() = default;
        Composition(std::initializer_list<int> parts);
        explicit Composition(std::vector<int> parts);

        const std::vector<int>& parts() const { return parts_; }
        std::size_t length() const { return parts_.size(); }
        bool empty() const { return parts_.empty(); }
        int weight() const;
        int operator[](std::size_t i) const { return parts_[i]; }

        // First part >= 2 (the empty word counts as admissible).
        bool admissible() const { return parts_.empty() || parts_.front() >= 2; }

        Composition prepend(int letter) const;
        Composition concat(const Composition& other) const;
        Composition slice(std::size_t begin, std::size_t end) const;
        Composition reversed() const;

        // "(1,2)" / "()"
        std::string str() const;

        auto operator<=>(const Composition&) const = default;
        bool operator==(const Composition&) const = default;

    private:
        std::vector<int> parts_;
    };

    inline std::ostream& operator<<(std::ostream& os, const Composition& c) { return os << c.str(); }

    // Parses "(1,2)", "1,2", or "()" into a composition.
    Composition parse_composition(const std::string& text);

    /* Weakly decreasing sequence of positive integers; constructors sort their input. */
    class Partition {
    public:
        Partition() = default;
        Partition(std::initializer_list<int> parts);
        explicit Partition(std::vector<int> parts);

        const std::vector<int>& parts() const { return parts_; }
        std::size_t length() const { return parts_.size(); }
        bool empty() const { return parts_.empty(); }
        int weight() const;

        // Multiset union.
        Partition join(const Partition& other) const;

        std::string str() const;

        auto operator<=>(const Partition&) const = default;
        bool operator==(const Partition&) const = default;

    private:
        std::vector<int> parts_;
    };

    inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

    Partition parse_partition(const std::string& text);

    // All compositions of n in lexicographic order; n = 0 gives the empty composition.
    std::vector<Composition> compositions_of(int n);

    // All compositions of weight 0..max_weight, grouped by weight.
    std::vector<Composition> compositions_up_to(int max_weight);

    // All partitions of n, in decreasing lexicographic order.
    std::vector<Partition> partitions_of(int n);

    // Distinct rearrangements of a partition's parts.
    std::vector<Composition> rearrangements(const Partition& lambda);

    // Strictly smaller than all proper rotations.
    bool is_lyndon(const Composition& w);

    // Chen-Fox-Lyndon factorization by Duval's algorithm: Lyndon factors in
    // non-increasing order whose concatenation is w.
    std::vector<Composition> lyndon_factorization(const Composition& w);

    // Lyndon compositions of weight 1..max_weight, grouped by weight and sorted
    // lexicographically within a weight. Throws PreconditionError if max_weight < 1.
    std::vector<Composition> lyndon_compositions(int max_weight);

    /* A subset S of Z with finite symmetric difference from Z_+ = {0, 1, 2, ...}, stored as
     * the two finite deviation sets: S = (Z_+ \ missing) u extra. */
    class CommensurableSet {
    public:
        CommensurableSet() = default;
        // Throws PreconditionError unless missing >= 0 and extra < 0 elementwise.
        CommensurableSet(std::vector<int> missing, std::vector<int> extra);

        // The set listed u [tail_start, inf); listed must be sorted ascending.
        static CommensurableSet from_elements(const std::vector<int>& listed, int tail_start);

        // Both sorted ascending, without duplicates.
        const std::vector<int>& missing() const { return missing_; }
        const std::vector<int>& extra() const { return extra_; }

        bool contains(int n) const;

        // #S = |Z_+ \ S| - |S \ Z_+|, so that s_k = k + #S for large k.
        long relative_cardinality() const;

        // s_0 < s_1 < ... < s_{count-1}.
        std::vector<int> first_elements(std::size_t count) const;

        // S + by.
        CommensurableSet shifted(int by) const;

        // Every k >= stable_index() has s_k = k + #S.
        std::size_t stable_index() const;

        bool operator==(const CommensurableSet&) const = default;

    private:
        std::vector<int> missing_;
        std::vector<int> extra_;
    };

    /* Least element s0 of S together with the ordered gaps pi = (s1 - s0, ..., s_max - s_{max-1}),
     * where max is the least index from which s_k = k + #S holds. */
    struct DiracCode {
        int s0 = 0;
        Composition pi;

        bool operator==(const DiracCode&) const = default;
    };

    long relative_cardinality(const CommensurableSet& s);

    DiracCode encode(const CommensurableSet& s);

    // Throws PreconditionError if a part of pi is not positive (cannot happen for a
    // well-formed Composition, but codes assembled from raw integers go through this too).
    CommensurableSet decode(const DiracCode& code);
    CommensurableSet decode(int s0, const std::vector<int>& pi);

}  // namespace renormkit

#endif  // RENORMKIT_COMBINATORICS_HPP
