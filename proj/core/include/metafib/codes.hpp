// Copyright 2026 The metafib Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "metafib/sequences.hpp"

namespace metafib {

// Binary compact codes, identified with extended binary trees through the
// non-increasing list of leaf levels. A code with n leaves has n >= 2; the
// bare single leaf is not modelled.

using Level = unsigned;

/// Leaf levels l_1 >= l_2 >= ... >= l_n >= 1 with sum 2^{-l_i} = 1.
class LevelSequence {
public:
    /// Validates ordering, positivity, n >= 2 and the Kraft equality
    /// (checked exactly by carrying sibling pairs upward, no floating point).
    /// Throws std::invalid_argument on violation.
    static LevelSequence from_levels(std::vector<Level> levels);

    std::span<const Level> levels() const noexcept { return levels_; }
    std::size_t leaves() const noexcept { return levels_.size(); }
    Level height() const noexcept { return levels_.front(); }

    /// Number of leaves at the given level.
    Index leaves_at(Level level) const;

    /// "3,3,3,3,1"
    std::string to_string() const;

    friend bool operator==(const LevelSequence&, const LevelSequence&) = default;

private:
    explicit LevelSequence(std::vector<Level> levels) : levels_(std::move(levels)) {}

    std::vector<Level> levels_;
};

/// Internal-node counts tau_0..tau_{h-1} per level of a code of height h.
class LevelCounts {
public:
    /// Requires tau_0 = 1, tau_i <= 2 tau_{i-1}, tau_{h-1} >= 1.
    static LevelCounts from_tau(std::vector<Index> tau);

    std::span<const Index> tau() const noexcept { return tau_; }
    Level height() const noexcept { return static_cast<Level>(tau_.size()); }

    /// n = 1 + sum tau_i.
    Index leaves() const noexcept;

    /// tau_{h-1}: internal nodes at the last internal level, i.e. leaf pairs
    /// at depth h.
    Index deepest() const noexcept { return tau_.back(); }

    /// "[1,1,2]"
    std::string to_string() const;

    friend bool operator==(const LevelCounts&, const LevelCounts&) = default;

private:
    explicit LevelCounts(std::vector<Index> tau) : tau_(std::move(tau)) {}

    std::vector<Index> tau_;
};

/// ceil(log2 n) for n >= 1.
Level ceil_log2(Index n);

LevelCounts level_counts(const LevelSequence& code);

/// Inverse of level_counts: 2 tau_{i-1} - tau_i leaves at level i (tau_h = 0).
LevelSequence counts_to_code(const LevelCounts& counts);

inline constexpr Index kMaxEnumerationLeaves = 16;

/// Every code with n leaves (and height exactly h when given), found by
/// exhaustive search over non-increasing level lists. Ordered by height,
/// then lexicographically descending. Throws std::invalid_argument for
/// n < 2 or n > kMaxEnumerationLeaves.
std::vector<LevelSequence> enumerate_codes(Index n, std::optional<Level> height = std::nullopt);

/// Greedy tree T(n, h): start from h,h,h-1,...,1 at n = h+1 and repeatedly
/// split the leftmost leaf above depth h. Requires h+1 <= n <= 2^h.
LevelSequence greedy_tree(Index n, Level h);

/// One greedy step at fixed height: the leftmost leaf with level < height
/// becomes two leaves one level deeper. Throws std::invalid_argument for a
/// complete tree.
LevelSequence expand_leftmost(const LevelSequence& code);

/// Counts-side greedy step: increments tau_k for the largest k >= 1 with
/// tau_k < 2 tau_{k-1}. Throws std::invalid_argument when no such k exists.
LevelCounts greedy_step_counts(const LevelCounts& counts);

/// Level counts of T(n, h), built with greedy_step_counts only.
LevelCounts greedy_counts(Index n, Level h);

/// T(n) = T(n, ceil(log2 n)), built incrementally: complete tree at powers
/// of two, then a fresh root with the complete tree on the left and a leaf
/// on the right, otherwise expand_leftmost.
LevelSequence greedy_tree_unbounded(Index n);

/// Replaces the rightmost equal pair l_j = l_{j+1} by l_j - 1. Requires at
/// least 3 leaves.
LevelSequence shrink(const LevelSequence& code);

/// M(n, h): the largest tau_{h-1} over codes with n leaves and height h;
/// 0 when no such code exists. Computed from the greedy counts.
Index max_deepest_pairs(Index n, Level h);

/// M(n, h) by exhaustive enumeration; n <= kMaxOracleLeaves.
inline constexpr Index kMaxOracleLeaves = 14;
Index max_deepest_pairs_oracle(Index n, Level h);

/// max_h M(n, h) = M(n, ceil(log2 n)), n >= 2.
Index a_max(Index n);

/// M(n + h, h) for the smallest h with n + h <= 2^h, n >= 1.
Index b_seq(Index n);

/// Smallest height h with n + h <= 2^h.
Level b_seq_height(Index n);

/// Largest number of parts equal to 1 in a partition of 2^h into n powers
/// of two. A part equals 1 exactly when its leaf sits at depth h, so this is
/// the leaf count 2 M(n, h) rather than the pair count.
Index max_ones_partition(Index n, Level h);

/// Same quantity by brute-force search over partitions; requires 2^h <= 64.
Index max_ones_partition_oracle(Index n, Level h);

}  // namespace metafib
