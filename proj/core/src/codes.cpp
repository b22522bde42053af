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

#include "metafib/codes.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace metafib {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw std::invalid_argument(what); }

// Largest k >= 1 with tau_k < 2 tau_{k-1}; 0 when the tree is complete.
std::size_t slack_level(const std::vector<Index>& tau) {
    for (std::size_t k = tau.size(); k-- > 1;) {
        if (tau[k] < 2 * tau[k - 1]) {
            return k;
        }
    }
    return 0;
}

void check_greedy_range(Index n, Level h) {
    if (h == 0 || h >= 63) {
        invalid("greedy tree height must be in [1, 62]");
    }
    if (n < Index{h} + 1 || n > (Index{1} << h)) {
        invalid("greedy tree needs h+1 <= n <= 2^h (n = " + std::to_string(n) +
                ", h = " + std::to_string(h) + ")");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// LevelSequence / LevelCounts

LevelSequence LevelSequence::from_levels(std::vector<Level> levels) {
    if (levels.size() < 2) {
        invalid("a code needs at least two leaves");
    }
    if (!std::is_sorted(levels.rbegin(), levels.rend())) {
        invalid("leaf levels must be non-increasing");
    }
    if (levels.back() == 0) {
        invalid("leaf levels must be positive");
    }
    // Kraft equality: pair up leaves level by level from the bottom; every
    // level must pair off evenly and exactly one node may remain at the root.
    std::map<Level, Index, std::greater<>> per_level;
    for (Level l : levels) {
        ++per_level[l];
    }
    Index carry = 0;
    for (Level l = levels.front(); l >= 1; --l) {
        const auto it = per_level.find(l);
        const Index total = carry + (it == per_level.end() ? 0 : it->second);
        if (total % 2 != 0) {
            invalid("leaf levels violate the Kraft equality");
        }
        carry = total / 2;
    }
    if (carry != 1) {
        invalid("leaf levels violate the Kraft equality");
    }
    return LevelSequence(std::move(levels));
}

Index LevelSequence::leaves_at(Level level) const {
    return static_cast<Index>(std::count(levels_.begin(), levels_.end(), level));
}

std::string LevelSequence::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        if (i) {
            out += ',';
        }
        out += std::to_string(levels_[i]);
    }
    return out;
}

LevelCounts LevelCounts::from_tau(std::vector<Index> tau) {
    if (tau.empty() || tau.front() != 1) {
        invalid("level counts must start with tau_0 = 1");
    }
    for (std::size_t i = 1; i < tau.size(); ++i) {
        if (tau[i] > 2 * tau[i - 1]) {
            invalid("level counts need tau_i <= 2 tau_{i-1}");
        }
    }
    if (tau.back() == 0) {
        invalid("level counts need tau_{h-1} >= 1");
    }
    return LevelCounts(std::move(tau));
}

Index LevelCounts::leaves() const noexcept {
    return 1 + std::accumulate(tau_.begin(), tau_.end(), Index{0});
}

std::string LevelCounts::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < tau_.size(); ++i) {
        if (i) {
            out += ',';
        }
        out += std::to_string(tau_[i]);
    }
    return out + "]";
}

Level ceil_log2(Index n) {
    if (n == 0) {
        invalid("ceil_log2(0)");
    }
    return n == 1 ? 0 : static_cast<Level>(std::bit_width(n - 1));
}

LevelCounts level_counts(const LevelSequence& code) {
    std::vector<Index> tau{1};
    for (Level i = 1; i < code.height(); ++i) {
        tau.push_back(2 * tau.back() - code.leaves_at(i));
    }
    return LevelCounts::from_tau(std::move(tau));
}

LevelSequence counts_to_code(const LevelCounts& counts) {
    const auto tau = counts.tau();
    std::vector<Level> levels;
    for (Level i = counts.height(); i >= 1; --i) {
        const Index below = i < tau.size() ? tau[i] : 0;
        levels.insert(levels.end(), 2 * tau[i - 1] - below, i);
    }
    return LevelSequence::from_levels(std::move(levels));
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

struct CodeSearch {
    Index n;
    Level height;
    std::vector<Level> levels;
    std::vector<LevelSequence>* out;

    // `remaining` is the unused Kraft mass in units of 2^{-height}.
    void extend(Index remaining) {
        const Index placed = levels.size();
        if (placed == n) {
            if (remaining == 0) {
                out->push_back(LevelSequence::from_levels(levels));
            }
            return;
        }
        const Index left_after = n - placed - 1;
        for (Level l = levels.back(); l >= 1; --l) {
            const Index cost = Index{1} << (height - l);
            if (cost > remaining) {
                break;
            }
            const Index rest = remaining - cost;
            // Later leaves are no deeper than l and no shallower than level 1.
            if (rest < left_after * cost) {
                continue;
            }
            if (rest > left_after * (Index{1} << (height - 1))) {
                continue;
            }
            levels.push_back(l);
            extend(rest);
            levels.pop_back();
        }
    }
};

}  // namespace

std::vector<LevelSequence> enumerate_codes(Index n, std::optional<Level> height) {
    if (n < 2 || n > kMaxEnumerationLeaves) {
        invalid("enumerate_codes needs 2 <= n <= " + std::to_string(kMaxEnumerationLeaves));
    }
    std::vector<LevelSequence> out;
    const Level lowest = ceil_log2(n);
    const auto highest = static_cast<Level>(n - 1);
    for (Level h = lowest; h <= highest; ++h) {
        if (height && *height != h) {
            continue;
        }
        CodeSearch search{n, h, {h}, &out};
        search.extend((Index{1} << h) - 1);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Greedy construction

LevelSequence expand_leftmost(const LevelSequence& code) {
    const Level h = code.height();
    std::vector<Level> levels(code.levels().begin(), code.levels().end());
    const auto it = std::find_if(levels.begin(), levels.end(), [h](Level l) { return l < h; });
    if (it == levels.end()) {
        invalid("complete tree has no leaf above its deepest level");
    }
    const Level deeper = *it + 1;
    *it = deeper;
    levels.insert(it, deeper);
    return LevelSequence::from_levels(std::move(levels));
}

LevelSequence greedy_tree(Index n, Level h) {
    check_greedy_range(n, h);
    std::vector<Level> base{h};
    for (Level l = h; l >= 1; --l) {
        base.push_back(l);
    }
    LevelSequence code = LevelSequence::from_levels(std::move(base));
    for (Index m = Index{h} + 1; m < n; ++m) {
        code = expand_leftmost(code);
    }
    return code;
}

LevelCounts greedy_step_counts(const LevelCounts& counts) {
    std::vector<Index> tau(counts.tau().begin(), counts.tau().end());
    const std::size_t k = slack_level(tau);
    if (k == 0) {
        invalid("complete tree: every level is saturated");
    }
    ++tau[k];
    return LevelCounts::from_tau(std::move(tau));
}

LevelCounts greedy_counts(Index n, Level h) {
    check_greedy_range(n, h);
    std::vector<Index> tau(h, 1);
    for (Index m = Index{h} + 1; m < n; ++m) {
        ++tau[slack_level(tau)];
    }
    return LevelCounts::from_tau(std::move(tau));
}

namespace {

LevelSequence unbounded_successor(const LevelSequence& code) {
    if (code.leaves() == (Index{1} << code.height())) {
        // Complete tree goes under a new root; the right child is a leaf.
        std::vector<Level> levels;
        levels.reserve(code.leaves() + 1);
        for (Level l : code.levels()) {
            levels.push_back(l + 1);
        }
        levels.push_back(1);
        return LevelSequence::from_levels(std::move(levels));
    }
    return expand_leftmost(code);
}

}  // namespace

LevelSequence greedy_tree_unbounded(Index n) {
    if (n < 2) {
        invalid("greedy_tree_unbounded needs n >= 2");
    }
    LevelSequence code = LevelSequence::from_levels({1, 1});
    for (Index m = 2; m < n; ++m) {
        code = unbounded_successor(code);
    }
    return code;
}

LevelSequence shrink(const LevelSequence& code) {
    if (code.leaves() < 3) {
        invalid("shrink needs at least three leaves");
    }
    std::vector<Level> levels(code.levels().begin(), code.levels().end());
    for (std::size_t j = levels.size() - 1; j-- > 0;) {
        if (levels[j] == levels[j + 1]) {
            levels[j] -= 1;
            levels.erase(levels.begin() + static_cast<std::ptrdiff_t>(j) + 1);
            return LevelSequence::from_levels(std::move(levels));
        }
    }
    invalid("code has no equal pair of levels");
}

// ---------------------------------------------------------------------------
// Extremal quantities

Index max_deepest_pairs(Index n, Level h) {
    if (n < 2 || h == 0) {
        invalid("M(n, h) needs n >= 2 and h >= 1");
    }
    if (n < Index{h} + 1 || h < ceil_log2(n)) {
        return 0;
    }
    return greedy_counts(n, h).deepest();
}

Index max_deepest_pairs_oracle(Index n, Level h) {
    if (n < 2 || n > kMaxOracleLeaves) {
        invalid("M oracle needs 2 <= n <= " + std::to_string(kMaxOracleLeaves));
    }
    Index best = 0;
    for (const LevelSequence& code : enumerate_codes(n, h)) {
        best = std::max(best, level_counts(code).deepest());
    }
    return best;
}

Index a_max(Index n) {
    if (n < 2) {
        invalid("a_max needs n >= 2");
    }
    return max_deepest_pairs(n, ceil_log2(n));
}

Level b_seq_height(Index n) {
    if (n == 0) {
        invalid("b_seq needs n >= 1");
    }
    Level h = 1;
    while (n + h > (Index{1} << h)) {
        ++h;
    }
    return h;
}

Index b_seq(Index n) {
    const Level h = b_seq_height(n);
    return max_deepest_pairs(n + h, h);
}

Index max_ones_partition(Index n, Level h) {
    return 2 * max_deepest_pairs(n, h);
}

namespace {

// Partitions of `remaining` into `parts` powers of two, each <= cap.
void best_ones(Index remaining, Index parts, Index cap, Index ones, Index& best, bool& found) {
    if (parts == 0) {
        if (remaining == 0) {
            found = true;
            best = std::max(best, ones);
        }
        return;
    }
    for (Index part = cap; part >= 1; part /= 2) {
        if (part > remaining) {
            continue;
        }
        if (remaining - part < parts - 1) {
            continue;  // the rest cannot be covered by parts >= 1
        }
        best_ones(remaining - part, parts - 1, part, ones + (part == 1 ? 1 : 0), best, found);
    }
}

}  // namespace

Index max_ones_partition_oracle(Index n, Level h) {
    if (h > 6) {
        invalid("partition oracle needs 2^h <= 64");
    }
    const Index total = Index{1} << h;
    Index best = 0;
    bool found = false;
    best_ones(total, n, total, 0, best, found);
    return found ? best : 0;
}

}  // namespace metafib
