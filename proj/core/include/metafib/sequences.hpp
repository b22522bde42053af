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

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace metafib {

using Index = std::uint64_t;

/// Delay parameter s of the forest F_s: the number of ordinary labels
/// carried by each super-node on the path joining the complete subtrees.
class Shift {
public:
    constexpr explicit Shift(std::uint32_t s) noexcept : value_(s) {}

    constexpr std::uint32_t value() const noexcept { return value_; }

    friend constexpr auto operator<=>(Shift, Shift) = default;

private:
    std::uint32_t value_;
};

/// Memoized prefix of a_s, d_s and p_s for one shift.
///
/// Values are appended on demand and never rewritten, so references to
/// earlier results stay valid across growth. The table is not synchronized;
/// use one per thread (the free functions below do exactly that).
///
/// Conventions: a(0) = 1 (the recurrence needs it), d is defined from 1 on
/// with d(1) = 1, and p(v) is the first index j >= 1 with a(j) = v.
class SequenceTable {
public:
    explicit SequenceTable(Shift s);

    Shift shift() const noexcept { return shift_; }

    Index a(Index n);
    std::uint8_t d(Index n);
    Index p(Index n);

    /// Grows a (and d, p with it) so that indices 0..n are populated.
    void extend_to(Index n);

    /// Grows until p(v) is known.
    void extend_until_value(Index v);

    std::span<const Index> a_values() const noexcept { return a_; }
    Index size() const noexcept { return a_.size(); }

private:
    Shift shift_;
    std::vector<Index> a_;
    std::vector<std::uint8_t> d_;  // d_[0] is unused
    std::vector<Index> p_;         // p_[0] is unused
};

/// a_s(n) from the self-referential recurrence with base values
/// a_s(0..s+1) = 1, a_s(s+2) = 2. Throws std::logic_error if a recurrence
/// argument ever leaves [0, n-1].
Index a(Shift s, Index n);

/// Leaf indicator of node n in F_s: 1 for n = 1, else a_s(n) - a_s(n-1).
std::uint8_t d(Shift s, Index n);

/// Smallest j with a_s(j) = n, read off the memo table.
Index p(Shift s, Index n);

/// p_s(n) accumulated from p_s(1) = 1 and the gaps ruler(k) + s*[k is a power of 2].
Index p_by_differences(Shift s, Index n);

/// One plus the exponent of the largest power of 2 dividing n (n >= 1).
Index ruler(Index n);

/// 1 counts as a power of two.
bool is_power_of_two(Index n) noexcept;

/// floor(log2 n) for n >= 1.
unsigned floor_log2(Index n);

/// a_0(n) in O(log n) by peeling n = 2^h - 1 + k, 0 <= k < 2^h.
Index a0_fast(Index n);

/// a_s(n) located through the subtree/super-node label ranges of F_s and
/// the shift-free values of a_0.
Index a_via_a0(Shift s, Index n);

/// a_1(n) = a_0(n - floor(log2 n)).
Index a1_fast(Index n);

/// a_s(n) by descending from subtree h into the matching subtree one level
/// down (right half: 2^{h-1} leaves skipped, left half: 2^{h-2}).
Index a_by_descent(Shift s, Index n);

/// Parameters of a(n) = a(n - alpha - a(n-1)) + a(n - beta - a(n-2)).
struct GenericMetaFibSpec {
    std::int64_t alpha = 0;
    std::int64_t beta = 1;
    std::vector<Index> initial_values;
};

/// Memoized evaluator of a general two-term meta-Fibonacci recurrence.
///
/// Indices below initial_values.size() return the seeds. A recurrence
/// argument outside [0, n-1] means the sequence dies at n; every later
/// index is dead as well and evaluates to std::nullopt.
class GenericMetaFib {
public:
    /// Throws std::invalid_argument on empty seeds or a zero seed.
    explicit GenericMetaFib(GenericMetaFibSpec spec);

    std::optional<Index> operator()(Index n);

    /// Index where the sequence died, if it has been reached.
    std::optional<Index> death_index() const noexcept { return death_; }

    const GenericMetaFibSpec& spec() const noexcept { return spec_; }

private:
    GenericMetaFibSpec spec_;
    std::vector<Index> values_;
    std::optional<Index> death_;
};

std::optional<Index> generic_metafib(const GenericMetaFibSpec& spec, Index n);

/// Spec that reproduces a_s: alpha = s, beta = s + 1, seeds 1,...,1,2.
GenericMetaFibSpec shifted_family_spec(Shift s);

}  // namespace metafib
