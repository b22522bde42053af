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

#include <string>
#include <vector>

#include "metafib/sequences.hpp"

namespace metafib {

/// Positional part rule [1..s] + [s, 2+s-1] + [s, 4+s-1] + [s, 8+s-1] + ...
/// Position 0 allows {1, ..., s}; position i >= 1 allows {s, 2^i + s - 1}.
class CompositionSpec {
public:
    /// Throws std::invalid_argument for s = 0.
    explicit CompositionSpec(Shift s);

    Shift shift() const noexcept { return shift_; }

    /// Allowed parts at position i, ascending.
    std::vector<Index> part_choices(std::size_t position) const;

    bool allows(std::size_t position, Index part) const;

private:
    Shift shift_;
};

struct Composition {
    std::vector<Index> parts;

    Index sum() const;

    /// "n = x0+x1+..."
    std::string to_string() const;

    friend bool operator==(const Composition&, const Composition&) = default;
};

/// True when every part is allowed at its position.
bool admits(const CompositionSpec& spec, const Composition& c);

/// Number of compositions of n under the rule, by dynamic programming over
/// (position, running sum).
Index count_compositions(Shift s, Index n);

/// Counts for every target 0..n_max from a single DP pass; element 0 is 0.
std::vector<Index> count_compositions_upto(Shift s, Index n_max);

inline constexpr Index kMaxEnumerationTarget = 64;

/// All compositions of n in lexicographic order of their part lists.
/// Throws std::invalid_argument for s = 0 or n > kMaxEnumerationTarget.
std::vector<Composition> enumerate_compositions(Shift s, Index n);

}  // namespace metafib
