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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "metafib/sequences.hpp"

namespace metafib {

/// Finite binary word, indexed from 1 so that bit i lines up with z^i in
/// the word's generating function.
class BitWord {
public:
    BitWord() = default;

    /// Parses a string of '0'/'1'; throws std::invalid_argument otherwise.
    static BitWord from_string(std::string_view bits);

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }

    /// Bit i for 1 <= i <= size().
    std::uint8_t bit(std::size_t i) const;

    void push_back(std::uint8_t b);
    void append(const BitWord& other);
    void append_zeros(std::size_t count);
    void truncate(std::size_t length);

    BitWord reversed() const;
    BitWord prefix(std::size_t length) const;
    bool is_prefix_of(const BitWord& other) const;
    std::size_t count_ones() const;

    /// 1-based positions of the 1 bits, ascending.
    std::vector<Index> one_positions() const;

    std::string to_string() const;

    friend bool operator==(const BitWord&, const BitWord&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

inline constexpr unsigned kMaxWordLevel = 25;
inline constexpr std::size_t kMaxPrefixLength = std::size_t{1} << 22;

/// D_0 = 1, D_{n+1} = 0 D_n D_n; |D_n| = 2^{n+1} - 1.
BitWord word_D(unsigned n);

/// E_0 = 1, E_{n+1} = E_n E_n 0.
BitWord word_E(unsigned n);

/// First `length` bits of D_0 0^s D_0 0^s D_1 0^s D_2 0^s ...
BitWord dword_prefix(Shift s, std::size_t length);

/// 1 0^{s_1-1} 1 0^{s_2-1} ... 1 0^{s_terms-1} with
/// s_j = ruler(j) + s*[j is a power of 2].
BitWord ruler_factorization(Shift s, std::size_t terms);

/// Prefix of the fixed point of 0 -> 0, 1 -> 110 grown from "1".
BitWord morphism_fixed_point(std::size_t length);

}  // namespace metafib
