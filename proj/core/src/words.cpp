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

#include "metafib/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace metafib {

BitWord BitWord::from_string(std::string_view bits) {
    BitWord word;
    word.bits_.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("BitWord: unexpected character in bit string");
        }
        word.bits_.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return word;
}

std::uint8_t BitWord::bit(std::size_t i) const {
    if (i == 0 || i > bits_.size()) {
        throw std::out_of_range("BitWord index is 1-based and must be <= size()");
    }
    return bits_[i - 1];
}

void BitWord::push_back(std::uint8_t b) { bits_.push_back(b ? 1 : 0); }

void BitWord::append(const BitWord& other) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

void BitWord::append_zeros(std::size_t count) { bits_.insert(bits_.end(), count, 0); }

void BitWord::truncate(std::size_t length) {
    if (length < bits_.size()) {
        bits_.resize(length);
    }
}

BitWord BitWord::reversed() const {
    BitWord out;
    out.bits_.assign(bits_.rbegin(), bits_.rend());
    return out;
}

BitWord BitWord::prefix(std::size_t length) const {
    BitWord out;
    out.bits_.assign(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(
                                                        std::min(length, bits_.size())));
    return out;
}

bool BitWord::is_prefix_of(const BitWord& other) const {
    return bits_.size() <= other.bits_.size() &&
           std::equal(bits_.begin(), bits_.end(), other.bits_.begin());
}

std::size_t BitWord::count_ones() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::vector<Index> BitWord::one_positions() const {
    std::vector<Index> positions;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) {
            positions.push_back(i + 1);
        }
    }
    return positions;
}

std::string BitWord::to_string() const {
    std::string out(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        out[i] = bits_[i] ? '1' : '0';
    }
    return out;
}

namespace {

void check_level(unsigned n) {
    if (n > kMaxWordLevel) {
        throw std::invalid_argument("word level " + std::to_string(n) + " exceeds limit " +
                                    std::to_string(kMaxWordLevel));
    }
}

void check_length(std::size_t length) {
    if (length > kMaxPrefixLength) {
        throw std::invalid_argument("word length " + std::to_string(length) +
                                    " exceeds limit " + std::to_string(kMaxPrefixLength));
    }
}

BitWord next_D(const BitWord& d) {
    BitWord out;
    out.push_back(0);
    out.append(d);
    out.append(d);
    return out;
}

}  // namespace

BitWord word_D(unsigned n) {
    check_level(n);
    BitWord word = BitWord::from_string("1");
    for (unsigned i = 0; i < n; ++i) {
        word = next_D(word);
    }
    return word;
}

BitWord word_E(unsigned n) {
    check_level(n);
    BitWord word = BitWord::from_string("1");
    for (unsigned i = 0; i < n; ++i) {
        BitWord next = word;
        next.append(word);
        next.push_back(0);
        word = std::move(next);
    }
    return word;
}

BitWord dword_prefix(Shift s, std::size_t length) {
    check_length(length);
    BitWord out;
    BitWord block = BitWord::from_string("1");
    out.append(block);  // the leading D_0
    while (out.size() < length) {
        out.append_zeros(s.value());
        out.append(block);
        if (out.size() < length) {
            block = next_D(block);
        }
    }
    out.truncate(length);
    return out;
}

BitWord ruler_factorization(Shift s, std::size_t terms) {
    if (terms == 0) {
        throw std::invalid_argument("ruler_factorization needs at least one term");
    }
    BitWord out;
    for (std::size_t j = 1; j <= terms; ++j) {
        const Index gap = ruler(j) + (is_power_of_two(j) ? s.value() : 0);
        check_length(out.size() + gap);
        out.push_back(1);
        out.append_zeros(gap - 1);
    }
    return out;
}

BitWord morphism_fixed_point(std::size_t length) {
    check_length(length);
    BitWord word = BitWord::from_string("1");
    while (word.size() < length) {
        BitWord image;
        for (std::size_t i = 1; i <= word.size(); ++i) {
            if (word.bit(i)) {
                image.push_back(1);
                image.push_back(1);
            }
            image.push_back(0);
        }
        word = std::move(image);
    }
    word.truncate(length);
    return word;
}

}  // namespace metafib
