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

#include "metafib/sequences.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

#include "metafib/forest.hpp"

namespace metafib {

namespace {

using SignedIndex = std::int64_t;

SequenceTable& thread_table(Shift s) {
    thread_local std::unordered_map<std::uint32_t, SequenceTable> tables;
    auto it = tables.find(s.value());
    if (it == tables.end()) {
        it = tables.emplace(s.value(), SequenceTable(s)).first;
    }
    return it->second;
}

[[noreturn]] void recurrence_broken(Shift s, Index n, SignedIndex arg) {
    throw std::logic_error("a_" + std::to_string(s.value()) + "(" + std::to_string(n) +
                           "): recurrence argument " + std::to_string(arg) +
                           " outside [0, n-1]");
}

}  // namespace

// ---------------------------------------------------------------------------
// Forest layout

Index subtree_first_label(Shift s, unsigned h) {
    const auto hs = static_cast<SignedIndex>(h);
    const auto ss = static_cast<SignedIndex>(s.value());
    return static_cast<Index>((SignedIndex{1} << h) + (ss - 1) * hs + 1);
}

Index subtree_last_label(Shift s, unsigned h) {
    return subtree_first_label(s, h) + (Index{1} << h) - 2;
}

Index super_node_first_label(Shift s, unsigned h) {
    return subtree_first_label(s, h) - s.value();
}

ForestBlock forest_block(Shift s, Index n) {
    if (n == 0) {
        throw std::invalid_argument("forest labels start at 1");
    }
    if (n == 1) {
        return {BlockKind::leading_leaf, 0, 1, 1};
    }
    for (unsigned h = 1; h < 63; ++h) {
        const Index sub_first = subtree_first_label(s, h);
        if (n < sub_first) {
            // Labels before subtree h and after subtree h-1 are its super-node.
            return {BlockKind::super_node, h, super_node_first_label(s, h), sub_first - 1};
        }
        const Index sub_last = subtree_last_label(s, h);
        if (n <= sub_last) {
            return {BlockKind::subtree, h, sub_first, sub_last};
        }
    }
    throw std::out_of_range("label too large for the forest layout");
}

// ---------------------------------------------------------------------------
// SequenceTable

SequenceTable::SequenceTable(Shift s) : shift_(s) {
    const Index base = Index{s.value()} + 2;
    a_.assign(base + 1, 1);
    a_[base] = 2;
    d_.assign(base + 1, 0);
    d_[1] = 1;
    for (Index m = 2; m <= base; ++m) {
        d_[m] = static_cast<std::uint8_t>(a_[m] - a_[m - 1]);
    }
    p_ = {0, 1, base};
}

void SequenceTable::extend_to(Index n) {
    if (n < a_.size()) {
        return;
    }
    const auto shift = static_cast<SignedIndex>(shift_.value());
    for (Index m = a_.size(); m <= n; ++m) {
        const auto sm = static_cast<SignedIndex>(m);
        const SignedIndex i1 = sm - shift - static_cast<SignedIndex>(a_[m - 1]);
        const SignedIndex i2 = sm - shift - 1 - static_cast<SignedIndex>(a_[m - 2]);
        if (i1 < 0 || i1 >= sm) {
            recurrence_broken(shift_, m, i1);
        }
        if (i2 < 0 || i2 >= sm) {
            recurrence_broken(shift_, m, i2);
        }
        const Index value = a_[static_cast<Index>(i1)] + a_[static_cast<Index>(i2)];
        const Index prev = a_.back();
        if (value < prev || value - prev > 1) {
            throw std::logic_error("a_s increment outside {0,1} at n = " + std::to_string(m));
        }
        a_.push_back(value);
        d_.push_back(static_cast<std::uint8_t>(value - prev));
        if (value > prev) {
            p_.push_back(m);
        }
    }
}

void SequenceTable::extend_until_value(Index v) {
    while (p_.size() <= v) {
        extend_to(2 * a_.size());
    }
}

Index SequenceTable::a(Index n) {
    extend_to(n);
    return a_[n];
}

std::uint8_t SequenceTable::d(Index n) {
    if (n == 0) {
        throw std::invalid_argument("d_s(n) is defined for n >= 1");
    }
    extend_to(n);
    return d_[n];
}

Index SequenceTable::p(Index n) {
    if (n == 0) {
        throw std::invalid_argument("p_s(n) is defined for n >= 1");
    }
    extend_until_value(n);
    return p_[n];
}

// ---------------------------------------------------------------------------
// Free functions

Index a(Shift s, Index n) { return thread_table(s).a(n); }

std::uint8_t d(Shift s, Index n) { return thread_table(s).d(n); }

Index p(Shift s, Index n) { return thread_table(s).p(n); }

Index p_by_differences(Shift s, Index n) {
    if (n == 0) {
        throw std::invalid_argument("p_s(n) is defined for n >= 1");
    }
    Index value = 1;
    for (Index k = 1; k < n; ++k) {
        value += ruler(k) + (is_power_of_two(k) ? s.value() : 0);
    }
    return value;
}

Index ruler(Index n) {
    if (n == 0) {
        throw std::invalid_argument("ruler(n) is defined for n >= 1");
    }
    return static_cast<Index>(std::countr_zero(n)) + 1;
}

bool is_power_of_two(Index n) noexcept { return std::has_single_bit(n); }

unsigned floor_log2(Index n) {
    if (n == 0) {
        throw std::invalid_argument("floor_log2(0)");
    }
    return static_cast<unsigned>(std::bit_width(n)) - 1;
}

Index a0_fast(Index n) {
    if (n == 0) {
        return 1;
    }
    // Peeling uses the prefix-sum value 0 at k = 0.
    Index total = 0;
    while (n > 0) {
        const unsigned h = floor_log2(n + 1);
        total += Index{1} << (h - 1);
        n = n + 1 - (Index{1} << h);
    }
    return total;
}

Index a_via_a0(Shift s, Index n) {
    if (n == 0) {
        throw std::invalid_argument("a_via_a0 is defined for n >= 1");
    }
    const ForestBlock block = forest_block(s, n);
    switch (block.kind) {
        case BlockKind::leading_leaf:
            return 1;
        case BlockKind::super_node:
            return Index{1} << (block.h - 1);
        case BlockKind::subtree:
            break;
    }
    return a0_fast(n - Index{s.value()} * block.h);
}

Index a1_fast(Index n) {
    if (n == 0) {
        throw std::invalid_argument("a1_fast is defined for n >= 1");
    }
    return a0_fast(n - floor_log2(n));
}

Index a_by_descent(Shift s, Index n) {
    const Index shift = s.value();
    if (n <= shift + 1) {
        return 1;
    }
    if (n == shift + 2) {
        return 2;
    }
    // n > s + 2 lies in a super-node or subtree with h >= 2.
    const ForestBlock block = forest_block(s, n);
    const unsigned h = block.h;
    const Index half = Index{1} << (h - 1);
    if (block.kind == BlockKind::super_node || n == block.first) {
        return half;
    }
    const Index right_root = block.first + half;
    if (n >= right_root) {
        return half + a_by_descent(s, n - (Index{1} << h) - shift + 1);
    }
    return (half >> 1) + a_by_descent(s, n - half - shift);
}

// ---------------------------------------------------------------------------
// Generic recurrence

GenericMetaFib::GenericMetaFib(GenericMetaFibSpec spec) : spec_(std::move(spec)) {
    if (spec_.initial_values.empty()) {
        throw std::invalid_argument("generic meta-Fibonacci needs at least one seed");
    }
    for (Index v : spec_.initial_values) {
        if (v == 0) {
            throw std::invalid_argument("generic meta-Fibonacci seeds must be positive");
        }
    }
    values_ = spec_.initial_values;
}

std::optional<Index> GenericMetaFib::operator()(Index n) {
    if (n < values_.size()) {
        return values_[n];
    }
    if (death_ && n >= *death_) {
        return std::nullopt;
    }
    for (Index m = values_.size(); m <= n; ++m) {
        if (m < 2) {
            // Seeds cover index 0 but not 1: a(1) would need a(-1).
            death_ = m;
            return std::nullopt;
        }
        const auto sm = static_cast<SignedIndex>(m);
        const SignedIndex i1 = sm - spec_.alpha - static_cast<SignedIndex>(values_[m - 1]);
        const SignedIndex i2 = sm - spec_.beta - static_cast<SignedIndex>(values_[m - 2]);
        if (i1 < 0 || i1 >= sm || i2 < 0 || i2 >= sm) {
            death_ = m;
            return std::nullopt;
        }
        values_.push_back(values_[static_cast<Index>(i1)] + values_[static_cast<Index>(i2)]);
    }
    return values_[n];
}

std::optional<Index> generic_metafib(const GenericMetaFibSpec& spec, Index n) {
    GenericMetaFib seq(spec);
    return seq(n);
}

GenericMetaFibSpec shifted_family_spec(Shift s) {
    GenericMetaFibSpec spec;
    spec.alpha = s.value();
    spec.beta = static_cast<std::int64_t>(s.value()) + 1;
    spec.initial_values.assign(Index{s.value()} + 2, 1);
    spec.initial_values.push_back(2);
    return spec;
}

}  // namespace metafib
