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

#include "metafib/compositions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace metafib {

CompositionSpec::CompositionSpec(Shift s) : shift_(s) {
    if (s.value() == 0) {
        throw std::invalid_argument("composition rule is only defined for s >= 1");
    }
}

std::vector<Index> CompositionSpec::part_choices(std::size_t position) const {
    const Index s = shift_.value();
    if (position == 0) {
        std::vector<Index> parts(s);
        std::iota(parts.begin(), parts.end(), Index{1});
        return parts;
    }
    if (position >= 63) {
        return {s};  // 2^i + s - 1 no longer fits; only reachable for absurd targets
    }
    return {s, (Index{1} << position) + s - 1};
}

bool CompositionSpec::allows(std::size_t position, Index part) const {
    const auto choices = part_choices(position);
    return std::find(choices.begin(), choices.end(), part) != choices.end();
}

Index Composition::sum() const { return std::accumulate(parts.begin(), parts.end(), Index{0}); }

std::string Composition::to_string() const {
    std::string out = std::to_string(sum()) + " = ";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) {
            out += '+';
        }
        out += std::to_string(parts[i]);
    }
    return out;
}

bool admits(const CompositionSpec& spec, const Composition& c) {
    if (c.parts.empty()) {
        return false;
    }
    for (std::size_t i = 0; i < c.parts.size(); ++i) {
        if (!spec.allows(i, c.parts[i])) {
            return false;
        }
    }
    return true;
}

std::vector<Index> count_compositions_upto(Shift s, Index n_max) {
    const CompositionSpec spec(s);
    std::vector<Index> total(n_max + 1, 0);
    // ways[v]: compositions x_0..x_{i-1} with sum v, for the current i.
    std::vector<Index> ways(n_max + 1, 0);
    for (Index part : spec.part_choices(0)) {
        if (part <= n_max) {
            ways[part] += 1;
        }
    }
    // Every part at position >= 1 is at least s >= 1, so positions are bounded.
    for (std::size_t position = 1;; ++position) {
        bool any = false;
        for (Index v = 1; v <= n_max; ++v) {
            total[v] += ways[v];
            any = any || ways[v] != 0;
        }
        if (!any) {
            break;
        }
        std::vector<Index> next(n_max + 1, 0);
        for (Index part : spec.part_choices(position)) {
            for (Index v = 1; v + part <= n_max; ++v) {
                next[v + part] += ways[v];
            }
        }
        ways = std::move(next);
    }
    return total;
}

Index count_compositions(Shift s, Index n) {
    if (n == 0) {
        throw std::invalid_argument("count_compositions needs n >= 1");
    }
    return count_compositions_upto(s, n)[n];
}

namespace {

void enumerate_from(const CompositionSpec& spec, std::size_t position, Index remaining,
                    std::vector<Index>& parts, std::vector<Composition>& out) {
    if (remaining == 0) {
        out.push_back(Composition{parts});
        return;
    }
    for (Index part : spec.part_choices(position)) {
        if (part > remaining) {
            break;
        }
        parts.push_back(part);
        enumerate_from(spec, position + 1, remaining - part, parts, out);
        parts.pop_back();
    }
}

}  // namespace

std::vector<Composition> enumerate_compositions(Shift s, Index n) {
    const CompositionSpec spec(s);
    if (n == 0 || n > kMaxEnumerationTarget) {
        throw std::invalid_argument("enumerate_compositions needs 1 <= n <= " +
                                    std::to_string(kMaxEnumerationTarget));
    }
    std::vector<Composition> out;
    std::vector<Index> parts;
    enumerate_from(spec, 0, n, parts, out);
    return out;
}

}  // namespace metafib
