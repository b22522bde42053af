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

#include "metafib/tree_model.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "metafib/forest.hpp"

namespace metafib {

namespace {

// Walks down a complete binary tree of the given height (number of levels)
// to the node with preorder position `offset`.
void descend(NodeLocus& locus, unsigned height, Index offset) {
    Index base = 1;  // preorder position of the current root
    unsigned depth = 0;
    Index parent = 0;
    while (offset != 1) {
        const Index half = (Index{1} << (height - 1)) - 1;  // size of each child subtree
        parent = base;
        if (offset - 1 <= half) {
            base += 1;
            offset -= 1;
        } else {
            base += 1 + half;
            offset -= 1 + half;
        }
        --height;
        ++depth;
    }
    locus.depth_in_subtree = depth;
    locus.parent_offset = parent;
    locus.is_leaf = height == 1;
}

}  // namespace

NodeLocus locate(Shift s, Index n) {
    const ForestBlock block = forest_block(s, n);
    NodeLocus locus;
    locus.index = n;
    locus.subtree = block.h;
    locus.offset = n - block.first + 1;
    switch (block.kind) {
        case BlockKind::leading_leaf:
            locus.is_leaf = true;
            break;
        case BlockKind::super_node:
            locus.kind = NodeKind::super_node;
            break;
        case BlockKind::subtree:
            descend(locus, block.h, locus.offset);
            break;
    }
    return locus;
}

bool is_leaf_oracle(Shift s, Index n) { return locate(s, n).is_leaf; }

Index leaves_in_prefix(Shift s, Index n) {
    Index count = 0;
    for (Index m = 1; m <= n; ++m) {
        count += is_leaf_oracle(s, m) ? 1 : 0;
    }
    return count;
}

std::vector<Index> leaf_prefix_counts(Shift s, Index n) {
    std::vector<Index> counts(n + 1, 0);
    for (Index m = 1; m <= n; ++m) {
        counts[m] = counts[m - 1] + (is_leaf_oracle(s, m) ? 1 : 0);
    }
    return counts;
}

std::string render(Shift s, Index n, std::size_t max_width, Index cap) {
    if (n == 0) {
        throw std::invalid_argument("render needs at least one node");
    }
    if (n > cap) {
        throw std::invalid_argument("render: n = " + std::to_string(n) + " exceeds cap " +
                                    std::to_string(cap));
    }
    std::ostringstream out;
    auto emit = [&](std::string line) {
        if (line.size() > max_width) {
            line.resize(max_width);
        }
        out << line << '\n';
    };

    emit("F_" + std::to_string(s.value()) + ", first " + std::to_string(n) + " nodes");
    Index m = 1;
    while (m <= n) {
        const NodeLocus locus = locate(s, m);
        if (locus.kind == NodeKind::super_node) {
            // Collapse the s labels of one super-node into a single line.
            const Index last = std::min(n, m + s.value() - locus.offset);
            std::string line = "[super " + std::to_string(m);
            if (last != m) {
                line += ".." + std::to_string(last);
            }
            line += "] before subtree " + std::to_string(locus.subtree);
            emit(std::move(line));
            m = last + 1;
            continue;
        }
        std::string line;
        if (locus.offset == 1) {
            line = "subtree " + std::to_string(locus.subtree) + ": ";
        } else {
            line.assign(10 + 2 * static_cast<std::size_t>(locus.depth_in_subtree), ' ');
        }
        line += std::to_string(m);
        if (locus.is_leaf) {
            line += " *";
        }
        emit(std::move(line));
        ++m;
    }
    return out.str();
}

}  // namespace metafib
