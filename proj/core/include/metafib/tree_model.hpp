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
#include <string>
#include <vector>

#include "metafib/sequences.hpp"

namespace metafib {

// Structural model of the infinite tree F_s, used as a brute-force oracle
// for d_s and a_s. Nothing here consults the recurrence.

enum class NodeKind { subtree_node, super_node };

struct NodeLocus {
    Index index = 0;
    NodeKind kind = NodeKind::subtree_node;
    // Subtree holding the node, or for a super-node the subtree it precedes.
    // Subtree 0 is the leading single leaf; subtree h >= 1 has 2^h - 1 nodes.
    unsigned subtree = 0;
    // Preorder position inside the subtree (1 = root). For a super-node,
    // position among its s labels.
    Index offset = 1;
    // Preorder position of the parent inside the same subtree; 0 for roots
    // and super-nodes.
    Index parent_offset = 0;
    unsigned depth_in_subtree = 0;
    bool is_leaf = false;
};

NodeLocus locate(Shift s, Index n);

bool is_leaf_oracle(Shift s, Index n);

/// Number of leaves among labels 1..n of F_s. All subtree leaves share the
/// bottom level, so this is the bottom-level count of T_s(n).
Index leaves_in_prefix(Shift s, Index n);

/// leaves_in_prefix for every prefix 0..n in one scan; element 0 is 0.
std::vector<Index> leaf_prefix_counts(Shift s, Index n);

inline constexpr Index kDefaultRenderCap = 127;

/// Outline drawing of T_s(n): one line per label, subtree nodes indented by
/// depth, leaves starred, super-nodes marked. Lines are clipped to
/// max_width. Throws std::invalid_argument when n exceeds cap.
std::string render(Shift s, Index n, std::size_t max_width, Index cap = kDefaultRenderCap);

}  // namespace metafib
