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

#include "metafib/sequences.hpp"

namespace metafib {

// Preorder label layout of F_s. Label 1 is the leading size-1 tree; after
// that, for each h >= 1 come the s labels of one super-node followed by the
// 2^h - 1 labels of the complete subtree h.
//
//   super-node before subtree h:  2^h + (s-1)h - s + 1 .. 2^h + (s-1)h
//   subtree h:                    2^h + (s-1)h + 1     .. 2^{h+1} + (s-1)h - 1

enum class BlockKind { leading_leaf, super_node, subtree };

struct ForestBlock {
    BlockKind kind;
    unsigned h;   // subtree index; for super-nodes the subtree they precede
    Index first;  // first label in the block
    Index last;   // last label in the block
};

Index subtree_first_label(Shift s, unsigned h);
Index subtree_last_label(Shift s, unsigned h);
Index super_node_first_label(Shift s, unsigned h);

/// Block containing label n >= 1.
ForestBlock forest_block(Shift s, Index n);

}  // namespace metafib
