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
#include <doctest.h>

#include <stdexcept>
#include <string>

#include "metafib/sequences.hpp"
#include "metafib/tree_model.hpp"

using namespace metafib;

TEST_SUITE("tree_model") {

TEST_CASE("locate examples") {
    const NodeLocus root = locate(Shift(2), 7);
    CHECK(root.kind == NodeKind::subtree_node);
    CHECK(root.subtree == 2);
    CHECK(root.offset == 1);
    CHECK(root.depth_in_subtree == 0);
    CHECK_FALSE(root.is_leaf);

    const NodeLocus super = locate(Shift(2), 5);
    CHECK(super.kind == NodeKind::super_node);
    CHECK(super.subtree == 2);
    CHECK_FALSE(super.is_leaf);

    const NodeLocus first = locate(Shift(0), 1);
    CHECK(first.kind == NodeKind::subtree_node);
    CHECK(first.subtree == 0);
    CHECK(first.offset == 1);
    CHECK(first.is_leaf);
}

TEST_CASE("locate decodes preorder inside a subtree") {
    // s = 0, subtree 3 occupies labels 6..12: root 6, left 7 (8, 9), right 10 (11, 12).
    const Index expected_parent[] = {0, 1, 2, 2, 1, 5, 5};
    const unsigned expected_depth[] = {0, 1, 2, 2, 1, 2, 2};
    for (Index k = 0; k < 7; ++k) {
        const NodeLocus locus = locate(Shift(0), 6 + k);
        CAPTURE(k);
        CHECK(locus.subtree == 3);
        CHECK(locus.offset == k + 1);
        CHECK(locus.parent_offset == expected_parent[k]);
        CHECK(locus.depth_in_subtree == expected_depth[k]);
        CHECK(locus.is_leaf == (expected_depth[k] == 2));
    }
}

TEST_CASE("is_leaf_oracle examples") {
    CHECK(is_leaf_oracle(Shift(1), 6));
    CHECK_FALSE(is_leaf_oracle(Shift(2), 5));
    CHECK_FALSE(is_leaf_oracle(Shift(0), 3));
}

TEST_CASE("leaves_in_prefix examples") {
    CHECK(leaves_in_prefix(Shift(0), 5) == 4);
    CHECK(leaves_in_prefix(Shift(2), 20) == 8);
    CHECK(leaves_in_prefix(Shift(3), 1) == 1);
    const auto counts = leaf_prefix_counts(Shift(1), 30);
    REQUIRE(counts.size() == 31);
    CHECK(counts[0] == 0);
    for (Index n = 1; n <= 30; ++n) {
        CHECK(counts[n] == leaves_in_prefix(Shift(1), n));
    }
}

TEST_CASE("property: locus invariants") {
    for (std::uint32_t s = 0; s <= 6; ++s) {
        for (Index n = 1; n <= 3000; ++n) {
            const NodeLocus locus = locate(Shift(s), n);
            CAPTURE(s);
            CAPTURE(n);
            REQUIRE(locus.index == n);
            if (locus.kind == NodeKind::super_node) {
                REQUIRE_FALSE(locus.is_leaf);
                REQUIRE(locus.offset >= 1);
                REQUIRE(locus.offset <= s);
                continue;
            }
            const unsigned h = locus.subtree;
            const Index size = h == 0 ? 1 : (Index{1} << h) - 1;
            REQUIRE(locus.offset >= 1);
            REQUIRE(locus.offset <= size);
            REQUIRE(locus.is_leaf == (locus.depth_in_subtree + 1 == std::max(h, 1u)));
        }
    }
}

TEST_CASE("property: oracle equals d and a") {
    for (std::uint32_t s = 0; s <= 6; ++s) {
        const auto counts = leaf_prefix_counts(Shift(s), 20000);
        for (Index n = 1; n <= 20000; ++n) {
            REQUIRE(counts[n] == a(Shift(s), n));
            REQUIRE(is_leaf_oracle(Shift(s), n) == (d(Shift(s), n) == 1));
        }
    }
}

TEST_CASE("property: consecutive leaves are siblings") {
    for (std::uint32_t s = 0; s <= 3; ++s) {
        const Shift sh(s);
        for (Index n = s + 3; n <= 5000; ++n) {
            if (d(sh, n) == 1 && d(sh, n - 1) == 1) {
                const NodeLocus x = locate(sh, n - 1);
                const NodeLocus y = locate(sh, n);
                REQUIRE(x.subtree == y.subtree);
                REQUIRE(x.parent_offset == y.parent_offset);
                REQUIRE(y.offset == x.offset + 1);
            }
        }
    }
}

TEST_CASE("render") {
    const std::string one = render(Shift(0), 1, 80);
    CHECK(one.find("1 *") != std::string::npos);
    const std::string small = render(Shift(1), 3, 80);
    CHECK(small.find("[super 2]") != std::string::npos);
    CHECK(small.find("3 *") != std::string::npos);
    const std::string full = render(Shift(2), 9, 80);
    CHECK(full.find("subtree 2: 7") != std::string::npos);
    CHECK(full.find("8 *") != std::string::npos);
    CHECK(full.find("9 *") != std::string::npos);
    for (std::size_t pos = 0, next; (next = full.find('\n', pos)) != std::string::npos; pos = next + 1) {
        CHECK(next - pos <= 80);
    }
    CHECK(render(Shift(0), 127, 8).find("127") == std::string::npos);
    CHECK_THROWS_AS(render(Shift(0), 128, 80), std::invalid_argument);
    CHECK_THROWS_AS(render(Shift(0), 0, 80), std::invalid_argument);
    CHECK_NOTHROW(render(Shift(0), 200, 80, 200));
}

}  // TEST_SUITE
