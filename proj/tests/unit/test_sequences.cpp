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

#include <random>
#include <stdexcept>

#include "metafib/forest.hpp"
#include "metafib/sequences.hpp"
#include "table1.hpp"

using namespace metafib;

TEST_SUITE("sequences") {

TEST_CASE("table rows for s = 0, 1, 2") {
    for (std::uint32_t s = 0; s < 3; ++s) {
        for (Index n = 1; n <= 20; ++n) {
            CAPTURE(s);
            CAPTURE(n);
            CHECK(a(Shift(s), n) == testdata::kA[s][n - 1]);
            CHECK(d(Shift(s), n) == testdata::kD[s][n - 1]);
            CHECK(p(Shift(s), n) == testdata::kP[s][n - 1]);
        }
    }
}

TEST_CASE("a examples") {
    CHECK(a(Shift(0), 5) == 4);
    CHECK(a(Shift(2), 8) == 3);
    CHECK(a(Shift(7), 3) == 1);
    CHECK(a(Shift(7), 0) == 1);
    CHECK(a(Shift(7), 9) == 2);
    CHECK(a(Shift(3), 10) == 3);
}

TEST_CASE("d examples") {
    CHECK(d(Shift(1), 3) == 1);
    CHECK(d(Shift(2), 13) == 0);
    CHECK(d(Shift(0), 1) == 1);
    CHECK_THROWS_AS(d(Shift(0), 0), std::invalid_argument);
}

TEST_CASE("p examples") {
    CHECK(p(Shift(2), 4) == 9);
    CHECK(p(Shift(0), 17) == 32);
    CHECK(p(Shift(5), 1) == 1);
    CHECK(p_by_differences(Shift(2), 4) == 9);
    CHECK(p_by_differences(Shift(0), 17) == 32);
    CHECK_THROWS_AS(p(Shift(0), 0), std::invalid_argument);
}

TEST_CASE("ruler") {
    CHECK(ruler(1) == 1);
    CHECK(ruler(8) == 4);
    CHECK(ruler(12) == 3);
    CHECK(ruler(96) == 6);
    // r_{2^k} = k + 1 and r_{2^k + i} = r_i
    for (unsigned k = 0; k < 20; ++k) {
        CHECK(ruler(Index{1} << k) == k + 1);
        for (Index i = 1; i < (Index{1} << k) && i < 200; ++i) {
            CHECK(ruler((Index{1} << k) + i) == ruler(i));
        }
    }
}

TEST_CASE("power of two and floor log") {
    CHECK(is_power_of_two(1));
    CHECK(is_power_of_two(64));
    CHECK_FALSE(is_power_of_two(0));
    CHECK_FALSE(is_power_of_two(12));
    CHECK(floor_log2(1) == 0);
    CHECK(floor_log2(7) == 2);
    CHECK(floor_log2(8) == 3);
}

TEST_CASE("fast evaluator examples") {
    CHECK(a0_fast(7) == 4);
    CHECK(a0_fast(0) == 1);
    CHECK(a0_fast(20) == 12);
    CHECK(a_via_a0(Shift(2), 8) == 3);
    CHECK(a_via_a0(Shift(2), 5) == 2);
    CHECK(a_via_a0(Shift(3), 10) == 3);
    CHECK(a1_fast(6) == 3);
    CHECK(a1_fast(1) == 1);
    CHECK(a1_fast(16) == 8);
    CHECK(a_by_descent(Shift(2), 9) == 4);
    CHECK(a_by_descent(Shift(2), 7) == 2);
    CHECK(a_by_descent(Shift(0), 19) == 11);
}

TEST_CASE("property: increments, inverse and gaps on random points") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<std::uint32_t> shift(0, 6);
    std::uniform_int_distribution<Index> index(2, 20000);
    for (int trial = 0; trial < 2000; ++trial) {
        const Shift s(shift(rng));
        const Index n = index(rng);
        CAPTURE(s.value());
        CAPTURE(n);
        const Index step = a(s, n + 1) - a(s, n);
        CHECK(step <= 1);
        CHECK(a(s, p(s, n)) == n);
        CHECK(a(s, p(s, n) - 1) == n - 1);
        CHECK(p(s, n + 1) - p(s, n) == ruler(n) + (is_power_of_two(n) ? s.value() : 0));
        CHECK(a_via_a0(s, n) == a(s, n));
        CHECK(a_by_descent(s, n) == a(s, n));
    }
}

TEST_CASE("property: a counts the ones of d") {
    for (std::uint32_t s = 0; s <= 6; ++s) {
        Index ones = 0;
        for (Index n = 1; n <= 5000; ++n) {
            ones += d(Shift(s), n);
            REQUIRE(ones == a(Shift(s), n));
        }
    }
}

TEST_CASE("property: fast evaluators agree with the recurrence") {
    for (Index n = 0; n <= 20000; ++n) {
        REQUIRE(a0_fast(n) == a(Shift(0), n));
    }
    for (Index n = 1; n <= 20000; ++n) {
        REQUIRE(a1_fast(n) == a(Shift(1), n));
    }
}

TEST_CASE("a_0 doubling identity") {
    for (unsigned h = 1; h <= 14; ++h) {
        const Index half = Index{1} << (h - 1);
        for (Index k = 1; k < (Index{1} << h); ++k) {
            REQUIRE(a(Shift(0), (Index{1} << h) - 1 + k) == half + a(Shift(0), k));
        }
        // k = 0 holds with the prefix-sum value a_0(0) = 0, not the base value 1.
        CHECK(a(Shift(0), (Index{1} << h) - 1) == half);
    }
    CHECK(a(Shift(0), 3) != 2 + a(Shift(0), 0));
}

TEST_CASE("SequenceTable") {
    SequenceTable t(Shift(3));
    CHECK(t.size() == 6);
    for (Index n = 0; n <= 4; ++n) {
        CHECK(t.a(n) == 1);
    }
    CHECK(t.a(5) == 2);
    t.extend_to(100);
    CHECK(t.size() == 101);
    const auto values = t.a_values();
    CHECK(values[100] == a(Shift(3), 100));
    t.extend_until_value(40);
    CHECK(t.p(40) == p(Shift(3), 40));
    CHECK(t.d(1) == 1);
    for (Index n = 2; n <= 100; ++n) {
        CHECK(t.d(n) == t.a(n) - t.a(n - 1));
    }
    // growth never rewrites earlier values
    const Index before = t.a(50);
    t.extend_to(5000);
    CHECK(t.a(50) == before);
}

TEST_CASE("generic recurrence") {
    SUBCASE("shifted family reproduces a_s") {
        for (std::uint32_t s = 0; s <= 4; ++s) {
            GenericMetaFib g(shifted_family_spec(Shift(s)));
            for (Index n = 0; n <= 3000; ++n) {
                REQUIRE(g(n) == a(Shift(s), n));
            }
            CHECK_FALSE(g.death_index());
        }
    }
    SUBCASE("alpha = 1, beta = 2 from [1, 1] dies at n = 2") {
        GenericMetaFib g({1, 2, {1, 1}});
        CHECK(g(1) == 1);
        CHECK_FALSE(g(2));
        CHECK(g.death_index() == 2);
        CHECK_FALSE(g(10));
        CHECK_FALSE(generic_metafib({1, 2, {1, 1}}, 2));
    }
    SUBCASE("alpha = 0, beta = 1 from [1, 1] follows a_0") {
        CHECK(generic_metafib({0, 1, {1, 1}}, 3) == a(Shift(0), 3));
        GenericMetaFib g({0, 1, {1, 1}});
        for (Index n = 1; n <= 500; ++n) {
            REQUIRE(g(n) == a(Shift(0), n));
        }
    }
    SUBCASE("bad seeds") {
        CHECK_THROWS_AS(GenericMetaFib({0, 1, {}}), std::invalid_argument);
        CHECK_THROWS_AS(GenericMetaFib({0, 1, {1, 0}}), std::invalid_argument);
    }
}

TEST_CASE("forest label layout") {
    // s = 2: 1 | 2 3 | 4 | 5 6 | 7 8 9 | 10 11 | 12..18
    CHECK(forest_block(Shift(2), 1).kind == BlockKind::leading_leaf);
    const ForestBlock super = forest_block(Shift(2), 5);
    CHECK(super.kind == BlockKind::super_node);
    CHECK(super.h == 2);
    CHECK(super.first == 5);
    CHECK(super.last == 6);
    const ForestBlock tree = forest_block(Shift(2), 8);
    CHECK(tree.kind == BlockKind::subtree);
    CHECK(tree.h == 2);
    CHECK(tree.first == 7);
    CHECK(tree.last == 9);
    CHECK(subtree_first_label(Shift(2), 3) == 12);
    CHECK(subtree_last_label(Shift(2), 3) == 18);
    CHECK(super_node_first_label(Shift(2), 3) == 10);
    // s = 0 has no super-nodes
    for (Index n = 2; n <= 1000; ++n) {
        CHECK(forest_block(Shift(0), n).kind == BlockKind::subtree);
    }
}

}  // TEST_SUITE
