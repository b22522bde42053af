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

#include <sstream>

#include "metafib/bfile.hpp"

using namespace metafib;

namespace {

std::vector<BFileRecord> parse(const std::string& text) {
    std::istringstream in(text);
    return parse_bfile(in);
}

}  // namespace

TEST_SUITE("bfile") {

TEST_CASE("parse") {
    const auto records = parse("# A000001\n\n1 1\n2 2\n3 -4\n");
    REQUIRE(records.size() == 3);
    CHECK(records[2] == BFileRecord{3, -4});
    CHECK(parse("").empty());
    CHECK(parse("# only comments\n").empty());
}

TEST_CASE("malformed lines report their line number") {
    auto line_of = [](const std::string& text) {
        try {
            parse(text);
        } catch (const BFileError& e) {
            return e.line();
        }
        return std::size_t{0};
    };
    CHECK(line_of("1 1\n2\n") == 2);
    CHECK(line_of("1  1\n") == 1);
    CHECK(line_of("1\t1\n") == 1);
    CHECK(line_of("1 x\n") == 1);
    CHECK(line_of("1 1\n3 1\n2 1\n") == 3);
    CHECK(line_of("1 1\n1 1\n") == 2);
    CHECK(line_of("1 1 1\n") == 1);
}

TEST_CASE("write and read back") {
    const std::vector<BFileRecord> records{{0, 1}, {1, 1}, {5, 8}};
    std::ostringstream out;
    write_bfile(out, records);
    CHECK(out.str() == "0 1\n1 1\n5 8\n");
    CHECK(parse(out.str()) == records);
}

TEST_CASE("sequence kinds") {
    for (const auto kind : {SequenceKind::a, SequenceKind::d, SequenceKind::p, SequenceKind::ruler}) {
        CHECK(parse_sequence_kind(to_string(kind)) == kind);
    }
    CHECK_FALSE(parse_sequence_kind("q"));
}

TEST_CASE("roles") {
    std::istringstream in("# id\twhich\ts\tindex_shift\tvalue_shift\nA046699\ta\t0\t-1\t0\nA005187\tp\t0\t1\t-1\n");
    const auto roles = parse_roles(in);
    REQUIRE(roles.size() == 2);
    const OeisRole* role = find_role(roles, "A005187");
    REQUIRE(role != nullptr);
    CHECK(role->kind == SequenceKind::p);
    CHECK(role->index_shift == 1);
    CHECK(role->value_shift == -1);
    CHECK(find_role(roles, "A000000") == nullptr);
    std::istringstream bad("A1\ta\t0\t0\n");
    CHECK_THROWS(parse_roles(bad));
    std::istringstream negative("A1\ta\t-1\t0\t0\n");
    CHECK_THROWS(parse_roles(negative));
}

TEST_CASE("local values and domains") {
    CHECK(local_value(SequenceKind::a, Shift(0), 0) == 1);
    CHECK_FALSE(local_value(SequenceKind::d, Shift(0), 0));
    CHECK_FALSE(local_value(SequenceKind::p, Shift(0), 0));
    CHECK_FALSE(local_value(SequenceKind::a, Shift(0), -1));
    CHECK(local_value(SequenceKind::ruler, Shift(0), 12) == 3);
    CHECK(local_value(SequenceKind::p, Shift(2), 4) == 9);
}

TEST_CASE("compare") {
    OeisRole role{"A046699", SequenceKind::a, 0, -1, 0};
    // A046699 has offset 1: 1, 1, 2, 2, 3, 4, ...
    const std::vector<BFileRecord> good{{1, 1}, {2, 1}, {3, 2}, {4, 2}, {5, 3}, {6, 4}};
    const auto ok = compare_bfile(good, role);
    CHECK(ok.compared == 6);
    CHECK_FALSE(ok.first_mismatch);
    std::vector<BFileRecord> broken = good;
    broken[4].value = 7;
    const auto bad = compare_bfile(broken, role);
    REQUIRE(bad.first_mismatch);
    CHECK(bad.first_mismatch->index == 5);
    CHECK(bad.expected_at_mismatch == 3);
    // indices mapping outside the domain are skipped
    OeisRole d_role{"x", SequenceKind::d, 0, 0, 0};
    CHECK(compare_bfile(std::vector<BFileRecord>{{0, 9}, {1, 1}}, d_role).compared == 1);
}

}  // TEST_SUITE
