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

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "metafib/sequences.hpp"

namespace metafib {

// OEIS b-file support: optional '#' comment lines, then "n value" data lines
// separated by a single space, indices strictly increasing, LF endings.

struct BFileRecord {
    std::int64_t index = 0;
    std::int64_t value = 0;

    friend bool operator==(const BFileRecord&, const BFileRecord&) = default;
};

class BFileError : public std::runtime_error {
public:
    BFileError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Throws BFileError on a malformed line or non-increasing indices. Blank
/// lines are skipped.
std::vector<BFileRecord> parse_bfile(std::istream& in);

void write_bfile(std::ostream& out, std::span<const BFileRecord> records);

/// Which local sequence an OEIS entry corresponds to.
enum class SequenceKind { a, d, p, ruler };

std::optional<SequenceKind> parse_sequence_kind(const std::string& name);
std::string to_string(SequenceKind kind);

/// One row of the offset table: b-file value at n equals
/// local(kind, shift, n + index_shift) + value_shift.
struct OeisRole {
    std::string id;
    SequenceKind kind = SequenceKind::a;
    std::uint32_t shift = 0;
    std::int64_t index_shift = 0;
    std::int64_t value_shift = 0;
};

/// Tab-separated "id which s index_shift value_shift" rows; '#' lines are
/// comments. Throws std::runtime_error on a malformed row.
std::vector<OeisRole> parse_roles(std::istream& in);

const OeisRole* find_role(std::span<const OeisRole> roles, const std::string& id);

/// Local value of the sequence for an index already shifted into local
/// convention; nullopt when the index is outside the sequence's domain
/// (n < 0, or n = 0 for d, p and ruler).
std::optional<std::int64_t> local_value(SequenceKind kind, Shift s, std::int64_t n);

struct BFileComparison {
    std::size_t compared = 0;
    std::optional<BFileRecord> first_mismatch;  // b-file record that disagreed
    std::int64_t expected_at_mismatch = 0;      // local value there
};

/// Compares every b-file record whose index maps into the local domain.
BFileComparison compare_bfile(std::span<const BFileRecord> records, const OeisRole& role);

}  // namespace metafib
