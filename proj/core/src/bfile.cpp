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

#include "metafib/bfile.hpp"

#include <charconv>
#include <sstream>

namespace metafib {

namespace {

bool parse_int(std::string_view text, std::int64_t& out) {
    if (text.empty()) {
        return false;
    }
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, '\t')) {
        fields.push_back(field);
    }
    return fields;
}

}  // namespace

std::vector<BFileRecord> parse_bfile(std::istream& in) {
    std::vector<BFileRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto space = line.find(' ');
        if (space == std::string::npos || line.find(' ', space + 1) != std::string::npos) {
            throw BFileError(line_no, "expected \"index value\" separated by one space");
        }
        BFileRecord record;
        if (!parse_int(std::string_view(line).substr(0, space), record.index) ||
            !parse_int(std::string_view(line).substr(space + 1), record.value)) {
            throw BFileError(line_no, "index and value must be integers");
        }
        if (!records.empty() && record.index <= records.back().index) {
            throw BFileError(line_no, "indices must be strictly increasing");
        }
        records.push_back(record);
    }
    return records;
}

void write_bfile(std::ostream& out, std::span<const BFileRecord> records) {
    for (const BFileRecord& r : records) {
        out << r.index << ' ' << r.value << '\n';
    }
}

std::optional<SequenceKind> parse_sequence_kind(const std::string& name) {
    if (name == "a") return SequenceKind::a;
    if (name == "d") return SequenceKind::d;
    if (name == "p") return SequenceKind::p;
    if (name == "ruler") return SequenceKind::ruler;
    return std::nullopt;
}

std::string to_string(SequenceKind kind) {
    switch (kind) {
        case SequenceKind::a: return "a";
        case SequenceKind::d: return "d";
        case SequenceKind::p: return "p";
        case SequenceKind::ruler: return "ruler";
    }
    return "?";
}

std::vector<OeisRole> parse_roles(std::istream& in) {
    std::vector<OeisRole> roles;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto fields = split_tabs(line);
        std::int64_t shift = 0;
        OeisRole role;
        const auto kind = fields.size() == 5 ? parse_sequence_kind(fields[1]) : std::nullopt;
        if (!kind || !parse_int(fields[2], shift) || shift < 0 ||
            !parse_int(fields[3], role.index_shift) || !parse_int(fields[4], role.value_shift)) {
            throw std::runtime_error("roles line " + std::to_string(line_no) +
                                     ": expected id, which, s, index_shift, value_shift");
        }
        role.id = fields[0];
        role.kind = *kind;
        role.shift = static_cast<std::uint32_t>(shift);
        roles.push_back(std::move(role));
    }
    return roles;
}

const OeisRole* find_role(std::span<const OeisRole> roles, const std::string& id) {
    for (const OeisRole& role : roles) {
        if (role.id == id) {
            return &role;
        }
    }
    return nullptr;
}

std::optional<std::int64_t> local_value(SequenceKind kind, Shift s, std::int64_t n) {
    if (n < 0 || (n == 0 && kind != SequenceKind::a)) {
        return std::nullopt;
    }
    const auto idx = static_cast<Index>(n);
    switch (kind) {
        case SequenceKind::a: return static_cast<std::int64_t>(a(s, idx));
        case SequenceKind::d: return static_cast<std::int64_t>(d(s, idx));
        case SequenceKind::p: return static_cast<std::int64_t>(p(s, idx));
        case SequenceKind::ruler: return static_cast<std::int64_t>(ruler(idx));
    }
    return std::nullopt;
}

BFileComparison compare_bfile(std::span<const BFileRecord> records, const OeisRole& role) {
    BFileComparison result;
    const Shift s(role.shift);
    for (const BFileRecord& r : records) {
        const auto local = local_value(role.kind, s, r.index + role.index_shift);
        if (!local) {
            continue;
        }
        ++result.compared;
        const std::int64_t expected = *local + role.value_shift;
        if (expected != r.value) {
            result.first_mismatch = r;
            result.expected_at_mismatch = expected;
            break;
        }
    }
    return result;
}

}  // namespace metafib
