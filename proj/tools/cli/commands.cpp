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

#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "metafib/bfile.hpp"
#include "metafib/codes.hpp"
#include "metafib/compositions.hpp"
#include "metafib/series.hpp"
#include "metafib/tree_model.hpp"
#include "metafib/words.hpp"

namespace metafib::cli {

namespace {

namespace fs = std::filesystem;

// Raised for argument combinations CLI11 cannot express.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { plain, tsv, bfile };

const std::map<std::string, Format> kFormats{
    {"plain", Format::plain}, {"tsv", Format::tsv}, {"bfile", Format::bfile}};

void emit(std::ostream& out, Format format, Index n, std::int64_t value) {
    switch (format) {
        case Format::plain: out << value << '\n'; break;
        case Format::tsv: out << n << '\t' << value << '\n'; break;
        case Format::bfile: out << n << ' ' << value << '\n'; break;
    }
}

void check_range(Index from, Index to, Index lowest) {
    if (from < lowest) {
        throw UsageError("--from must be at least " + std::to_string(lowest));
    }
    if (from > to) {
        throw UsageError("--from must not exceed --to");
    }
    if (to > kMaxIndex) {
        throw UsageError("--to exceeds the index guard " + std::to_string(kMaxIndex));
    }
}

// ---------------------------------------------------------------------------
// seq

struct SeqOptions {
    std::string which;
    std::uint32_t s = 0;
    Index from = 1;
    Index to = 20;
    Format format = Format::plain;
};

int cmd_seq(const SeqOptions& o, std::ostream& out) {
    check_range(o.from, o.to, 1);
    const Shift s(o.s);
    for (Index n = o.from; n <= o.to; ++n) {
        std::int64_t value = 0;
        if (o.which == "a") {
            value = static_cast<std::int64_t>(a(s, n));
        } else if (o.which == "d") {
            value = d(s, n);
        } else {
            value = static_cast<std::int64_t>(p(s, n));
        }
        emit(out, o.format, n, value);
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// gf

struct GfOptions {
    std::string which;
    std::uint32_t s = 0;
    std::size_t order = 20;
    std::optional<unsigned> depth;
    unsigned n = 0;
    Format format = Format::tsv;
};

unsigned smallest_exact_depth(std::size_t order) {
    unsigned depth = 1;
    while ((std::size_t{1} << depth) <= order) {
        ++depth;
    }
    return depth;
}

int cmd_gf(const GfOptions& o, std::ostream& out, std::ostream& err) {
    if (o.order > kMaxSeriesOrder) {
        throw UsageError("--order exceeds " + std::to_string(kMaxSeriesOrder));
    }
    if (o.format == Format::bfile) {
        throw UsageError("gf supports --format plain or tsv");
    }
    const Shift s(o.s);
    TruncatedSeries series(o.order);
    if (o.which == "ruler") {
        series = gf_ruler(o.order);
    } else if (o.which == "D") {
        series = gf_Ds_sum(s, o.order);
    } else if (o.which == "D-nested") {
        series = gf_Ds_nested(s, o.order, o.depth.value_or(smallest_exact_depth(o.order)));
    } else if (o.which == "Dn") {
        series = gf_Dn(o.n, o.order);
    } else if (o.which == "D0") {
        series = gf_D0(o.order);
    } else if (o.which == "A") {
        if (o.s == 0) {
            err << "note: product form of A_s needs s >= 1; using D_s(z)/(1-z)\n";
            series = gf_A_from_D(s, o.order);
        } else {
            series = gf_As(s, o.order);
        }
    } else if (o.which == "A-theorem") {
        if (o.s == 0) {
            throw UsageError("A-theorem needs --s >= 1 (use A-from-D for s = 0)");
        }
        series = gf_As(s, o.order);
    } else if (o.which == "A-from-D") {
        series = gf_A_from_D(s, o.order);
    } else {
        series = gf_Ps(s, o.order);
    }
    for (std::size_t k = 0; k <= series.order(); ++k) {
        if (o.format == Format::plain) {
            out << series[k] << '\n';
        } else {
            out << k << '\t' << series[k] << '\n';
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// codes

struct CodesOptions {
    Index n = 0;
    std::optional<Level> h;
    Index nmax = 8;
    bool header = false;
    std::optional<Index> from;  // 2 for amax, 1 for bseq
    Index to = 20;
    Format format = Format::plain;
    std::string levels;
};

LevelSequence parse_levels(const std::string& text) {
    std::vector<Level> levels;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        Level l = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), l);
        if (ec != std::errc{} || ptr != item.data() + item.size()) {
            throw UsageError("--levels must be a comma-separated list of positive integers");
        }
        levels.push_back(l);
    }
    return LevelSequence::from_levels(std::move(levels));
}

int cmd_codes_greedy(const CodesOptions& o, std::ostream& out) {
    if (o.n > kMaxGreedyLeaves) {
        throw UsageError("--n exceeds " + std::to_string(kMaxGreedyLeaves));
    }
    const LevelSequence code = o.h ? greedy_tree(o.n, *o.h) : greedy_tree_unbounded(o.n);
    out << code.to_string() << '\n';
    return kExitOk;
}

int cmd_codes_enumerate(const CodesOptions& o, std::ostream& out) {
    for (const LevelSequence& code : enumerate_codes(o.n, o.h)) {
        out << code.to_string() << '\n';
    }
    return kExitOk;
}

int cmd_codes_mtable(const CodesOptions& o, std::ostream& out) {
    if (o.nmax < 2 || o.nmax > kMaxTableRows) {
        throw UsageError("--nmax must be in [2, " + std::to_string(kMaxTableRows) + "]");
    }
    if (o.header) {
        out << "n";
        for (Index h = 1; h < o.nmax; ++h) {
            out << "\th=" << h;
        }
        out << '\n';
    }
    for (Index n = 2; n <= o.nmax; ++n) {
        if (o.header) {
            out << n << '\t';
        }
        for (Level h = 1; h < o.nmax; ++h) {
            out << (h > 1 ? "\t" : "") << max_deepest_pairs(n, h);
        }
        out << '\n';
    }
    return kExitOk;
}

int cmd_codes_series(const CodesOptions& o, std::ostream& out, bool amax) {
    const Index lowest = amax ? 2 : 1;
    const Index from = o.from.value_or(lowest);
    check_range(from, o.to, lowest);
    if (o.to > 1'000'000) {
        throw UsageError("--to exceeds 1000000");
    }
    for (Index n = from; n <= o.to; ++n) {
        emit(out, o.format, n, static_cast<std::int64_t>(amax ? a_max(n) : b_seq(n)));
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// compositions, word, render

struct CompositionOptions {
    std::uint32_t s = 1;
    Index n = 1;
    bool count = false;
};

int cmd_compositions(const CompositionOptions& o, std::ostream& out) {
    if (o.count) {
        if (o.n > kMaxIndex) {
            throw UsageError("--n exceeds the index guard");
        }
        out << count_compositions(Shift(o.s), o.n) << '\n';
        return kExitOk;
    }
    for (const Composition& c : enumerate_compositions(Shift(o.s), o.n)) {
        out << c.to_string() << '\n';
    }
    return kExitOk;
}

struct WordOptions {
    std::string which;
    unsigned n = 0;
    std::uint32_t s = 0;
    std::size_t length = 20;
};

int cmd_word(const WordOptions& o, std::ostream& out) {
    BitWord word;
    if (o.which == "D") {
        word = word_D(o.n);
    } else if (o.which == "E") {
        word = word_E(o.n);
    } else if (o.which == "dword") {
        word = dword_prefix(Shift(o.s), o.length);
    } else if (o.which == "ruler") {
        word = ruler_factorization(Shift(o.s), o.length);
    } else {
        word = morphism_fixed_point(o.length);
    }
    out << word.to_string() << '\n';
    return kExitOk;
}

struct RenderOptions {
    std::uint32_t s = 0;
    Index n = 15;
    std::size_t width = 80;
};

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const std::string& depth, bool timings, std::ostream& out, const Hooks& hooks) {
    const auto results =
        run_verification(depth == "full" ? VerifyDepth::full : VerifyDepth::quick, hooks.primitives);
    std::size_t failed = 0;
    for (const CheckResult& r : results) {
        out << (r.passed ? "PASS  " : "FAIL  ") << r.name;
        if (!r.passed) {
            ++failed;
            out << ": " << r.detail;
        }
        if (timings) {
            out << " (" << std::fixed << std::setprecision(3) << r.seconds << " s)";
            out.unsetf(std::ios::floatfield);
        }
        out << '\n';
    }
    out << (results.size() - failed) << "/" << results.size() << " identities hold\n";
    return failed == 0 ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------
// oeis-check

struct OeisOptions {
    std::string bfile;
    std::string id;
    std::string roles;
    std::string which;
    std::uint32_t s = 0;
    std::int64_t index_shift = 0;
    std::int64_t value_shift = 0;
};

std::vector<BFileRecord> load_bfile(const fs::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read " + path.string());
    }
    try {
        return parse_bfile(in);
    } catch (const BFileError& e) {
        throw UsageError(path.string() + ": " + e.what());
    }
}

std::string infer_id(const fs::path& path) {
    static const std::regex pattern("b([0-9]{6})\\.txt");
    std::smatch m;
    const std::string name = path.filename().string();
    if (std::regex_match(name, m, pattern)) {
        return "A" + m[1].str();
    }
    return {};
}

OeisRole resolve_role(const OeisOptions& o, const fs::path& bfile) {
    if (!o.which.empty()) {
        OeisRole role;
        role.id = o.id.empty() ? "b-file" : o.id;
        role.kind = *parse_sequence_kind(o.which);
        role.shift = o.s;
        role.index_shift = o.index_shift;
        role.value_shift = o.value_shift;
        return role;
    }
    const std::string id = o.id.empty() ? infer_id(bfile) : o.id;
    if (id.empty()) {
        throw UsageError("cannot infer the sequence id from the file name; pass --id or --which");
    }
    const fs::path roles_path = o.roles.empty() ? bfile.parent_path() / "roles.tsv" : fs::path(o.roles);
    std::ifstream in(roles_path);
    if (!in) {
        throw UsageError("cannot read role table " + roles_path.string());
    }
    std::vector<OeisRole> roles;
    try {
        roles = parse_roles(in);
    } catch (const std::runtime_error& e) {
        throw UsageError(roles_path.string() + ": " + e.what());
    }
    const OeisRole* role = find_role(roles, id);
    if (!role) {
        throw UsageError(id + " is not listed in " + roles_path.string());
    }
    return *role;
}

// A101925(n) = A005187(n) + 1 on the shared indices.
int check_sibling_shift(const fs::path& bfile, const std::vector<BFileRecord>& records, std::ostream& out) {
    const fs::path sibling = bfile.parent_path() / "b005187.txt";
    if (!fs::exists(sibling)) {
        return kExitOk;
    }
    const auto other = load_bfile(sibling);
    std::size_t shared = 0;
    std::size_t j = 0;
    for (const BFileRecord& r : records) {
        while (j < other.size() && other[j].index < r.index) {
            ++j;
        }
        if (j == other.size() || other[j].index != r.index) {
            continue;
        }
        ++shared;
        if (r.value != other[j].value + 1) {
            out << "MISMATCH A101925 vs A005187+1 at n=" << r.index << ": " << r.value << " vs "
                << other[j].value + 1 << '\n';
            return kExitFailure;
        }
    }
    out << "A101925 = A005187 + 1 on " << shared << " shared indices\n";
    return kExitOk;
}

int cmd_oeis_check(const OeisOptions& o, std::ostream& out, std::ostream& err) {
    const fs::path bfile(o.bfile);
    const auto records = load_bfile(bfile);
    const OeisRole role = resolve_role(o, bfile);
    if (records.empty()) {
        err << "warning: " << bfile.string() << " has no data lines\n";
        out << role.id << ": 0 terms compared\n";
        return kExitOk;
    }
    for (const BFileRecord& r : records) {
        if (r.index + role.index_shift > static_cast<std::int64_t>(kMaxIndex)) {
            throw UsageError("b-file index " + std::to_string(r.index) + " exceeds the index guard");
        }
    }
    const BFileComparison cmp = compare_bfile(records, role);
    if (cmp.first_mismatch) {
        out << "MISMATCH " << role.id << " at n=" << cmp.first_mismatch->index << ": b-file "
            << cmp.first_mismatch->value << ", local " << cmp.expected_at_mismatch << '\n';
        return kExitFailure;
    }
    out << role.id << ": " << cmp.compared << " terms match " << to_string(role.kind) << "_" << role.shift
        << '\n';
    if (role.id == "A101925") {
        return check_sibling_shift(bfile, records, out);
    }
    return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err, const Hooks& hooks) {
    CLI::App app{"Shifted meta-Fibonacci sequences, their trees, words, series and codes", "metafib"};
    // -h is taken by the height option of the codes subcommands.
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    std::function<int()> action;

    SeqOptions seq;
    auto* seq_cmd = app.add_subcommand("seq", "Emit a_s, d_s or p_s over an index range");
    seq_cmd->add_option("which", seq.which, "Sequence")->required()->check(CLI::IsMember({"a", "d", "p"}));
    seq_cmd->add_option("--s", seq.s, "Shift s >= 0");
    seq_cmd->add_option("--from", seq.from, "First index (>= 1)");
    seq_cmd->add_option("--to", seq.to, "Last index");
    seq_cmd->add_option("--format", seq.format, "plain, tsv or bfile")
        ->transform(CLI::CheckedTransformer(kFormats));
    seq_cmd->callback([&] { action = [&] { return cmd_seq(seq, out); }; });

    GfOptions gf;
    auto* gf_cmd = app.add_subcommand("gf", "Print generating-function coefficients");
    gf_cmd->add_option("which", gf.which, "Series")
        ->required()
        ->check(CLI::IsMember({"ruler", "D", "D-nested", "Dn", "D0", "A", "A-theorem", "A-from-D", "P"}));
    gf_cmd->add_option("--s", gf.s, "Shift s >= 0");
    gf_cmd->add_option("--order", gf.order, "Truncation order N");
    gf_cmd->add_option("--depth", gf.depth, "Nesting depth for D-nested (2^depth > order)");
    gf_cmd->add_option("--n", gf.n, "Block index for Dn");
    gf_cmd->add_option("--format", gf.format, "tsv (exponent, coefficient) or plain")
        ->transform(CLI::CheckedTransformer(kFormats));
    gf_cmd->callback([&] { action = [&] { return cmd_gf(gf, out, err); }; });

    CodesOptions codes;
    auto* codes_cmd = app.add_subcommand("codes", "Compact binary codes and greedy trees");
    codes_cmd->require_subcommand(1);
    auto* greedy_cmd = codes_cmd->add_subcommand("greedy", "Greedy tree T(n,h), or T(n) without --h");
    greedy_cmd->add_option("--n", codes.n, "Leaves")->required();
    greedy_cmd->add_option("--h", codes.h, "Height");
    greedy_cmd->callback([&] { action = [&] { return cmd_codes_greedy(codes, out); }; });
    auto* enum_cmd = codes_cmd->add_subcommand("enumerate", "All codes with n leaves");
    enum_cmd->add_option("--n", codes.n, "Leaves")->required();
    enum_cmd->add_option("--h", codes.h, "Only this height");
    enum_cmd->callback([&] { action = [&] { return cmd_codes_enumerate(codes, out); }; });
    auto* mtable_cmd = codes_cmd->add_subcommand("mtable", "M(n,h) for 2 <= n <= nmax, 1 <= h < nmax");
    mtable_cmd->add_option("--nmax", codes.nmax, "Largest n");
    mtable_cmd->add_flag("--header", codes.header, "Label rows and columns");
    mtable_cmd->callback([&] { action = [&] { return cmd_codes_mtable(codes, out); }; });
    for (const bool amax : {true, false}) {
        auto* sub = codes_cmd->add_subcommand(amax ? "amax" : "bseq",
                                              amax ? "M(n, ceil lg n) over a range"
                                                   : "M(n+h, h) with the smallest admissible h");
        sub->add_option("--from", codes.from, "First n");
        sub->add_option("--to", codes.to, "Last n");
        sub->add_option("--format", codes.format, "plain, tsv or bfile")
            ->transform(CLI::CheckedTransformer(kFormats));
        sub->callback([&, amax] { action = [&, amax] { return cmd_codes_series(codes, out, amax); }; });
    }
    auto* shrink_cmd = codes_cmd->add_subcommand("shrink", "Merge the rightmost equal pair of levels");
    shrink_cmd->add_option("--levels", codes.levels, "Comma-separated levels")->required();
    shrink_cmd->callback([&] {
        action = [&] {
            out << shrink(parse_levels(codes.levels)).to_string() << '\n';
            return kExitOk;
        };
    });

    CompositionOptions comp;
    auto* comp_cmd = app.add_subcommand("compositions", "Restricted compositions counted by a_s");
    comp_cmd->add_option("--s", comp.s, "Shift s >= 1");
    comp_cmd->add_option("--n", comp.n, "Target sum")->required();
    comp_cmd->add_flag("--count", comp.count, "Print only the number of compositions");
    comp_cmd->callback([&] { action = [&] { return cmd_compositions(comp, out); }; });

    WordOptions word;
    auto* word_cmd = app.add_subcommand("word", "Finite words D_n, E_n and prefixes of the d_s word");
    word_cmd->add_option("which", word.which, "Word")
        ->required()
        ->check(CLI::IsMember({"D", "E", "dword", "ruler", "morphism"}));
    word_cmd->add_option("--n", word.n, "Level for D and E");
    word_cmd->add_option("--s", word.s, "Shift for dword and ruler");
    word_cmd->add_option("--length", word.length, "Prefix length, or factor count for ruler");
    word_cmd->callback([&] { action = [&] { return cmd_word(word, out); }; });

    RenderOptions render_opts;
    auto* render_cmd = app.add_subcommand("render", "Draw the first n nodes of the forest F_s");
    render_cmd->add_option("--s", render_opts.s, "Shift s >= 0");
    render_cmd->add_option("--n", render_opts.n, "Node count");
    render_cmd->add_option("--width", render_opts.width, "Maximum line width");
    render_cmd->callback([&] {
        action = [&] {
            out << render(Shift(render_opts.s), render_opts.n, render_opts.width);
            return kExitOk;
        };
    });

    std::string depth = "quick";
    bool timings = false;
    auto* verify_cmd = app.add_subcommand("verify", "Check every cross-module identity");
    verify_cmd->add_option("--depth", depth, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    verify_cmd->add_flag("--timings", timings, "Append the time taken by each check");
    verify_cmd->callback([&] { action = [&] { return cmd_verify(depth, timings, out, hooks); }; });

    OeisOptions oeis;
    auto* oeis_cmd = app.add_subcommand("oeis-check", "Compare an OEIS b-file with the local sequence");
    oeis_cmd->add_option("--bfile", oeis.bfile, "Path to bNNNNNN.txt")->required();
    oeis_cmd->add_option("--id", oeis.id, "Sequence id (default: from the file name)");
    oeis_cmd->add_option("--roles", oeis.roles, "Role table (default: roles.tsv beside the b-file)");
    auto* which_opt =
        oeis_cmd->add_option("--which", oeis.which, "Explicit role: a, d, p or ruler")
            ->check(CLI::IsMember({"a", "d", "p", "ruler"}));
    oeis_cmd->add_option("--s", oeis.s, "Shift for --which")->needs(which_opt);
    oeis_cmd->add_option("--index-shift", oeis.index_shift, "Local index = b-file index + shift")
        ->needs(which_opt);
    oeis_cmd->add_option("--value-shift", oeis.value_shift, "Added to the local value")->needs(which_opt);
    oeis_cmd->callback([&] { action = [&] { return cmd_oeis_check(oeis, out, err); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        return action();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace metafib::cli
