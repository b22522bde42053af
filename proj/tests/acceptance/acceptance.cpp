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
// Acceptance suite: one line per criterion with its verdict, elapsed time
// and time limit. Each criterion runs on a fresh thread so that memo tables
// built by earlier criteria do not flatter later timings.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "metafib/bfile.hpp"
#include "metafib/codes.hpp"
#include "metafib/compositions.hpp"
#include "metafib/sequences.hpp"
#include "metafib/series.hpp"
#include "metafib/tree_model.hpp"
#include "metafib/words.hpp"
#include "table1.hpp"

namespace {

using namespace metafib;
using Failure = std::optional<std::string>;
using Coeff = TruncatedSeries::Coeff;

template <typename... Parts>
std::string describe(const Parts&... parts) {
    std::ostringstream out;
    (out << ... << parts);
    return out.str();
}

Failure table_reproduction() {
    for (std::uint32_t s = 0; s < 3; ++s) {
        for (Index n = 1; n <= 20; ++n) {
            if (a(Shift(s), n) != testdata::kA[s][n - 1]) return describe("a_", s, "(", n, ")");
            if (d(Shift(s), n) != testdata::kD[s][n - 1]) return describe("d_", s, "(", n, ")");
            if (p(Shift(s), n) != testdata::kP[s][n - 1]) return describe("p_", s, "(", n, ")");
        }
    }
    return std::nullopt;
}

Failure recurrence_vs_tree() {
    for (std::uint32_t s = 0; s <= 6; ++s) {
        const auto leaves = leaf_prefix_counts(Shift(s), 20000);
        for (Index n = 1; n <= 20000; ++n) {
            if (leaves[n] != a(Shift(s), n)) return describe("s=", s, " n=", n);
        }
    }
    return std::nullopt;
}

Failure evaluator_agreement() {
    constexpr Index kN = 100000;
    for (std::uint32_t s = 0; s <= 6; ++s) {
        const Shift sh(s);
        for (Index n = 1; n <= kN; ++n) {
            const Index expected = a(sh, n);
            if (a_via_a0(sh, n) != expected) return describe("a_via_a0 s=", s, " n=", n);
            if (a_by_descent(sh, n) != expected) return describe("a_by_descent s=", s, " n=", n);
        }
    }
    for (Index n = 0; n <= kN; ++n) {
        if (a0_fast(n) != a(Shift(0), n)) return describe("a0_fast n=", n);
    }
    for (Index n = 1; n <= kN; ++n) {
        if (a1_fast(n) != a(Shift(1), n)) return describe("a1_fast n=", n);
    }
    return std::nullopt;
}

Failure generating_functions() {
    constexpr std::size_t kOrder = 4096;
    for (std::uint32_t s = 0; s <= 4; ++s) {
        const Shift sh(s);
        const auto ds = gf_Ds_sum(sh, kOrder);
        const auto as = gf_A_from_D(sh, kOrder);
        const auto ps = gf_Ps(sh, kOrder);
        for (std::size_t n = 1; n <= kOrder; ++n) {
            if (ds[n] != d(sh, n)) return describe("D_", s, " coefficient ", n);
            if (as[n] != static_cast<Coeff>(a(sh, n))) return describe("A_", s, " coefficient ", n);
            if (ps[n] != static_cast<Coeff>(p(sh, n))) return describe("P_", s, " coefficient ", n);
        }
        if (s >= 1 && gf_As(sh, kOrder) != as) return describe("product form of A_", s);
        if (gf_Ds_nested(sh, 2048, 12) != gf_Ds_sum(sh, 2048)) return describe("nested D_", s);
    }
    const auto r = gf_ruler(kOrder);
    for (std::size_t n = 1; n <= kOrder; ++n) {
        if (r[n] != static_cast<Coeff>(ruler(n))) return describe("ruler coefficient ", n);
    }
    return std::nullopt;
}

Failure words() {
    for (std::uint32_t s = 0; s <= 4; ++s) {
        const BitWord w = dword_prefix(Shift(s), std::size_t{1} << 14);
        for (std::size_t i = 1; i <= w.size(); ++i) {
            if (w.bit(i) != d(Shift(s), i)) return describe("d_", s, " bit ", i);
        }
        // 2^12 factors cover more than 2^14 bits
        const BitWord f = ruler_factorization(Shift(s), std::size_t{1} << 12);
        if (f != dword_prefix(Shift(s), f.size())) return describe("ruler factorization s=", s);
    }
    const std::size_t kLong = std::size_t{1} << 16;
    if (morphism_fixed_point(kLong) != dword_prefix(Shift(0), kLong)) return std::string("morphism fixed point");
    for (unsigned n = 0; n <= 16; ++n) {
        if (word_E(n).reversed() != word_D(n)) return describe("reverse(E_", n, ")");
    }
    // The word of length 2^h - 1 is E_{h-1}; it carries 2^{h-1} ones.
    for (unsigned h = 1; h <= 16; ++h) {
        if (word_E(h - 1).count_ones() != (std::size_t{1} << (h - 1))) return describe("weight h=", h);
    }
    return std::nullopt;
}

Failure compositions() {
    for (std::uint32_t s = 1; s <= 4; ++s) {
        const auto counts = count_compositions_upto(Shift(s), 2000);
        for (Index n = 1; n <= 2000; ++n) {
            if (counts[n] != a(Shift(s), n)) return describe("count s=", s, " n=", n);
        }
    }
    for (std::uint32_t s = 1; s <= 3; ++s) {
        for (Index n = 1; n <= 30; ++n) {
            if (enumerate_compositions(Shift(s), n).size() != count_compositions(Shift(s), n)) {
                return describe("enumeration s=", s, " n=", n);
            }
        }
    }
    const auto eight = enumerate_compositions(Shift(2), 8);
    const std::vector<std::vector<Index>> expected{{1, 2, 5}, {1, 3, 2, 2}, {2, 2, 2, 2}};
    if (eight.size() != expected.size()) return std::string("s=2 n=8 count");
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (eight[i].parts != expected[i]) return describe("s=2 n=8 composition ", eight[i].to_string());
    }
    return std::nullopt;
}

// Kraft sum recomputed from scratch: sum of 2^{h - l} equals 2^h.
bool kraft_exact(const LevelSequence& code) {
    const Level h = code.height();
    Index total = 0;
    for (Level l : code.levels()) {
        total += Index{1} << (h - l);
    }
    return total == (Index{1} << h);
}

Failure codes() {
    for (Index n = 2; n <= 14; ++n) {
        for (Level h = 1; h <= n + 1; ++h) {
            if (max_deepest_pairs(n, h) != max_deepest_pairs_oracle(n, h)) return describe("M(", n, ",", h, ")");
        }
        for (const LevelSequence& c : enumerate_codes(n)) {
            if (!kraft_exact(c)) return describe("Kraft ", c.to_string());
        }
        for (Level h = ceil_log2(n); h <= n - 1; ++h) {
            if (!kraft_exact(greedy_tree(n, h))) return describe("Kraft greedy n=", n, " h=", h);
        }
        if (!kraft_exact(greedy_tree_unbounded(n))) return describe("Kraft unbounded n=", n);
        if (n >= 3 && !kraft_exact(shrink(greedy_tree_unbounded(n)))) return describe("Kraft shrink n=", n);
    }
    for (Index n = 3; n <= 12; ++n) {
        for (Level h = ceil_log2(n); h <= n - 1; ++h) {
            const LevelCounts greedy = greedy_counts(n, h);
            for (const LevelSequence& c : enumerate_codes(n, h)) {
                const LevelCounts other = level_counts(c);
                Index g = 0;
                Index t = 0;
                for (std::size_t j = h; j-- > 0;) {
                    g += greedy.tau()[j];
                    t += other.tau()[j];
                    if (g < t) return describe("dominance n=", n, " h=", h, " code ", c.to_string());
                }
            }
        }
    }
    for (Index n = 2; n <= 4096; ++n) {
        if (a_max(n) != a(Shift(1), n - 1)) return describe("a_max(", n, ")");
    }
    for (Index n = 1; n <= 4096; ++n) {
        if (b_seq(n) != a(Shift(0), n)) return describe("b(", n, ")");
    }
    for (Index n = 1; n <= 200; ++n) {
        const Level h = b_seq_height(n);
        for (Level k = h; k <= h + 4; ++k) {
            if (max_deepest_pairs(n + k, k) != max_deepest_pairs(n + h, h)) return describe("stability n=", n, " k=", k);
        }
    }
    return std::nullopt;
}

std::vector<BFileRecord> read_bfile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    return parse_bfile(in);
}

Failure oeis_fixtures() {
    const std::filesystem::path dir{METAFIB_OEIS_DIR};
    std::ifstream roles_in(dir / "roles.tsv");
    const auto roles = parse_roles(roles_in);
    std::map<std::string, std::vector<BFileRecord>> files;
    for (const char* id : {"A046699", "A006949", "A079559", "A101925", "A005187", "A001511"}) {
        const OeisRole* role = find_role(roles, id);
        if (!role) return describe(id, " missing from roles.tsv");
        auto records = read_bfile(dir / ("b" + std::string(id + 1) + ".txt"));
        const BFileComparison cmp = compare_bfile(records, *role);
        if (cmp.first_mismatch) return describe(id, " differs at n=", cmp.first_mismatch->index);
        if (cmp.compared < 1000) return describe(id, " only ", cmp.compared, " terms compared");
        files[id] = std::move(records);
    }
    const auto& p0 = files["A101925"];
    const auto& shifted = files["A005187"];
    std::size_t shared = 0;
    for (const BFileRecord& r : p0) {
        for (const BFileRecord& q : shifted) {
            if (q.index == r.index) {
                ++shared;
                if (r.value != q.value + 1) return describe("A101925 != A005187 + 1 at n=", r.index);
                break;
            }
        }
    }
    if (shared < 1000) return describe("only ", shared, " shared indices for the shift identity");
    return std::nullopt;
}

struct Criterion {
    const char* id;
    const char* title;
    double limit_seconds;
    std::function<Failure()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC1", "table of a_s, d_s, p_s for s = 0..2, n = 1..20", 1.0, table_reproduction},
        {"AC2", "recurrence equals F_s leaf counts, s <= 6, n <= 20000", 10.0, recurrence_vs_tree},
        {"AC3", "fast evaluators equal recurrence, s <= 6, n <= 10^5", 10.0, evaluator_agreement},
        {"AC4", "generating function coefficients", 20.0, generating_functions},
        {"AC5", "words against d_s, morphism and E_n identities", 10.0, words},
        {"AC6", "composition counts and enumeration", 10.0, compositions},
        {"AC7", "codes: M, dominance, bridges, stability, Kraft", 60.0, codes},
        {"AC8", "OEIS fixtures and the A101925 = A005187 + 1 shift", 5.0, oeis_fixtures},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        Failure failure;
        double seconds = 0.0;
        std::thread worker([&] {
            const auto start = std::chrono::steady_clock::now();
            try {
                failure = c.run();
            } catch (const std::exception& e) {
                failure = std::string("exception: ") + e.what();
            }
            seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        });
        worker.join();
        const bool in_time = seconds <= c.limit_seconds;
        const bool passed = !failure && in_time;
        failures += passed ? 0 : 1;
        std::printf("%s %s  %.3f s (limit %.0f s)  %s", c.id, passed ? "PASS" : "FAIL", seconds, c.limit_seconds,
                    c.title);
        if (failure) {
            std::printf("  [%s]", failure->c_str());
        } else if (!in_time) {
            std::printf("  [time limit exceeded]");
        }
        std::printf("\n");
    }
    std::printf("AC9 INFO  no large-scale empirical results to reproduce; AC1-AC8 cover every identity\n");
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
