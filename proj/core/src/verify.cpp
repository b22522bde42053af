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

#include "metafib/verify.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <optional>
#include <random>
#include <sstream>

#include "metafib/codes.hpp"
#include "metafib/compositions.hpp"
#include "metafib/forest.hpp"
#include "metafib/series.hpp"
#include "metafib/tree_model.hpp"
#include "metafib/words.hpp"

namespace metafib {

namespace {

using Failure = std::optional<std::string>;

struct Ranges {
    std::uint32_t max_shift;       // s in 0..max_shift for sequence checks
    Index tree_n;                  // recurrence vs tree oracle
    Index fast_n;                  // fast evaluators
    Index p_n;                     // p-differences and inverse relations
    unsigned doubling_h;           // a_0 doubling identity
    std::size_t gf_order;          // series vs sequences
    std::size_t nested_order;
    unsigned nested_depth;
    unsigned word_level;           // E_n / D_n identities
    std::size_t morphism_length;
    std::size_t dword_length;
    std::size_t ruler_terms;
    Index composition_n;
    Index composition_gf_n;
    Index enumeration_n;
    Index oracle_n;                // exhaustive code enumeration
    Index dominance_n;
    Index sequence_bridge_n;       // a_max / b_seq
    Index stability_n;
    Index shrink_n;
};

Ranges ranges_for(VerifyDepth depth) {
    if (depth == VerifyDepth::full) {
        return {6, 20000, 100000, 20000, 14, 4096, 2048, 12, 16, std::size_t{1} << 16,
                std::size_t{1} << 14, std::size_t{1} << 12, 2000, 512, 30, 14, 12, 4096, 200, 1024};
    }
    return {3, 2000, 5000, 2000, 10, 512, 256, 9, 10, std::size_t{1} << 12,
            std::size_t{1} << 10, std::size_t{1} << 10, 300, 128, 20, 10, 9, 512, 40, 128};
}

template <typename... Parts>
std::string describe(const Parts&... parts) {
    std::ostringstream out;
    (out << ... << parts);
    return out.str();
}

struct Check {
    std::string name;
    std::function<Failure(const Ranges&, const VerifyPrimitives&)> run;
};

// --- sequences -------------------------------------------------------------

Failure check_increments(const Ranges& r, const VerifyPrimitives&) {
    for (std::uint32_t s = 0; s <= r.max_shift; ++s) {
        for (Index n = 1; n < r.tree_n; ++n) {
            const Index x = a(Shift(s), n);
            const Index y = a(Shift(s), n + 1);
            if (y < x || y - x > 1) {
                return describe("s=", s, " n=", n, ": a(n+1)-a(n) not in {0,1}");
            }
        }
    }
    return std::nullopt;
}

Failure check_tree_oracle(const Ranges& r, const VerifyPrimitives&) {
    for (std::uint32_t s = 0; s <= r.max_shift; ++s) {
        const auto leaves = leaf_prefix_counts(Shift(s), r.tree_n);
        for (Index n = 1; n <= r.tree_n; ++n) {
            if (leaves[n] != a(Shift(s), n)) {
                return describe("s=", s, " n=", n, ": leaves ", leaves[n], " vs a ", a(Shift(s), n));
            }
            if (is_leaf_oracle(Shift(s), n) != (d(Shift(s), n) == 1)) {
                return describe("s=", s, " n=", n, ": leaf indicator differs from d");
            }
        }
    }
    return std::nullopt;
}

Failure check_fast_evaluators(const Ranges& r, const VerifyPrimitives&) {
    for (std::uint32_t s = 0; s <= r.max_shift; ++s) {
        const Shift sh(s);
        for (Index n = 1; n <= r.fast_n; ++n) {
            const Index expected = a(sh, n);
            if (a_via_a0(sh, n) != expected) {
                return describe("a_via_a0 s=", s, " n=", n);
            }
            if (a_by_descent(sh, n) != expected) {
                return describe("a_by_descent s=", s, " n=", n);
            }
            if (s == 0 && a0_fast(n) != expected) {
                return describe("a0_fast n=", n);
            }
            if (s == 1 && a1_fast(n) != expected) {
                return describe("a1_fast n=", n);
            }
        }
    }
    return std::nullopt;
}

Failure check_p_gaps(const Ranges& r, const VerifyPrimitives& prims) {
    for (std::uint32_t s = 0; s <= r.max_shift; ++s) {
        const Shift sh(s);
        for (Index n = 1; n < r.p_n; ++n) {
            const Index gap = p(sh, n + 1) - p(sh, n);
            const Index predicted = prims.ruler(n) + (is_power_of_two(n) ? s : 0);
            if (gap != predicted) {
                return describe("s=", s, " n=", n, ": gap ", gap, " vs ", predicted);
            }
        }
    }
    return std::nullopt;
}

Failure check_p_inverse(const Ranges& r, const VerifyPrimitives&) {
    for (std::uint32_t s = 0; s <= r.max_shift; ++s) {
        const Shift sh(s);
        Index ones = 0;
        for (Index n = 1; n <= r.p_n; ++n) {
            ones += d(sh, n);
            if (ones != a(sh, n)) {
                return describe("s=", s, " n=", n, ": prefix count of d differs from a");
            }
            if (n >= 2 && (a(sh, p(sh, n)) != n || a(sh, p(sh, n) - 1) != n - 1)) {
                return describe("s=", s, " n=", n, ": p is not the first index reaching n");
            }
        }
        if (p_by_differences(sh, r.p_n) != p(sh, r.p_n)) {
            return describe("s=", s, ": accumulated gaps differ from p at n=", r.p_n);
        }
    }
    return std::nullopt;
}

Failure check_doubling(const Ranges& r, const VerifyPrimitives&) {
    for (unsigned h = 1; h <= r.doubling_h; ++h) {
        const Index base = (Index{1} << h) - 1;
        for (Index k = 1; k < (Index{1} << h); ++k) {
            if (a(Shift(0), base + k) != (Index{1} << (h - 1)) + a(Shift(0), k)) {
                return describe("h=", h, " k=", k);
            }
        }
        // At k = 0 the identity uses the prefix-sum value 0 for a_0(0).
        if (a(Shift(0), base) != (Index{1} << (h - 1))) {
            return describe("h=", h, " k=0");
        }
    }
    return std::nullopt;
}

Failure check_generic(const Ranges& r, const VerifyPrimitives&) {
    for (std::uint32_t s = 0; s <= r.max_shift; ++s) {
        GenericMetaFib seq(shifted_family_spec(Shift(s)));
        for (Index n = 0; n <= r.p_n; ++n) {
            const auto value = seq(n);
            if (!value || *value != a(Shift(s), n)) {
                return describe("s=", s, " n=", n);
            }
        }
    }
    return std::nullopt;
}

// --- series ----------------------------------------------------------------

Failure check_ruler_gf(const Ranges& r, const VerifyPrimitives& prims) {
    const auto gf = gf_ruler(r.gf_order);
    for (std::size_t n = 1; n <= r.gf_order; ++n) {
        if (gf[n] != static_cast<TruncatedSeries::Coeff>(prims.ruler(n))) {
            return describe("n=", n, ": coefficient ", gf[n], " vs ruler ", prims.ruler(n));
        }
    }
    return std::nullopt;
}

Failure check_series_vs_sequences(const Ranges& r, const VerifyPrimitives&) {
    for (std::uint32_t s = 0; s <= std::min<std::uint32_t>(r.max_shift, 4); ++s) {
        const Shift sh(s);
        const auto ds = gf_Ds_sum(sh, r.gf_order);
        const auto as = gf_A_from_D(sh, r.gf_order);
        const auto ps = gf_Ps(sh, r.gf_order);
        if (ps[0] != 1) {
            return describe("s=", s, ": P_s constant term ", ps[0]);
        }
        for (std::size_t n = 1; n <= r.gf_order; ++n) {
            if (ds[n] != d(sh, n) || as[n] != static_cast<TruncatedSeries::Coeff>(a(sh, n)) ||
                ps[n] != static_cast<TruncatedSeries::Coeff>(p(sh, n))) {
                return describe("s=", s, " n=", n);
            }
        }
        if (s >= 1 && gf_As(sh, r.gf_order) != as) {
            return describe("s=", s, ": theorem form of A_s differs from D_s/(1-z)");
        }
        // (1 - z) A_s = D_s
        if (as - shift_by_power(as, 1) != ds) {
            return describe("s=", s, ": (1-z) A_s differs from D_s");
        }
    }
    return std::nullopt;
}

Failure check_nested(const Ranges& r, const VerifyPrimitives&) {
    for (std::uint32_t s = 0; s <= std::min<std::uint32_t>(r.max_shift, 4); ++s) {
        if (gf_Ds_nested(Shift(s), r.nested_order, r.nested_depth) != gf_Ds_sum(Shift(s), r.nested_order)) {
            return describe("s=", s);
        }
    }
    if (gf_Ds_sum(Shift(0), r.gf_order) != gf_D0(r.gf_order)) {
        return std::string("s=0 sum form differs from the infinite product");
    }
    return std::nullopt;
}

Failure check_dn_support(const Ranges&, const VerifyPrimitives&) {
    for (unsigned n = 0; n <= 12; ++n) {
        const BitWord word = word_D(n);
        const auto gf = gf_Dn(n, word.size() + 4);
        for (std::size_t i = 1; i <= gf.order(); ++i) {
            const int bit = i <= word.size() ? word.bit(i) : 0;
            if (gf[i] != bit) {
                return describe("n=", n, " i=", i);
            }
        }
    }
    return std::nullopt;
}

// --- words -----------------------------------------------------------------

Failure check_word_identities(const Ranges& r, const VerifyPrimitives&) {
    for (unsigned n = 0; n <= r.word_level; ++n) {
        const BitWord e = word_E(n);
        if (e.reversed() != word_D(n)) {
            return describe("reverse(E_", n, ") != D_", n);
        }
        // |E_n| = 2^{n+1} - 1, so the word of length 2^h - 1 is E_{h-1}.
        if (e.count_ones() != (std::size_t{1} << n)) {
            return describe("#1(E_", n, ") != 2^", n);
        }
        if (n < r.word_level && !e.is_prefix_of(word_E(n + 1))) {
            return describe("E_", n, " is not a prefix of E_", n + 1);
        }
    }
    return std::nullopt;
}

Failure check_d0_word(const Ranges& r, const VerifyPrimitives&) {
    const BitWord blocks = dword_prefix(Shift(0), r.morphism_length);
    if (blocks != morphism_fixed_point(r.morphism_length)) {
        return std::string("block word differs from the morphism fixed point");
    }
    for (std::size_t i = 1; i <= blocks.size(); ++i) {
        if (blocks.bit(i) != d(Shift(0), i)) {
            return describe("i=", i, ": block word differs from d_0");
        }
    }
    return std::nullopt;
}

Failure check_dword_vs_tree(const Ranges& r, const VerifyPrimitives&) {
    for (std::uint32_t s = 0; s <= std::min<std::uint32_t>(r.max_shift, 4); ++s) {
        const BitWord word = dword_prefix(Shift(s), r.dword_length);
        for (std::size_t i = 1; i <= word.size(); ++i) {
            if ((word.bit(i) == 1) != is_leaf_oracle(Shift(s), i)) {
                return describe("s=", s, " i=", i);
            }
        }
        const auto ones = word.one_positions();
        for (std::size_t k = 0; k < ones.size(); ++k) {
            if (ones[k] != p(Shift(s), k + 1)) {
                return describe("s=", s, ": one position ", k + 1, " differs from p");
            }
        }
    }
    return std::nullopt;
}

Failure check_ruler_factorization(const Ranges& r, const VerifyPrimitives&) {
    for (std::uint32_t s = 0; s <= std::min<std::uint32_t>(r.max_shift, 4); ++s) {
        const BitWord factored = ruler_factorization(Shift(s), r.ruler_terms);
        if (factored != dword_prefix(Shift(s), factored.size())) {
            return describe("s=", s);
        }
    }
    return std::nullopt;
}

Failure check_ruler_self_similarity(const Ranges& r, const VerifyPrimitives& prims) {
    // Dropping the zeros at odd positions of r_k - 1 leaves r_k again.
    for (Index k = 1; k <= r.ruler_terms; ++k) {
        if (prims.ruler(2 * k - 1) != 1) {
            return describe("r_", 2 * k - 1, " != 1");
        }
        if (prims.ruler(2 * k) - 1 != prims.ruler(k)) {
            return describe("r_", 2 * k, " - 1 != r_", k);
        }
    }
    return std::nullopt;
}

// --- compositions ----------------------------------------------------------

Failure check_composition_counts(const Ranges& r, const VerifyPrimitives&) {
    for (std::uint32_t s = 1; s <= 4; ++s) {
        const auto counts = count_compositions_upto(Shift(s), r.composition_n);
        for (Index n = 1; n <= r.composition_n; ++n) {
            if (counts[n] != a(Shift(s), n)) {
                return describe("s=", s, " n=", n, ": DP ", counts[n], " vs a ", a(Shift(s), n));
            }
        }
        const auto gf = gf_As(Shift(s), r.composition_gf_n);
        for (Index n = 1; n <= r.composition_gf_n; ++n) {
            if (gf[n] != static_cast<TruncatedSeries::Coeff>(counts[n])) {
                return describe("s=", s, " n=", n, ": DP differs from generating function");
            }
        }
    }
    return std::nullopt;
}

Failure check_composition_enumeration(const Ranges& r, const VerifyPrimitives&) {
    for (std::uint32_t s = 1; s <= 3; ++s) {
        const CompositionSpec spec{Shift(s)};
        for (Index n = 1; n <= r.enumeration_n; ++n) {
            const auto list = enumerate_compositions(Shift(s), n);
            if (list.size() != count_compositions(Shift(s), n)) {
                return describe("s=", s, " n=", n, ": enumerated ", list.size());
            }
            for (const Composition& c : list) {
                if (!admits(spec, c) || c.sum() != n) {
                    return describe("s=", s, " n=", n, ": invalid ", c.to_string());
                }
            }
        }
    }
    return std::nullopt;
}

// --- codes -----------------------------------------------------------------

Failure check_m_oracle(const Ranges& r, const VerifyPrimitives&) {
    for (Index n = 2; n <= r.oracle_n; ++n) {
        for (Level h = 1; h <= n + 1; ++h) {
            if (max_deepest_pairs(n, h) != max_deepest_pairs_oracle(n, h)) {
                return describe("n=", n, " h=", h);
            }
            if (h <= n - 1 && h >= ceil_log2(n)) {
                const auto codes = enumerate_codes(n, h);
                const LevelSequence greedy = greedy_tree(n, h);
                if (std::find(codes.begin(), codes.end(), greedy) == codes.end()) {
                    return describe("greedy tree n=", n, " h=", h, " missing from enumeration");
                }
                if (level_counts(greedy) != greedy_counts(n, h)) {
                    return describe("greedy level counts differ n=", n, " h=", h);
                }
            }
        }
    }
    return std::nullopt;
}

Failure check_dominance(const Ranges& r, const VerifyPrimitives&) {
    for (Index n = 3; n <= r.dominance_n; ++n) {
        for (Level h = ceil_log2(n); h <= n - 1; ++h) {
            const LevelCounts greedy_tree_counts = greedy_counts(n, h);
            const auto greedy = greedy_tree_counts.tau();
            for (const LevelSequence& code : enumerate_codes(n, h)) {
                const LevelCounts other = level_counts(code);
                Index g = 0;
                Index t = 0;
                for (std::size_t j = h; j-- > 0;) {
                    g += greedy[j];
                    t += other.tau()[j];
                    if (g < t) {
                        return describe("n=", n, " h=", h, " j=", j, " code ", code.to_string());
                    }
                }
            }
        }
    }
    return std::nullopt;
}

Failure check_sequence_bridges(const Ranges& r, const VerifyPrimitives&) {
    for (Index n = 2; n <= r.sequence_bridge_n; ++n) {
        if (a_max(n) != a(Shift(1), n - 1)) {
            return describe("a_max(", n, ") != a_1(", n - 1, ")");
        }
    }
    for (Index n = 1; n <= r.sequence_bridge_n; ++n) {
        if (b_seq(n) != a(Shift(0), n)) {
            return describe("b(", n, ") != a_0(", n, ")");
        }
    }
    return std::nullopt;
}

Failure check_height_stability(const Ranges& r, const VerifyPrimitives&) {
    for (Index n = 1; n <= r.stability_n; ++n) {
        const Level h = b_seq_height(n);
        const Index reference = max_deepest_pairs(n + h, h);
        for (Level k = h + 1; k <= h + 4; ++k) {
            if (max_deepest_pairs(n + k, k) != reference) {
                return describe("n=", n, " k=", k);
            }
        }
    }
    return std::nullopt;
}

// Next tree of the unbounded greedy family.
LevelSequence unbounded_step(const LevelSequence& code) {
    if (code.leaves() != (Index{1} << code.height())) {
        return expand_leftmost(code);
    }
    std::vector<Level> levels;
    for (Level l : code.levels()) {
        levels.push_back(l + 1);
    }
    levels.push_back(1);
    return LevelSequence::from_levels(std::move(levels));
}

Failure check_shrink_round_trip(const Ranges& r, const VerifyPrimitives&) {
    LevelSequence previous = greedy_tree_unbounded(2);
    LevelSequence current = greedy_tree_unbounded(3);
    for (Index n = 3; n <= r.shrink_n; ++n) {
        const LevelSequence shrunk = shrink(current);
        if (unbounded_step(shrunk) != current) {
            return describe("n=", n, ": greedy step after shrink does not restore T(n)");
        }
        if (!is_power_of_two(n - 1) && shrunk != previous) {
            return describe("n=", n, ": shrink(T(n)) != T(n-1)");
        }
        if (n <= 256 && current != greedy_tree(n, ceil_log2(n))) {
            return describe("n=", n, ": T(n) differs from the height ceil(lg n) greedy tree");
        }
        previous = current;
        current = unbounded_step(current);
    }
    if (greedy_tree_unbounded(r.shrink_n) != previous) {
        return std::string("stepwise family differs from greedy_tree_unbounded");
    }
    return std::nullopt;
}

Failure check_counts_round_trip(const Ranges& r, const VerifyPrimitives&) {
    for (Index n = 2; n <= r.oracle_n; ++n) {
        for (const LevelSequence& code : enumerate_codes(n)) {
            if (code.height() > 8) {
                continue;
            }
            const LevelCounts counts = level_counts(code);
            if (counts_to_code(counts) != code || level_counts(counts_to_code(counts)) != counts) {
                return describe("code ", code.to_string());
            }
        }
    }
    return std::nullopt;
}

Failure check_partition_ones(const Ranges&, const VerifyPrimitives&) {
    for (Level h = 1; h <= 5; ++h) {
        for (Index n = h + 1; n <= (Index{1} << h); ++n) {
            if (max_ones_partition(n, h) != max_ones_partition_oracle(n, h)) {
                return describe("n=", n, " h=", h);
            }
        }
    }
    return std::nullopt;
}

// --- tree structure --------------------------------------------------------

Failure check_siblings(const Ranges& r, const VerifyPrimitives&) {
    const Index limit = std::min<Index>(r.tree_n, 5000);
    for (std::uint32_t s = 0; s <= 3; ++s) {
        const Shift sh(s);
        for (Index n = s + 3; n <= limit; ++n) {
            if (d(sh, n) != 1) {
                continue;
            }
            const NodeLocus here = locate(sh, n);
            const NodeLocus before = locate(sh, n - 1);
            if (d(sh, n - 1) == 1) {
                if (here.kind != NodeKind::subtree_node || before.kind != NodeKind::subtree_node ||
                    here.subtree != before.subtree || here.parent_offset != before.parent_offset ||
                    here.offset != before.offset + 1) {
                    return describe("s=", s, " n=", n, ": consecutive leaves are not siblings");
                }
            } else if (here.kind == NodeKind::subtree_node && before.kind == NodeKind::subtree_node &&
                       here.subtree == before.subtree && here.parent_offset != before.offset) {
                return describe("s=", s, " n=", n, ": leaf after an internal node is not its child");
            }
        }
    }
    return std::nullopt;
}

Failure check_label_partition(const Ranges& r, const VerifyPrimitives&) {
    for (std::uint32_t s = 0; s <= r.max_shift; ++s) {
        const Shift sh(s);
        Index expected_first = 2;
        unsigned expected_h = 1;
        for (Index n = 2; n <= r.tree_n;) {
            const ForestBlock super = forest_block(sh, n);
            if (s > 0) {
                if (super.kind != BlockKind::super_node || super.first != expected_first ||
                    super.last != super_node_first_label(sh, expected_h) + s - 1 || super.h != expected_h) {
                    return describe("s=", s, " n=", n, ": super-node block out of place");
                }
                n = super.last + 1;
            }
            const ForestBlock tree = forest_block(sh, n);
            if (tree.kind != BlockKind::subtree || tree.h != expected_h ||
                tree.first != subtree_first_label(sh, expected_h) ||
                tree.last - tree.first + 1 != (Index{1} << expected_h) - 1) {
                return describe("s=", s, " n=", n, ": subtree block out of place");
            }
            n = tree.last + 1;
            expected_first = n;
            ++expected_h;
        }
    }
    return std::nullopt;
}

Failure check_mul_laws(const Ranges&, const VerifyPrimitives&) {
    std::mt19937_64 rng(20260417);
    std::uniform_int_distribution<TruncatedSeries::Coeff> coeff(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t order = 1 + trial % 24;
        auto random_series = [&] {
            std::vector<TruncatedSeries::Coeff> c(order + 1);
            for (auto& x : c) {
                x = coeff(rng);
            }
            return TruncatedSeries(order, std::move(c));
        };
        const auto x = random_series();
        const auto y = random_series();
        const auto z = random_series();
        if (x * y != y * x || (x * y) * z != x * (y * z) || x * (y + z) != x * y + x * z) {
            return describe("trial ", trial);
        }
    }
    return std::nullopt;
}

const std::vector<Check>& checks() {
    static const std::vector<Check> list{
        {"a_s increments are 0 or 1", check_increments},
        {"a_s equals leaf count of F_s prefix", check_tree_oracle},
        {"consecutive leaves are siblings", check_siblings},
        {"forest labels split into super-nodes and subtrees", check_label_partition},
        {"fast evaluators agree with recurrence", check_fast_evaluators},
        {"p_s gaps follow ruler plus s at powers of two", check_p_gaps},
        {"p_s inverts a_s and a_s counts ones of d_s", check_p_inverse},
        {"a_0 doubling identity", check_doubling},
        {"generic evaluator reproduces a_s", check_generic},
        {"ruler generating function", check_ruler_gf},
        {"series coefficients equal d_s, a_s, p_s", check_series_vs_sequences},
        {"nested D_s form equals sum form", check_nested},
        {"D_n series support matches word D_n", check_dn_support},
        {"series product laws", check_mul_laws},
        {"E_n reversal, prefix and weight", check_word_identities},
        {"D_0 blocks equal morphism fixed point and d_0", check_d0_word},
        {"D_s word matches F_s leaves and p_s", check_dword_vs_tree},
        {"ruler factorization reproduces D_s word", check_ruler_factorization},
        {"ruler self-similarity", check_ruler_self_similarity},
        {"composition counts equal a_s", check_composition_counts},
        {"composition enumeration matches count", check_composition_enumeration},
        {"greedy M equals exhaustive maximum", check_m_oracle},
        {"greedy suffix sums dominate", check_dominance},
        {"a_max and b sequences equal a_1 and a_0", check_sequence_bridges},
        {"M stable in height", check_height_stability},
        {"shrink inverts greedy step", check_shrink_round_trip},
        {"level counts round trip", check_counts_round_trip},
        {"max ones in power-of-two partition", check_partition_ones},
    };
    return list;
}

}  // namespace

std::vector<std::string> verification_check_names() {
    std::vector<std::string> names;
    for (const Check& c : checks()) {
        names.push_back(c.name);
    }
    return names;
}

std::vector<CheckResult> run_verification(VerifyDepth depth, const VerifyPrimitives& prims) {
    const Ranges r = ranges_for(depth);
    std::vector<CheckResult> results;
    for (const Check& c : checks()) {
        CheckResult result;
        result.name = c.name;
        const auto start = std::chrono::steady_clock::now();
        try {
            const Failure failure = c.run(r, prims);
            result.passed = !failure;
            result.detail = failure.value_or("");
        } catch (const std::exception& e) {
            result.detail = std::string("exception: ") + e.what();
        }
        result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        results.push_back(std::move(result));
    }
    return results;
}

}  // namespace metafib
