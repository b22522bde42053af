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

#include "metafib/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace metafib {

namespace {

using Coeff = TruncatedSeries::Coeff;

Coeff checked_add(Coeff x, Coeff y) {
    Coeff out;
    if (__builtin_add_overflow(x, y, &out)) {
        throw std::overflow_error("series coefficient overflow in addition");
    }
    return out;
}

Coeff checked_mul(Coeff x, Coeff y) {
    Coeff out;
    if (__builtin_mul_overflow(x, y, &out)) {
        throw std::overflow_error("series coefficient overflow in multiplication");
    }
    return out;
}

std::size_t nonzero_count(std::span<const Coeff> c) {
    return static_cast<std::size_t>(std::count_if(c.begin(), c.end(), [](Coeff v) { return v != 0; }));
}

// 1 + z^m as a series of the given order.
TruncatedSeries one_plus_power(std::size_t m, std::size_t order) {
    TruncatedSeries out = TruncatedSeries::monomial(order, 0);
    out += TruncatedSeries::monomial(order, m);
    return out;
}

// True when z^{2^k} survives truncation at the given order.
bool power_of_two_fits(unsigned k, std::size_t order) {
    return k < 63 && (std::size_t{1} << k) <= order;
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1, 0) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<Coeff> coeffs)
    : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1, 0);
}

TruncatedSeries TruncatedSeries::monomial(std::size_t order, std::size_t k, Coeff c) {
    TruncatedSeries out(order);
    if (k <= order) {
        out.coeffs_[k] = c;
    }
    return out;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
    if (order > this->order()) {
        throw std::invalid_argument("cannot raise the order of a truncated series");
    }
    return TruncatedSeries(order, std::vector<Coeff>(coeffs_.begin(), coeffs_.begin() +
                                                                         static_cast<std::ptrdiff_t>(order + 1)));
}

bool TruncatedSeries::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c == 0; });
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] = checked_add(coeffs_[i], rhs.coeffs_[i]);
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    return *this += -rhs;
}

TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) {
    lhs += rhs;
    return lhs;
}

TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) {
    lhs -= rhs;
    return lhs;
}

TruncatedSeries operator-(const TruncatedSeries& x) { return scale(x, -1); }

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    const std::size_t order = std::min(lhs.order(), rhs.order());
    // Walk the nonzero terms of the sparser factor.
    const bool lhs_sparser = nonzero_count(lhs.coeffs()) <= nonzero_count(rhs.coeffs());
    const auto sparse = lhs_sparser ? lhs.coeffs() : rhs.coeffs();
    const auto dense = lhs_sparser ? rhs.coeffs() : lhs.coeffs();
    std::vector<Coeff> out(order + 1, 0);
    for (std::size_t i = 0; i <= order; ++i) {
        if (sparse[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (dense[j] != 0) {
                out[i + j] = checked_add(out[i + j], checked_mul(sparse[i], dense[j]));
            }
        }
    }
    return TruncatedSeries(order, std::move(out));
}

TruncatedSeries add(const TruncatedSeries& x, const TruncatedSeries& y) { return x + y; }

TruncatedSeries mul(const TruncatedSeries& x, const TruncatedSeries& y) { return x * y; }

TruncatedSeries scale(const TruncatedSeries& x, Coeff c) {
    std::vector<Coeff> out(x.coeffs().begin(), x.coeffs().end());
    for (Coeff& v : out) {
        v = checked_mul(v, c);
    }
    return TruncatedSeries(x.order(), std::move(out));
}

TruncatedSeries shift_by_power(const TruncatedSeries& x, std::size_t k) {
    const std::size_t order = x.order();
    std::vector<Coeff> out(order + 1, 0);
    for (std::size_t i = 0; i + k <= order && k <= order; ++i) {
        out[i + k] = x[i];
    }
    return TruncatedSeries(order, std::move(out));
}

TruncatedSeries divide_by_one_minus_power(const TruncatedSeries& x, std::size_t m) {
    if (m == 0) {
        throw std::invalid_argument("1 - z^0 is not invertible");
    }
    std::vector<Coeff> out(x.coeffs().begin(), x.coeffs().end());
    for (std::size_t i = m; i < out.size(); ++i) {
        out[i] = checked_add(out[i], out[i - m]);
    }
    return TruncatedSeries(x.order(), std::move(out));
}

TruncatedSeries geom_inverse(std::size_t m, std::size_t order) {
    return divide_by_one_minus_power(TruncatedSeries::monomial(order, 0), m);
}

TruncatedSeries gf_ruler(std::size_t order) {
    TruncatedSeries out(order);
    for (unsigned k = 0; power_of_two_fits(k, order); ++k) {
        const std::size_t m = std::size_t{1} << k;
        out += shift_by_power(geom_inverse(m, order), m);
    }
    return out;
}

TruncatedSeries gf_Dn(unsigned n, std::size_t order) {
    TruncatedSeries out = TruncatedSeries::monomial(order, std::size_t{n} + 1);
    for (unsigned j = 1; j <= n && power_of_two_fits(j, order + 1); ++j) {
        out = out * one_plus_power((std::size_t{1} << j) - 1, order);
    }
    return out;
}

TruncatedSeries gf_D0(std::size_t order) {
    TruncatedSeries out = TruncatedSeries::monomial(order, 1);
    for (unsigned j = 1; power_of_two_fits(j, order + 1); ++j) {
        out = out * one_plus_power((std::size_t{1} << j) - 1, order);
    }
    return out;
}

TruncatedSeries gf_Ds_sum(Shift s, std::size_t order) {
    const auto shift = static_cast<std::int64_t>(s.value());
    const auto top = static_cast<std::int64_t>(order);
    TruncatedSeries inner = TruncatedSeries::monomial(order, 0);
    // z^n prod_{j<=n} (1 + z^{2^j - 1}): the word D_n shifted down by one place.
    TruncatedSeries block = TruncatedSeries::monomial(order, 0);
    for (unsigned n = 0; n < 62; ++n) {
        const std::int64_t lead = (std::int64_t{1} << (n + 1)) + static_cast<std::int64_t>(n + 1) * (shift - 1);
        // z * z^lead * D_n(z) has lowest exponent 1 + lead + n.
        if (1 + lead + static_cast<std::int64_t>(n) > top) {
            break;
        }
        inner += shift_by_power(block, static_cast<std::size_t>(lead));
        // Next block: multiply by z (1 + z^{2^{n+1} - 1}).
        block = shift_by_power(block, 1) * one_plus_power((std::size_t{1} << (n + 1)) - 1, order);
    }
    return shift_by_power(inner, 1);
}

TruncatedSeries gf_Ds_nested(Shift s, std::size_t order, unsigned depth) {
    if (depth == 0 || depth >= 63 || (std::size_t{1} << depth) <= order) {
        throw std::invalid_argument("nested form needs 2^depth > order (depth " +
                                    std::to_string(depth) + ", order " + std::to_string(order) + ")");
    }
    const std::size_t shift = s.value();
    const TruncatedSeries one = TruncatedSeries::monomial(order, 0);
    TruncatedSeries inner = one;
    for (unsigned j = depth - 1; j >= 1; --j) {
        const std::size_t level = std::size_t{1} << j;
        TruncatedSeries term = shift_by_power(inner, shift + level);
        term = term * one_plus_power(level - 1, order);
        inner = one + term;
    }
    inner = one + shift_by_power(inner, shift + 1);
    return shift_by_power(inner, 1);
}

TruncatedSeries gf_As(Shift s, std::size_t order) {
    if (s.value() == 0) {
        throw std::invalid_argument("gf_As requires s >= 1; use gf_A_from_D for s = 0");
    }
    const std::size_t shift = s.value();
    TruncatedSeries sum = TruncatedSeries::monomial(order, 0);
    TruncatedSeries product = TruncatedSeries::monomial(order, 0);
    for (unsigned k = 1; 1 + k * shift <= order; ++k) {
        // z^{s-1} (z + z^{2^k}) = z^s + z^{2^k + s - 1}
        TruncatedSeries factor = TruncatedSeries::monomial(order, shift);
        if (power_of_two_fits(k, order)) {
            factor += TruncatedSeries::monomial(order, (std::size_t{1} << k) + shift - 1);
        }
        product = product * factor;
        sum += product;
    }
    TruncatedSeries bracket = shift_by_power(sum, 1);
    // (1 - z^s) / (1 - z)
    bracket = bracket - shift_by_power(bracket, shift);
    return divide_by_one_minus_power(bracket, 1);
}

TruncatedSeries gf_A_from_D(Shift s, std::size_t order) {
    return divide_by_one_minus_power(gf_Ds_sum(s, order), 1);
}

TruncatedSeries gf_Ps(Shift s, std::size_t order) {
    const TruncatedSeries one = TruncatedSeries::monomial(order, 0);
    TruncatedSeries sum(order);
    for (unsigned k = 0; power_of_two_fits(k, order); ++k) {
        const std::size_t m = std::size_t{1} << k;
        TruncatedSeries bracket = scale(one, static_cast<Coeff>(s.value())) + geom_inverse(m, order);
        sum += shift_by_power(bracket, m);
    }
    return divide_by_one_minus_power(one + shift_by_power(sum, 1), 1);
}

}  // namespace metafib
