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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "metafib/sequences.hpp"

namespace metafib {

/// Power series with exact integer coefficients, known modulo z^{order+1}.
///
/// Binary operations produce a result of the smaller order of the two
/// operands. Coefficient arithmetic is overflow-checked and throws
/// std::overflow_error.
class TruncatedSeries {
public:
    using Coeff = std::int64_t;

    /// The zero series of the given order.
    explicit TruncatedSeries(std::size_t order);

    /// Coefficients c_0, c_1, ...; missing ones are zero, extra ones are
    /// dropped.
    TruncatedSeries(std::size_t order, std::vector<Coeff> coeffs);

    /// c * z^k (zero if k > order).
    static TruncatedSeries monomial(std::size_t order, std::size_t k, Coeff c = 1);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    Coeff operator[](std::size_t i) const { return coeffs_.at(i); }
    std::span<const Coeff> coeffs() const noexcept { return coeffs_; }

    /// Same series known to a lower order.
    TruncatedSeries truncated(std::size_t order) const;

    bool is_zero() const noexcept;

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);

    friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs);
    friend TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs);
    friend TruncatedSeries operator-(const TruncatedSeries& x);
    /// Cauchy product.
    friend TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Coeff> coeffs_;
};

TruncatedSeries add(const TruncatedSeries& x, const TruncatedSeries& y);
TruncatedSeries mul(const TruncatedSeries& x, const TruncatedSeries& y);
TruncatedSeries scale(const TruncatedSeries& x, TruncatedSeries::Coeff c);

/// z^k * x, keeping the order of x.
TruncatedSeries shift_by_power(const TruncatedSeries& x, std::size_t k);

/// x / (1 - z^m), i.e. c'_i = c_i + c'_{i-m}.
TruncatedSeries divide_by_one_minus_power(const TruncatedSeries& x, std::size_t m);

/// 1 / (1 - z^m) to the given order.
TruncatedSeries geom_inverse(std::size_t m, std::size_t order);

// Generating functions. Each returns the series to the requested order.

/// sum_{k>=0} z^{2^k} / (1 - z^{2^k}); coefficient n is ruler(n).
TruncatedSeries gf_ruler(std::size_t order);

/// Generating function sum_i D_n[i] z^i of the word D_n (1-indexed), which
/// is z^{n+1} prod_{j=1}^n (1 + z^{2^j - 1}).
TruncatedSeries gf_Dn(unsigned n, std::size_t order);

/// z prod_{n>=1} (1 + z^{2^n - 1}).
TruncatedSeries gf_D0(std::size_t order);

/// z (1 + sum_{n>=0} z^{2^{n+1} + (n+1)(s-1)} z^n prod_{j=1}^n (1 + z^{2^j - 1}));
/// coefficient n is d_s(n). The inner product is gf_Dn(n) / z.
TruncatedSeries gf_Ds_sum(Shift s, std::size_t order);

/// Nested form z(1 + z^{s+1}(1 + z^{s+2}[1+z](1 + z^{s+4}[1+z^3](1 + ...
/// evaluated inside out over `depth` levels. Requires 2^depth > order, which
/// makes the truncation exact; throws std::invalid_argument otherwise.
TruncatedSeries gf_Ds_nested(Shift s, std::size_t order, unsigned depth);

/// (1 - z^s)/(1 - z) * (z + z sum_{n>=1} prod_{k=1}^n z^{s-1}(z + z^{2^k}));
/// coefficient n is a_s(n). Requires s >= 1.
TruncatedSeries gf_As(Shift s, std::size_t order);

/// gf_Ds_sum / (1 - z); valid for every s. The constant term is 0.
TruncatedSeries gf_A_from_D(Shift s, std::size_t order);

/// 1/(1-z) (1 + z sum_{k>=0} z^{2^k} (s + 1/(1 - z^{2^k})));
/// coefficient n >= 1 is p_s(n), the constant term is 1.
TruncatedSeries gf_Ps(Shift s, std::size_t order);

}  // namespace metafib
