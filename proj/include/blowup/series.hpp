/*
   Copyright 2026 The blowup authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BLOWUP_SERIES_HPP
#define BLOWUP_SERIES_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "blowup/poly.hpp"

namespace blowup {

enum class SeriesErrc {
    LeadingNotUnit,
    NonzeroConstantTerm,
    OddOffset,
    LeadingNotOne,
    ResidueObstruction,
};

const char* to_string(SeriesErrc code);

class SeriesError : public std::domain_error {
public:
    SeriesError(SeriesErrc code, const std::string& what)
        : std::domain_error(what), code_(code) {}
    [[nodiscard]] SeriesErrc code() const { return code_; }

private:
    SeriesErrc code_;
};

/// Truncated formal Laurent series in t with Poly coefficients.
///
/// Models  sum_{e = offset}^{N} c_e t^e + O(t^{N+1}) : every coefficient with
/// exponent <= N (the truncation) is exact, nothing above it is known.
/// Coefficients are plain Taylor coefficients (no factorial weights).
///
/// Canonical form: the coefficient at offset() is nonzero. A series that
/// vanishes through its truncation holds no coefficients; its valuation() is
/// then N+1, which is what the truncation arithmetic below needs.
///
/// Truncation bookkeeping, with valuations v and truncations N:
///   add/sub   min(N1, N2)
///   mul       min(N1 + v2, N2 + v1)
///   inverse   N - 2v
///   sqrt      N - v/2
///   diff      N - 1
///   integrate N + 1
class Series {
public:
    /// The zero series known through t^truncation.
    explicit Series(int truncation = 0);
    /// Coefficients for exponents offset, offset+1, ...; the truncation must
    /// cover every supplied coefficient.
    Series(int offset, std::vector<Poly> coeffs, int truncation);

    /// A polynomial in t, exact through t^truncation.
    static Series from_terms(const std::vector<Poly>& coeffs_from_t0, int truncation);
    /// c * t^exponent, exact through t^truncation.
    static Series monomial(const Poly& c, int exponent, int truncation);

    [[nodiscard]] int truncation() const { return trunc_; }
    /// Lowest exponent with a nonzero coefficient; truncation + 1 when zero.
    [[nodiscard]] int valuation() const { return c_.empty() ? trunc_ + 1 : offset_; }
    /// Same as valuation() for nonzero series; defined for zero so callers can
    /// test offset() <= truncation() as the nonzero condition.
    [[nodiscard]] int offset() const { return valuation(); }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }

    /// Coefficient of t^exponent. Throws std::out_of_range above the truncation.
    [[nodiscard]] Poly coeff(int exponent) const;
    [[nodiscard]] Poly leading() const;

    /// Drops all knowledge above t^n (n may not exceed the current truncation).
    [[nodiscard]] Series truncated(int n) const;
    /// t^k * f.
    [[nodiscard]] Series shifted(int k) const;

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Poly& c);

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator-(Series a);
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(Series a, const Poly& c) { return a *= c; }
    friend Series operator*(const Poly& c, Series a) { return a *= c; }
    /// Throws SeriesError{LeadingNotUnit} unless the leading coefficient of b
    /// is a nonzero rational constant.
    friend Series operator/(const Series& a, const Series& b);

    friend bool operator==(const Series& a, const Series& b) = default;

    /// Compact debugging form, e.g. "t^-2 + (1/15*x^2 - 1/5)*t^2 + O(t^5)".
    [[nodiscard]] std::string to_string() const;

private:
    void normalize();

    int offset_ = 0;
    std::vector<Poly> c_;
    int trunc_ = 0;
};

/// exp(f) for f with zero constant term, through f's truncation.
/// Throws SeriesError{NonzeroConstantTerm}.
Series exp(const Series& f);

/// The square root with leading coefficient +1 of t^(2a) (1 + ...).
/// Throws SeriesError{OddOffset} or SeriesError{LeadingNotOne}.
Series sqrt(const Series& f);

Series diff(const Series& f);

/// Antiderivative with the given constant term. Throws
/// SeriesError{ResidueObstruction} if f has a nonzero t^-1 coefficient.
Series integrate(const Series& f, const Poly& constant = Poly{});

}  // namespace blowup

#endif
