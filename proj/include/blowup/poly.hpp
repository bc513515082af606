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

#ifndef BLOWUP_POLY_HPP
#define BLOWUP_POLY_HPP

#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "blowup/rational.hpp"

namespace blowup {

/// Dense univariate polynomial in the formal variable x over the rationals.
///
/// coeffs()[i] is the coefficient of x^i. The representation is canonical:
/// the highest stored coefficient is nonzero, and the zero polynomial has no
/// coefficients at all.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
    Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    Poly(int c) : Poly(Rational(c)) {}   // NOLINT(google-explicit-constructor)
    Poly(std::initializer_list<Rational> coeffs);
    explicit Poly(std::vector<Rational> coeffs);

    /// The monomial c*x^power.
    static Poly monomial(const Rational& c, unsigned power);
    static Poly x() { return monomial(Rational(1), 1); }

    [[nodiscard]] std::span<const Rational> coeffs() const { return c_; }
    /// Coefficient of x^power; zero beyond the degree.
    [[nodiscard]] Rational coeff(std::size_t power) const;
    /// Degree, or -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    /// True for polynomials of degree <= 0 (including zero).
    [[nodiscard]] bool is_constant() const { return c_.size() <= 1; }
    [[nodiscard]] Rational constant_term() const { return coeff(0); }

    /// Horner evaluation at a.
    [[nodiscard]] Rational eval(const Rational& a) const;
    /// p(-x).
    [[nodiscard]] Poly reflect() const;
    [[nodiscard]] bool all_integer() const;

    /// Human-readable form with descending powers, e.g. "-512*x^4 - 960*x^2 - 408".
    [[nodiscard]] std::string to_string() const;
    /// Same layout with decimal coefficients; display only.
    [[nodiscard]] std::string to_approx_string() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);
    /// Exact division by a nonzero scalar.
    Poly& operator/=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator/(Poly a, const Rational& c) { return a /= c; }
    friend Poly operator-(Poly a);

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
        return os << p.to_string();
    }

private:
    void normalize();
    std::vector<Rational> c_;
};

Poly pow(const Poly& p, unsigned n);

}  // namespace blowup

#endif
