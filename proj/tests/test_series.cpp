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

#include <doctest.h>

#include "blowup/series.hpp"
#include "test_util.hpp"

using namespace blowup;
using blowup::testing::Gen;
using blowup::testing::X;

namespace {

Series t_pow(int e, int n) { return Series::monomial(Poly(1), e, n); }

// exp by the defining sum  sum_n f^n / n!, independent of the recurrence.
Series naive_exp(const Series& f) {
    const int n = f.truncation();
    Series total = Series::monomial(Poly(1), 0, n);
    Series power = total;
    for (int m = 1; m <= n; ++m) {
        power = power * f;
        total += power * Poly(Rational(1) / factorial(static_cast<unsigned>(m)));
    }
    return total;
}

}  // namespace

TEST_CASE("canonical form and coefficient access") {
    const Series s(0, {Poly{}, Poly{}, Poly(3)}, 5);
    CHECK(s.offset() == 2);
    CHECK(s.truncation() == 5);
    CHECK(s.coeff(2) == Poly(3));
    CHECK(s.coeff(4).is_zero());
    CHECK(s.coeff(-7).is_zero());
    CHECK_THROWS_AS((void)s.coeff(6), std::out_of_range);
    CHECK_THROWS_AS(Series(0, {Poly(1), Poly(1)}, 0), std::invalid_argument);
    const Series z(4);
    CHECK(z.is_zero());
    CHECK(z.valuation() == 5);
}

TEST_CASE("series_add and series_mul") {
    CHECK(t_pow(-2, 6) * t_pow(2, 6) == t_pow(0, 4));
    const Series one_plus_t = Series::from_terms({Poly(1), Poly(1)}, 6);
    const Series one_minus_t = Series::from_terms({Poly(1), Poly(-1)}, 6);
    CHECK(one_plus_t * one_minus_t == Series::from_terms({Poly(1), Poly{}, Poly(-1)}, 6));
    const Series f = Series::from_terms({Poly(2), X(), Poly(5)}, 6);
    CHECK((f * Series(6)).is_zero());
    CHECK((f + Series(6)) == f);
    CHECK((f - f).is_zero());
}

TEST_CASE("truncation bookkeeping of products") {
    // valuations 1 and -2, truncations 7 and 4: min(7 - 2, 4 + 1) = 5
    const Series a(1, {Poly(1), Poly(2)}, 7);
    const Series b(-2, {Poly(1), X()}, 4);
    CHECK((a * b).truncation() == 5);
    CHECK((a * b).offset() == -1);
    // the zero series f*0 keeps the precision its factors justify
    const Series z(3);
    CHECK((a * z).truncation() == 1 + 3);
    CHECK((a + b).truncation() == 4);
    CHECK(diff(a).truncation() == 6);
    CHECK(integrate(a).truncation() == 8);
}

TEST_CASE("series_div") {
    const Series geometric = Series::monomial(Poly(1), 0, 8) / Series::from_terms({Poly(1), Poly(-1)}, 8);
    for (int e = 0; e <= 8; ++e) CHECK(geometric.coeff(e) == Poly(1));
    CHECK(geometric.truncation() == 8);

    const Series t = t_pow(1, 9);
    const Series one = t / t;
    CHECK(one == t_pow(0, 8));

    CHECK_THROWS_AS(t / Series::from_terms({X(), Poly(1)}, 5), SeriesError);
    try {
        (void)(t / Series(5));
        FAIL("expected LeadingNotUnit");
    } catch (const SeriesError& e) {
        CHECK(e.code() == SeriesErrc::LeadingNotUnit);
    }
}

TEST_CASE("series_exp") {
    CHECK(exp(Series(6)) == t_pow(0, 6));
    // exp(-t^2 x / 6) = 1 - (x/6) t^2 + (x^2/72) t^4 - (x^3/1296) t^6
    const Series g = exp(Series::monomial(-X() / Rational(6), 2, 6));
    CHECK(g.coeff(0) == Poly(1));
    CHECK(g.coeff(2) == -X() / Rational(6));
    CHECK(g.coeff(4) == X() * X() / Rational(72));
    CHECK(g.coeff(6) == -(X() * X() * X()) / Rational(1296));
    // exp(-2 t^4 / 4!) = 1 - t^4/12 + t^8/288
    const Series h = exp(Series::monomial(Poly(Rational(-1, 12)), 4, 10));
    CHECK(h.coeff(4) == Poly(Rational(-1, 12)));
    CHECK(h.coeff(8) == Poly(Rational(1, 288)));
    CHECK(h.coeff(6).is_zero());

    try {
        (void)exp(Series::from_terms({Poly(1), Poly(1)}, 4));
        FAIL("expected NonzeroConstantTerm");
    } catch (const SeriesError& e) {
        CHECK(e.code() == SeriesErrc::NonzeroConstantTerm);
    }
    CHECK_THROWS_AS((void)exp(t_pow(-1, 4)), SeriesError);
}

TEST_CASE("series_sqrt") {
    CHECK(sqrt(t_pow(0, 5)) == t_pow(0, 5));
    // sqrt(1 + (x/3) t^2) = 1 + (x/6) t^2 - (x^2/72) t^4 + ...
    const Series r = sqrt(Series::from_terms({Poly(1), Poly{}, X() / Rational(3)}, 6));
    CHECK(r.coeff(2) == X() / Rational(6));
    CHECK(r.coeff(4) == -(X() * X()) / Rational(72));
    CHECK(r.coeff(6) == X() * X() * X() / Rational(432));
    const Series t = sqrt(t_pow(2, 8));
    CHECK(t.offset() == 1);
    CHECK(t.coeff(1) == Poly(1));
    CHECK(t.truncation() == 7);

    try {
        (void)sqrt(t_pow(3, 8));
        FAIL("expected OddOffset");
    } catch (const SeriesError& e) {
        CHECK(e.code() == SeriesErrc::OddOffset);
    }
    try {
        (void)sqrt(Series::monomial(Poly(4), 0, 3));
        FAIL("expected LeadingNotOne");
    } catch (const SeriesError& e) {
        CHECK(e.code() == SeriesErrc::LeadingNotOne);
    }
}

TEST_CASE("series_diff and series_integrate") {
    CHECK(diff(t_pow(2, 6)) == Series::monomial(Poly(2), 1, 5));
    const Series f = Series::from_terms({Poly(7), X(), Poly(3), X() * X()}, 6);
    CHECK(integrate(diff(f), f.coeff(0)) == f);
    const Series laurent(-3, {Poly(1), Poly(2), Poly{}, Poly(1)}, 2);
    CHECK(diff(integrate(laurent)) == laurent);
    try {
        (void)integrate(t_pow(-1, 3));
        FAIL("expected ResidueObstruction");
    } catch (const SeriesError& e) {
        CHECK(e.code() == SeriesErrc::ResidueObstruction);
    }
}

TEST_CASE("property: Leibniz rule") {
    Gen g(11);
    for (int i = 0; i < 60; ++i) {
        const Series a = g.series(-3, 3), b = g.series(-3, 3);
        const Series lhs = diff(a * b);
        const Series rhs = diff(a) * b + a * diff(b);
        const int n = std::min(lhs.truncation(), rhs.truncation());
        CHECK(lhs.truncated(n) == rhs.truncated(n));
    }
}

TEST_CASE("property: exp agrees with its defining sum and with (exp f)' = f' exp f") {
    Gen g(12);
    for (int i = 0; i < 25; ++i) {
        const Series f = g.series(1, 3, 9, 2);
        const Series e = exp(f);
        CHECK(e == naive_exp(f));
        const Series lhs = diff(e);
        const Series rhs = diff(f) * e;
        const int n = std::min(lhs.truncation(), rhs.truncation());
        CHECK(lhs.truncated(n) == rhs.truncated(n));
    }
}

TEST_CASE("property: sqrt(f)^2 = f and division inverts multiplication") {
    Gen g(13);
    for (int i = 0; i < 40; ++i) {
        Series tail = g.series(1, 4, 8, 2);
        const int v = 2 * g.integer(-2, 2);
        const Series f = (Series::monomial(Poly(1), 0, tail.truncation()) + tail).shifted(v);
        const Series r = sqrt(f);
        const Series sq = r * r;
        CHECK(sq.truncation() == f.truncation());
        CHECK(sq == f);

        const Series a = g.series(-2, 2);
        Series b = f;
        b *= Poly(g.integer(1, 5));
        const Series q = a / b;
        const Series back = q * b;
        const int n = back.truncation();
        CHECK(n <= a.truncation());
        CHECK(back == a.truncated(n));
    }
}

TEST_CASE("property: truncation monotonicity") {
    Gen g(14);
    for (int i = 0; i < 20; ++i) {
        const Series f = g.series(1, 2, 12, 2);
        const Series lo = exp(f.truncated(8));
        const Series hi = exp(f);
        CHECK(hi.truncated(8) == lo);
    }
}
