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

#include "blowup/weierstrass.hpp"

#include <algorithm>

namespace blowup {

bool all_passed(const std::vector<IdentityCheck>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

WeierstrassInvariants make_invariants() {
    return {
        Poly{Rational(-4), Rational(0), Rational(4, 3)},
        Poly{Rational(0), Rational(-36, 27), Rational(0), Rational(8, 27)},
    };
}

RootData make_root_data() {
    const auto inv = make_invariants();
    return {
        Poly{Rational(0), Rational(-1, 3)},
        Poly{},
        -inv.g2 / Rational(4),
        inv.g3 / Rational(4),
    };
}

Series pe_series(int n, const PeRecurrence& rec) {
    if (n < 2) throw std::invalid_argument("pe_series: order must be at least 2");
    const auto inv = make_invariants();
    // Exponent 2k - 2 <= n.
    const int kmax = (n + 2) / 2;
    std::vector<Poly> c(static_cast<std::size_t>(std::max(kmax, 3) + 1));
    c[2] = inv.g2 / rec.c2_divisor;
    c[3] = inv.g3 / rec.c3_divisor;
    for (int k = 4; k <= kmax; ++k) {
        Poly acc;
        for (int m = 2; m <= k - 2; ++m) acc += c[m] * c[k - m];
        c[k] = acc * Rational(3, (2L * k + 1) * (k - 3));
    }
    std::vector<Poly> dense(static_cast<std::size_t>(n + 3));
    dense[0] = Poly(1);
    for (int k = 2; k <= kmax; ++k) dense[2 * k - 2 + 2] = c[k];
    return Series(-2, std::move(dense), n);
}

namespace {

Series zeta_from(const Series& pe) {
    const int n = pe.truncation();
    const Series principal = Series::monomial(Poly(1), -2, n);
    return Series::monomial(Poly(1), -1, n + 1) - integrate(pe - principal);
}

Series sigma_from(const Series& zeta) {
    const int n = zeta.truncation();
    const Series regular = zeta - Series::monomial(Poly(1), -1, n);
    return exp(integrate(regular)).shifted(1);
}

Series sigma3_from(const Series& sigma, const Series& pe) {
    const Poly e3 = make_root_data().e3;
    const Series shifted_pe = pe - Series::monomial(e3, 0, pe.truncation());
    return sigma.shifted(-1) * sqrt(shifted_pe.shifted(2));
}

}  // namespace

Series zeta_series(int n) {
    if (n < 1) throw std::invalid_argument("zeta_series: order must be at least 1");
    return zeta_from(pe_series(std::max(n - 1, 2))).truncated(n);
}

Series sigma_series(int n) {
    if (n < 1) throw std::invalid_argument("sigma_series: order must be at least 1");
    return sigma_from(zeta_from(pe_series(std::max(n - 3, 2)))).truncated(n);
}

Series sigma3_series(int n) {
    if (n < 0) throw std::invalid_argument("sigma3_series: order must be non-negative");
    const Series pe = pe_series(std::max(n - 2, 2));
    return sigma3_from(sigma_from(zeta_from(pe)), pe).truncated(n);
}

EllipticBundle build_bundle(int order, const PeRecurrence& rec) {
    if (order < 2) throw std::invalid_argument("build_bundle: order must be at least 2");
    Series pe = pe_series(order, rec);
    Series zeta = zeta_from(pe);
    Series sigma = sigma_from(zeta);
    Series sigma3 = sigma3_from(sigma, pe);
    return {std::move(pe), zeta.truncated(order), sigma.truncated(order), sigma3.truncated(order), order};
}

EllipticBundle make_bundle(int order) {
    EllipticBundle b = build_bundle(order);
    for (const auto& check : bundle_self_test(b))
        if (!check.passed) throw WeierstrassError("Weierstrass self-test failed: " + check.name + " (" + check.detail + ")");
    return b;
}

namespace {

IdentityCheck vanishes(std::string name, const Series& residual) {
    IdentityCheck c{std::move(name), residual.is_zero(), {}};
    if (c.passed) {
        c.detail = "zero through t^" + std::to_string(residual.truncation());
    } else {
        c.detail = "first nonzero coefficient at t^" + std::to_string(residual.offset()) + ": " +
                   residual.leading().to_string();
    }
    return c;
}

IdentityCheck parity(std::string name, const Series& s, int parity_bit) {
    IdentityCheck c{std::move(name), true, {}};
    for (int e = s.offset(); e <= s.truncation(); ++e) {
        if (((e % 2) + 2) % 2 == parity_bit) continue;
        if (!s.coeff(e).is_zero()) {
            c.passed = false;
            c.detail = "nonzero coefficient at t^" + std::to_string(e);
            return c;
        }
    }
    c.detail = "through t^" + std::to_string(s.truncation());
    return c;
}

IdentityCheck poly_equals(std::string name, const Poly& got, const Poly& want) {
    return {std::move(name), got == want, "got " + got.to_string() + ", expected " + want.to_string()};
}

}  // namespace

std::vector<IdentityCheck> bundle_self_test(const EllipticBundle& bundle) {
    const auto inv = make_invariants();
    const auto roots = make_root_data();
    const Series& pe = bundle.pe;
    const int n = pe.truncation();

    const Series dpe = diff(pe);
    const Series ode = dpe * dpe - Series::monomial(Poly(4), 0, n) * pe * pe * pe + inv.g2 * pe +
                       Series::monomial(inv.g3, 0, n);

    const Series& zeta = bundle.zeta;
    const Series& sigma = bundle.sigma;
    const Series& sigma3 = bundle.sigma3;
    const Series pe_minus_e3 = pe - Series::monomial(roots.e3, 0, n);

    std::vector<IdentityCheck> out;
    out.push_back(vanishes("p-ODE residual (p')^2 - 4p^3 + g2 p + g3", ode));
    out.push_back(vanishes("zeta' + p", diff(zeta) + pe));
    out.push_back(vanishes("sigma' - zeta sigma", diff(sigma) - zeta * sigma));
    out.push_back(vanishes("sigma3^2 - sigma^2 (p - e3)", sigma3 * sigma3 - sigma * sigma * pe_minus_e3));
    out.push_back(parity("p is even", pe, 0));
    out.push_back(parity("zeta is odd", zeta, 1));
    out.push_back(parity("sigma is odd", sigma, 1));
    out.push_back(parity("sigma3 is even", sigma3, 0));

    IdentityCheck principal{"principal parts", true, {}};
    if (!(pe.offset() == -2 && pe.coeff(-2) == Poly(1) && pe.coeff(-1).is_zero() && pe.coeff(0).is_zero()) ||
        !(zeta.offset() == -1 && zeta.coeff(-1) == Poly(1)) ||
        !(sigma.offset() == 1 && sigma.coeff(1) == Poly(1)) ||
        !(sigma3.offset() == 0 && sigma3.coeff(0) == Poly(1))) {
        principal.passed = false;
        principal.detail = "unexpected leading terms";
    }
    out.push_back(principal);
    return out;
}

Poly root_difference_product(const RootData& r) {
    // Monic cubic s^3 + a s^2 + b s + c with a = -s1, b = s2, c = -s3.
    const Poly a = -r.s1;
    const Poly& b = r.s2;
    const Poly c = -r.s3;
    return a * a * b * b - Rational(4) * pow(b, 3) - Rational(4) * pow(a, 3) * c -
           Rational(27) * c * c + Rational(18) * a * b * c;
}

std::vector<IdentityCheck> root_identities() {
    const auto inv = make_invariants();
    const auto r = make_root_data();
    const Poly& e3 = r.e3;
    const Poly x = Poly::x();
    const Poly x2m4 = x * x - Poly(4);

    std::vector<IdentityCheck> out;
    out.push_back(poly_equals("4 e3^3 - g2 e3 - g3 = 0",
                              Rational(4) * pow(e3, 3) - inv.g2 * e3 - inv.g3, Poly{}));
    out.push_back(poly_equals("(e3 - e1)(e3 - e2) = (12 e3^2 - g2)/4 = 1",
                              (Rational(12) * e3 * e3 - inv.g2) / Rational(4), Poly(1)));

    // 4(s^3 - s1 s^2 + s2 s - s3) against 4 s^3 - g2 s - g3, coefficient by power of s.
    const std::vector<Poly> vieta{Rational(-4) * r.s3, Rational(4) * r.s2, Rational(-4) * r.s1, Poly(4)};
    const std::vector<Poly> cubic{-inv.g3, -inv.g2, Poly{}, Poly(4)};
    IdentityCheck v{"Vieta reconstruction of 4s^3 - g2 s - g3", vieta == cubic, {}};
    v.detail = v.passed ? "all four coefficients agree" : "coefficient mismatch";
    out.push_back(v);

    out.push_back(poly_equals("root-difference product (e1-e2)^2 (e1-e3)^2 (e2-e3)^2 = x^2 - 4",
                              root_difference_product(r), x2m4));
    out.push_back(poly_equals("g2^3 - 27 g3^2 = 16(x^2 - 4)",
                              pow(inv.g2, 3) - Rational(27) * pow(inv.g3, 2), Rational(16) * x2m4));
    IdentityCheck e3root{"e3 is the rational root -x/3", e3 == Poly{Rational(0), Rational(-1, 3)}, e3.to_string()};
    out.push_back(e3root);
    return out;
}

}  // namespace blowup
