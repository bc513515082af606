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

#ifndef BLOWUP_WEIERSTRASS_HPP
#define BLOWUP_WEIERSTRASS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "blowup/poly.hpp"
#include "blowup/series.hpp"

namespace blowup {

/// Outcome of one exact identity check.
struct IdentityCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

[[nodiscard]] bool all_passed(const std::vector<IdentityCheck>& checks);

/// g2 = (4/3)x^2 - 4 and g3 = (8x^3 - 36x)/27 for the cubic 4y^3 - g2 y - g3.
struct WeierstrassInvariants {
    Poly g2;
    Poly g3;
};

WeierstrassInvariants make_invariants();

/// The rational root e3 = -x/3 together with the elementary symmetric
/// functions of all three roots. e1 and e2 need sqrt(x^2 - 4) and are only
/// ever touched through s1, s2, s3.
struct RootData {
    Poly e3;
    Poly s1;
    Poly s2;
    Poly s3;
};

RootData make_root_data();

/// Coefficients of the c_k recurrence for the Laurent expansion of p.
/// c2 = g2 / c2_divisor, c3 = g3 / c3_divisor. Anything other than the
/// defaults exists only to exercise the residual checks.
struct PeRecurrence {
    Rational c2_divisor{20};
    Rational c3_divisor{28};
};

/// Laurent expansion of the Weierstrass p-function, exact through t^n (n >= 2):
///   t^-2 + sum_{k>=2} c_k t^{2k-2},
///   c_k = 3 / ((2k+1)(k-3)) * sum_{m=2}^{k-2} c_m c_{k-m}   (k >= 4).
Series pe_series(int n, const PeRecurrence& rec = {});
/// zeta = 1/t - integral(p - t^-2), odd, exact through t^n (n >= 1).
Series zeta_series(int n);
/// sigma = t exp(integral(zeta - 1/t)), odd, sigma = t + O(t^5); exact through t^n.
Series sigma_series(int n);
/// sigma_3 = (sigma / t) sqrt(t^2 (p - e3)) for e3 = -x/3; even, constant term 1.
Series sigma3_series(int n);

/// p, zeta, sigma and sigma_3 all known through t^order.
struct EllipticBundle {
    Series pe;
    Series zeta;
    Series sigma;
    Series sigma3;
    int order = 0;
};

class WeierstrassError : public std::runtime_error {
public:
    explicit WeierstrassError(const std::string& what) : std::runtime_error(what) {}
};

/// Builds the bundle without validating it.
EllipticBundle build_bundle(int order, const PeRecurrence& rec = {});
/// Builds the bundle and runs bundle_self_test; throws WeierstrassError if
/// any residual is nonzero.
EllipticBundle make_bundle(int order);

/// Series residuals and parity checks:
///   (p')^2 - 4p^3 + g2 p + g3,  zeta' + p,  sigma' - zeta sigma,
///   sigma3^2 - sigma^2 (p - e3),
/// each required to vanish through its truncation.
std::vector<IdentityCheck> bundle_self_test(const EllipticBundle& bundle);

/// Exact identities of the root data:
///   4 e3^3 - g2 e3 - g3 = 0, (12 e3^2 - g2)/4 = 1, Vieta reconstruction of
///   4s^3 - g2 s - g3, root-difference product = x^2 - 4, g2^3 - 27 g3^2 = 16(x^2 - 4).
std::vector<IdentityCheck> root_identities();

/// Product of squared root differences computed from s1, s2, s3 alone.
Poly root_difference_product(const RootData& roots);

}  // namespace blowup

#endif
