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

#include "blowup/reduce.hpp"

#include <string>

namespace blowup {

ReductionResult reduce_monomial(const ExceptionalMonomial& q, const BlowupTable& table) {
    if (q.exponents.size() != q.twisted.size())
        throw std::invalid_argument("reduce_monomial: exponents and twisted flags differ in length");
    ReductionResult r{Poly(1), false};
    for (std::size_t i = 0; i < q.size(); ++i) {
        const int k = q.exponents[i];
        if (k < 0) throw std::invalid_argument("reduce_monomial: negative exponent");
        if (k > table.max_k)
            throw TableTooSmall("reduce_monomial: exponent " + std::to_string(k) + " exceeds table order " +
                                std::to_string(table.max_k));
        const bool tw = q.twisted[i];
        if (tw ? !table.has_s() : !table.has_b())
            throw TableTooSmall(std::string("reduce_monomial: table lacks the ") + (tw ? "S" : "B") + " column");
        if (tw ? (k % 2 == 0) : (k % 2 == 1)) r.vanishes = true;
        r.polynomial *= tw ? table.s[k] : table.b[k];
    }
    return r;
}

Rational simple_type_specialize(const Poly& p) { return p.eval(Rational(2)); }

std::vector<Rational> simple_type_series(SeriesKind kind, int max_k) {
    if (max_k < 0) throw std::invalid_argument("simple_type_series: order must be non-negative");
    // exp(-t^2/2) = sum_j (-1/2)^j t^(2j) / j!;  cosh/sinh t = sum over even/odd m of t^m / m!.
    const int parity = kind == SeriesKind::B ? 0 : 1;
    std::vector<Rational> out;
    for (int k = 0; k <= max_k; ++k) {
        Rational sum;
        for (int j = 0; 2 * j <= k; ++j) {
            const int m = k - 2 * j;
            if (m % 2 != parity) continue;
            Rational term = factorial(static_cast<unsigned>(k)) /
                            (factorial(static_cast<unsigned>(j)) * factorial(static_cast<unsigned>(m)));
            Rational half(1);
            for (int i = 0; i < j; ++i) half *= Rational(-1, 2);
            sum += term * half;
        }
        out.push_back(sum);
    }
    return out;
}

bool simple_type_crosscheck(int max_k, const BlowupTable& table) {
    if (table.max_k < max_k || !table.has_b() || !table.has_s())
        throw TableTooSmall("simple_type_crosscheck: table does not cover the requested order");
    const auto bs = simple_type_series(SeriesKind::B, max_k);
    const auto ss = simple_type_series(SeriesKind::S, max_k);
    for (int k = 0; k <= max_k; ++k) {
        if (simple_type_specialize(table.b[k]) != bs[k]) return false;
        if (simple_type_specialize(table.s[k]) != ss[k]) return false;
    }
    return true;
}

}  // namespace blowup
