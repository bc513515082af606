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

#ifndef BLOWUP_REDUCE_HPP
#define BLOWUP_REDUCE_HPP

#include <stdexcept>
#include <vector>

#include "blowup/poly.hpp"
#include "blowup/tables.hpp"

namespace blowup {

/// e_1^{k_1} ... e_n^{k_n} on an n-fold blowup. A twisted class carries the
/// w2 lift, so its factor is S_{k_i} instead of B_{k_i}.
struct ExceptionalMonomial {
    std::vector<int> exponents;
    std::vector<bool> twisted;

    [[nodiscard]] std::size_t size() const { return exponents.size(); }
};

struct ReductionResult {
    Poly polynomial;
    /// Set when a parity rule forces the product to vanish (an odd untwisted
    /// or even twisted exponent). B_2 = 0 vanishes for other reasons and does
    /// not set this flag.
    bool vanishes = false;
};

class TableTooSmall : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// prod_i (twisted_i ? S_{k_i} : B_{k_i}). A zero exponent contributes
/// B_0 = 1 untwisted and S_0 = 0 twisted. Throws TableTooSmall when an
/// exponent exceeds the table or the needed column is missing, and
/// std::invalid_argument on mismatched list lengths or negative exponents.
ReductionResult reduce_monomial(const ExceptionalMonomial& q, const BlowupTable& table);

/// Value in the simple-type regime, where x acts as 2.
Rational simple_type_specialize(const Poly& p);

enum class SeriesKind { B, S };

/// k! [t^k] of exp(-t^2/2) cosh t (kind B) or exp(-t^2/2) sinh t (kind S),
/// computed from the elementary expansions over the rationals.
std::vector<Rational> simple_type_series(SeriesKind kind, int max_k);

/// B_k(2) and S_k(2) against simple_type_series for all k <= max_k.
/// Requires table.max_k >= max_k and both columns.
bool simple_type_crosscheck(int max_k, const BlowupTable& table);

}  // namespace blowup

#endif
