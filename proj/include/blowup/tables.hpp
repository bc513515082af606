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

#ifndef BLOWUP_TABLES_HPP
#define BLOWUP_TABLES_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "blowup/poly.hpp"
#include "blowup/series.hpp"
#include "blowup/weierstrass.hpp"

namespace blowup {

enum class Pipeline {
    LogOde,         ///< u'' = -6u^2 - 4xu - 2, f'' = u, B = exp(f)
    Quadratic,      ///< coefficient recursion of the quartic bilinear relation
    Sigma,          ///< closed forms exp(-t^2 x/6) sigma_3(t), exp(-t^2 x/6) sigma(t)
    SqrtRelation,   ///< S = sqrt((B')^2 - B'' B)
};

const char* to_string(Pipeline p);
std::optional<Pipeline> parse_pipeline(std::string_view tag);

/// Blowup polynomials B_0..B_K and/or S_0..S_K in the factorial normalization
/// B(x,t) = sum B_k t^k / k!. A table built by a B pipeline leaves s empty and
/// vice versa; full_table fills both.
struct BlowupTable {
    int max_k = 0;
    std::vector<Poly> b;
    std::vector<Poly> s;
    Pipeline pipeline = Pipeline::Sigma;

    [[nodiscard]] bool has_b() const { return static_cast<int>(b.size()) == max_k + 1; }
    [[nodiscard]] bool has_s() const { return static_cast<int>(s.size()) == max_k + 1; }
};

enum class BlowupErrc { RecursionStall, SqrtPreconditionFailed };

class BlowupError : public std::runtime_error {
public:
    BlowupError(BlowupErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    [[nodiscard]] BlowupErrc code() const { return code_; }

private:
    BlowupErrc code_;
};

/// k! [t^k] f for k = 0..max_k.
std::vector<Poly> factorial_coefficients(const Series& f, int max_k);
/// Inverse of factorial_coefficients: sum p_k t^k / k!, exact through t^(size-1).
Series egf_series(const std::vector<Poly>& normalized);

BlowupTable b_table_log_ode(int max_k);
/// Throws BlowupError{RecursionStall} if the isolating multiplier vanishes.
BlowupTable b_table_quadratic(int max_k);
BlowupTable b_table_sigma(int max_k);
BlowupTable s_table_sigma(int max_k);
/// Square root of (B')^2 - B'' B with B taken from the supplied B pipeline.
/// Throws BlowupError{SqrtPreconditionFailed} if the radicand is not t^2 + ....
BlowupTable s_table_sqrt(int max_k, Pipeline b_source = Pipeline::Quadratic);
/// Same, from an explicit B table; b_table.max_k must be at least max_k + 3.
BlowupTable s_table_sqrt(int max_k, const BlowupTable& b_table);

/// B and S from the closed forms, tagged Sigma.
BlowupTable full_table(int max_k);

/// Residual of the diagonal two-blowup relation
///   sum_j (-1)^j C(4,j) B^(4-j) B^(j) + 4x sum_j (-1)^j C(2,j) B^(2-j) B^(j) + 4 B^2
/// built from products of t-derivatives of the table's B series. It is known
/// through t^(max_k - 4).
Series corollary_residual(const BlowupTable& table);
/// True iff corollary_residual(table) vanishes through its truncation.
bool verify_corollary_relation(const BlowupTable& table);
bool verify_corollary_relation(int max_k);

/// (B')^2 - B'' B - S^2, built from a table holding both B and S.
Series s_squared_residual(const BlowupTable& table);

struct PairAgreement {
    std::string kind;   // "B" or "S"
    Pipeline first;
    Pipeline second;
    bool agree = true;
    std::optional<int> first_mismatch;
    Poly first_value;
    Poly second_value;
};

struct PipelineReport {
    int max_k = 0;
    std::vector<PairAgreement> agreements;
    std::vector<IdentityCheck> invariants;
    bool corollary_relation = false;

    [[nodiscard]] bool passed() const;
};

/// Structural checks on a table: seeds, parity in t, parity in x, degree bounds.
std::vector<IdentityCheck> table_invariants(const BlowupTable& table);

/// Builds every B and S pipeline to max_k, compares them coefficientwise,
/// checks table invariants, the S^2 relation and the corollary relation.
/// Pipelines run concurrently.
PipelineReport crosscheck(int max_k);

}  // namespace blowup

#endif
