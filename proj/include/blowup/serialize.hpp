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

#ifndef BLOWUP_SERIALIZE_HPP
#define BLOWUP_SERIALIZE_HPP

#include <string>
#include <utility>
#include <vector>

#include "blowup/poly.hpp"
#include "blowup/tables.hpp"

namespace blowup {

inline constexpr const char* kToolName = "blowup";
inline constexpr const char* kToolVersion = "1.0.0";

/// One B_k or S_k polynomial as emitted by the CLI. Coefficients are listed
/// in increasing power; zero coefficients are omitted.
struct OutputRecord {
    std::string kind;  // "B" or "S"
    int k = 0;
    std::vector<std::pair<int, Rational>> coefficients;
    std::string pipeline;

    [[nodiscard]] Poly polynomial() const;
    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

OutputRecord make_record(std::string kind, int k, const Poly& p, std::string pipeline);

/// Records for B_0..B_K (kind 'B') or S_0..S_K (kind 'S') of a table.
std::vector<OutputRecord> table_records(const BlowupTable& table, char kind, const std::string& pipeline_tag);

/// {"tool", "version", "records": [...]}; values are exact rational strings.
/// approx adds a per-coefficient "approx_non_authoritative" decimal.
std::string to_json(const std::vector<OutputRecord>& records, bool approx = false);
/// Inverse of to_json (approx fields are ignored). Throws std::invalid_argument.
std::vector<OutputRecord> records_from_json(const std::string& text);

/// Header "k,power,value" then one row per stored coefficient.
std::string to_csv(const std::vector<OutputRecord>& records, bool approx = false);
/// One "B_k = <poly>" line per record, descending powers.
std::string to_text(const std::vector<OutputRecord>& records, bool approx = false);

}  // namespace blowup

#endif
