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

#include "blowup/serialize.hpp"

#include <sstream>

#include <json.hpp>

namespace blowup {

using json = nlohmann::ordered_json;

namespace {

std::string decimal(const Rational& r) {
    std::ostringstream os;
    os.precision(17);
    os << r.approx();
    return os.str();
}

}  // namespace

Poly OutputRecord::polynomial() const {
    std::vector<Rational> c;
    for (const auto& [power, value] : coefficients) {
        if (power < 0) throw std::invalid_argument("OutputRecord: negative power");
        if (static_cast<std::size_t>(power) >= c.size()) c.resize(static_cast<std::size_t>(power) + 1);
        c[static_cast<std::size_t>(power)] += value;
    }
    return Poly(std::move(c));
}

OutputRecord make_record(std::string kind, int k, const Poly& p, std::string pipeline) {
    OutputRecord r{std::move(kind), k, {}, std::move(pipeline)};
    const auto c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) r.coefficients.emplace_back(static_cast<int>(i), c[i]);
    return r;
}

std::vector<OutputRecord> table_records(const BlowupTable& table, char kind, const std::string& pipeline_tag) {
    const bool is_b = kind == 'B' || kind == 'b';
    const auto& column = is_b ? table.b : table.s;
    if (static_cast<int>(column.size()) != table.max_k + 1)
        throw std::invalid_argument("table_records: table lacks the requested column");
    std::vector<OutputRecord> out;
    for (int k = 0; k <= table.max_k; ++k) out.push_back(make_record(is_b ? "B" : "S", k, column[k], pipeline_tag));
    return out;
}

std::string to_json(const std::vector<OutputRecord>& records, bool approx) {
    json root;
    root["tool"] = kToolName;
    root["version"] = kToolVersion;
    json arr = json::array();
    for (const auto& r : records) {
        json rec;
        rec["kind"] = r.kind;
        rec["k"] = r.k;
        json coeffs = json::array();
        for (const auto& [power, value] : r.coefficients) {
            json c;
            c["power"] = power;
            c["value"] = value.to_string();
            if (approx) c["approx_non_authoritative"] = decimal(value);
            coeffs.push_back(std::move(c));
        }
        rec["coefficients"] = std::move(coeffs);
        rec["pipeline"] = r.pipeline;
        arr.push_back(std::move(rec));
    }
    root["records"] = std::move(arr);
    return root.dump(2) + "\n";
}

std::vector<OutputRecord> records_from_json(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("records_from_json: ") + e.what());
    }
    if (!root.is_object() || !root.contains("records") || !root["records"].is_array())
        throw std::invalid_argument("records_from_json: missing records array");
    std::vector<OutputRecord> out;
    try {
        for (const auto& rec : root["records"]) {
            OutputRecord r;
            r.kind = rec.at("kind").get<std::string>();
            r.k = rec.at("k").get<int>();
            r.pipeline = rec.at("pipeline").get<std::string>();
            for (const auto& c : rec.at("coefficients"))
                r.coefficients.emplace_back(c.at("power").get<int>(),
                                            Rational::parse(c.at("value").get<std::string>()));
            out.push_back(std::move(r));
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("records_from_json: ") + e.what());
    }
    return out;
}

std::string to_csv(const std::vector<OutputRecord>& records, bool approx) {
    std::ostringstream os;
    os << "k,power,value" << (approx ? ",approx_non_authoritative" : "") << '\n';
    for (const auto& r : records) {
        for (const auto& [power, value] : r.coefficients) {
            os << r.k << ',' << power << ',' << value.to_string();
            if (approx) os << ',' << decimal(value);
            os << '\n';
        }
    }
    return os.str();
}

std::string to_text(const std::vector<OutputRecord>& records, bool approx) {
    std::ostringstream os;
    for (const auto& r : records) {
        const Poly p = r.polynomial();
        os << r.kind << '_' << r.k << " = " << p.to_string();
        if (approx) os << "    (approx, non-authoritative: " << p.to_approx_string() << ')';
        os << '\n';
    }
    return os.str();
}

}  // namespace blowup
