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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "blowup/cli.hpp"
#include "blowup/reduce.hpp"
#include "blowup/tables.hpp"
#include "blowup/weierstrass.hpp"

using namespace blowup;

namespace {

Poly xp(int n) { return pow(Poly::x(), static_cast<unsigned>(n)); }
Rational big(const char* digits) { return Rational(mpz_class(digits)); }

const Poly kB12 = Rational(-512) * xp(4) - Rational(960) * xp(2) - Poly(408);
const Poly kB30 = big("134217728") * xp(13) + big("4630511616") * xp(11) + big("68167925760") * xp(9) -
                  big("34608135536640") * xp(7) - big("39641047695360") * xp(5) - big("9886101110784") * xp(3) +
                  big("543185367552") * xp(1);

struct Outcome {
    bool ok;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;  // 0 = no runtime bound
    std::function<Outcome()> body;
};

std::vector<BlowupTable> b_pipelines(int K) { return {b_table_log_ode(K), b_table_quadratic(K), b_table_sigma(K)}; }

Outcome printed_value(int K, const Poly& want) {
    for (const auto& t : b_pipelines(K))
        if (!(t.b[K] == want))
            return {false, std::string(to_string(t.pipeline)) + " gives " + t.b[K].to_string()};
    return {true, "log-ode, quadratic, sigma all equal " + want.to_string()};
}

Outcome pipeline_equivalence() {
    constexpr int K = 48;
    const auto bs = b_pipelines(K);
    for (std::size_t i = 1; i < bs.size(); ++i)
        for (int k = 0; k <= K; ++k)
            if (!(bs[i].b[k] == bs[0].b[k]))
                return {false, std::string("B_") + std::to_string(k) + " differs: " + to_string(bs[0].pipeline) +
                                   " vs " + to_string(bs[i].pipeline)};
    const auto s1 = s_table_sigma(K);
    const auto s2 = s_table_sqrt(K, Pipeline::LogOde);
    for (int k = 0; k <= K; ++k)
        if (!(s1.s[k] == s2.s[k])) return {false, "S_" + std::to_string(k) + " differs"};
    return {true, "3 B pipelines and 2 S pipelines agree for k <= 48"};
}

Outcome fixtures() {
    constexpr int K = 48;
    auto tables = b_pipelines(K);
    for (const auto& t : tables) {
        const auto& b = t.b;
        const std::string p = to_string(t.pipeline);
        if (!(b[0] == Poly(1))) return {false, p + ": B_0 != 1"};
        if (!b[1].is_zero() || !b[2].is_zero() || !b[3].is_zero()) return {false, p + ": B_1..B_3 not zero"};
        if (!(b[4] == Poly(-2))) return {false, p + ": B_4 != -2"};
        for (int k = 1; k <= K; k += 2)
            if (!b[k].is_zero()) return {false, p + ": B_" + std::to_string(k) + " != 0"};
    }
    for (const auto& t : {s_table_sigma(K), s_table_sqrt(K, Pipeline::Quadratic)}) {
        const auto& s = t.s;
        const std::string p = to_string(t.pipeline);
        if (!(s[1] == Poly(1))) return {false, p + ": S_1 != 1"};
        if (!(s[3] == -Poly::x())) return {false, p + ": S_3 != -x"};
        for (int k = 0; k <= K; k += 2)
            if (!s[k].is_zero()) return {false, p + ": S_" + std::to_string(k) + " != 0"};
    }
    return {true, "seeds, B_4, S_1, S_3 and t-parity hold for k <= 48 in every pipeline"};
}

Outcome simple_type() {
    constexpr int K = 48;
    const auto bser = simple_type_series(SeriesKind::B, K);
    const auto sser = simple_type_series(SeriesKind::S, K);
    for (const auto& t : b_pipelines(K))
        for (int k = 0; k <= K; ++k)
            if (simple_type_specialize(t.b[k]) != bser[k])
                return {false, std::string(to_string(t.pipeline)) + ": B_" + std::to_string(k) + "(2) mismatch"};
    for (const auto& t : {s_table_sigma(K), s_table_sqrt(K, Pipeline::LogOde)})
        for (int k = 0; k <= K; ++k)
            if (simple_type_specialize(t.s[k]) != sser[k])
                return {false, std::string(to_string(t.pipeline)) + ": S_" + std::to_string(k) + "(2) mismatch"};
    if (!simple_type_crosscheck(K, full_table(K))) return {false, "simple_type_crosscheck failed"};
    const Rational b12 = simple_type_specialize(b_table_quadratic(12).b[12]);
    if (b12 != Rational(-12440) || bser[12] != Rational(-12440))
        return {false, "B_12(2) = " + b12.to_string()};
    return {true, "B_k(2), S_k(2) match exp(-t^2/2) cosh/sinh for k <= 48; B_12(2) = -12440"};
}

Outcome weierstrass_self_tests() {
    const auto bundle = build_bundle(60);
    for (const auto& c : bundle_self_test(bundle))
        if (!c.passed) return {false, c.name + ": " + c.detail};
    return {true, "p-ODE, zeta' + p, sigma' - zeta sigma, sigma3^2 - sigma^2 (p - e3) vanish at N = 60"};
}

Outcome roots() {
    for (const auto& c : root_identities())
        if (!c.passed) return {false, c.name + ": " + c.detail};
    return {true, "e3 root, (12e3^2 - g2)/4 = 1, Vieta, root-difference product = x^2 - 4, g2^3 - 27g3^2 = 16(x^2 - 4)"};
}

Outcome s_squared() {
    const auto t = full_table(50);
    const Series r = s_squared_residual(t);
    if (r.truncation() < 48) return {false, "residual known only through t^" + std::to_string(r.truncation())};
    if (!r.is_zero()) return {false, "nonzero at t^" + std::to_string(r.offset())};
    BlowupTable cross = b_table_log_ode(50);
    cross.s = s_table_sigma(50).s;
    if (!s_squared_residual(cross).is_zero()) return {false, "log-ode B against sigma S fails"};
    return {true, "(B')^2 - B''B - S^2 = 0 through t^" + std::to_string(r.truncation())};
}

Outcome corollary() {
    for (const auto& t : b_pipelines(44)) {
        const Series r = corollary_residual(t);
        if (r.truncation() < 40) return {false, "residual known only through t^" + std::to_string(r.truncation())};
        if (!r.is_zero()) return {false, std::string(to_string(t.pipeline)) + ": residual nonzero"};
    }
    auto corrupted = b_table_sigma(44);
    corrupted.b[20] = corrupted.b[20] + Poly(1);
    if (verify_corollary_relation(corrupted)) return {false, "negative control was not detected"};
    return {true, "zero through t^40 for all B pipelines; corrupted B_20 detected"};
}

Outcome cli_contract() {
    auto call = [](std::vector<std::string> args, int& code) {
        std::ostringstream out, err;
        code = cli::run(std::move(args), out, err);
        return out.str();
    };
    int code = 0;
    const std::string verify = call({"verify", "--max", "30"}, code);
    if (code != 0) return {false, "verify --max 30 exited " + std::to_string(code)};
    if (verify.find("[PASS] B_30 matches printed value") == std::string::npos)
        return {false, "verify report lacks the B_30 line"};

    const std::string text = call({"table", "--kind", "b", "--max", "4", "--format", "text"}, code);
    if (code != 0 || text != "B_0 = 1\nB_1 = 0\nB_2 = 0\nB_3 = 0\nB_4 = -2\n") return {false, "table text: " + text};

    const std::string json = call({"table", "--kind", "s", "--max", "3", "--format", "json"}, code);
    const std::string s3 =
        "    {\n      \"kind\": \"S\",\n      \"k\": 3,\n      \"coefficients\": [\n        {\n"
        "          \"power\": 1,\n          \"value\": \"-1\"\n        }\n      ],\n";
    if (code != 0 || json.find(s3) == std::string::npos) return {false, "table json lacks the S_3 record"};

    const std::string csv = call({"table", "--kind", "b", "--max", "12", "--format", "csv"}, code);
    if (code != 0 || csv.find("\n12,0,-408\n12,2,-960\n12,4,-512\n") == std::string::npos)
        return {false, "table csv lacks the B_12 rows"};

    const std::pair<std::vector<std::string>, std::string> reductions[] = {
        {{"reduce", "--exponents", "4", "--twisted", "0"}, "-2\n"},
        {{"reduce", "--exponents", "3,1", "--twisted", "1,1"}, "-x\n"},
        {{"reduce", "--exponents", "2", "--twisted", "0"}, "0\n"},
    };
    for (const auto& [args, want] : reductions) {
        const std::string got = call(args, code);
        if (code != 0 || got != want) return {false, "reduce produced '" + got + "'"};
    }
    return {true, "verify --max 30 exits 0; table and reduce outputs match byte-for-byte"};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "B_12 printed value", 1.0, [] { return printed_value(12, kB12); }},
        {2, "B_30 printed value", 5.0, [] { return printed_value(30, kB30); }},
        {3, "pipeline equivalence k <= 48", 10.0, pipeline_equivalence},
        {4, "fixture suite k <= 48", 0.0, fixtures},
        {5, "simple-type column k <= 48", 0.0, simple_type},
        {6, "Weierstrass self-tests N = 60", 5.0, weierstrass_self_tests},
        {7, "root identities", 0.0, roots},
        {8, "S^2 relation to order 48", 0.0, s_squared},
        {9, "two-blowup corollary residual to order 40", 0.0, corollary},
        {10, "CLI contract", 0.0, cli_contract},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o{false, {}};
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && secs >= c.budget_seconds) {
            o.ok = false;
            o.detail += " [over budget: limit " + std::to_string(c.budget_seconds) + " s]";
        }
        std::ostringstream line;
        line.precision(3);
        line << std::fixed << (o.ok ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << "  (" << secs
             << " s)  " << o.detail;
        std::cout << line.str() << '\n';
        if (!o.ok) ++failures;
    }
    std::cout << (failures == 0 ? "all acceptance criteria passed" : "acceptance FAILED") << " (" << failures
              << " failing)\n";
    return failures == 0 ? 0 : 1;
}
