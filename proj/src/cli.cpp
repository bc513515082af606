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

#include "blowup/cli.hpp"

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "blowup/reduce.hpp"
#include "blowup/serialize.hpp"
#include "blowup/tables.hpp"
#include "blowup/weierstrass.hpp"

namespace blowup::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Published reference values of B_12 and B_30.
Poly printed_b12() { return Poly{Rational(-408), 0, Rational(-960), 0, Rational(-512)}; }

Poly printed_b30() {
    std::vector<Rational> c(14);
    c[13] = Rational(mpz_class("134217728"));
    c[11] = Rational(mpz_class("4630511616"));
    c[9] = Rational(mpz_class("68167925760"));
    c[7] = Rational(mpz_class("-34608135536640"));
    c[5] = Rational(mpz_class("-39641047695360"));
    c[3] = Rational(mpz_class("-9886101110784"));
    c[1] = Rational(mpz_class("543185367552"));
    return Poly(std::move(c));
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw UsageError(std::string("malformed ") + what + " list: '" + text + "'");
        if (item.size() > 6) throw UsageError(std::string(what) + " entry too large: " + item);
        out.push_back(std::stoi(item));
    }
    if (!text.empty() && text.back() == ',') throw UsageError(std::string("malformed ") + what + " list: '" + text + "'");
    return out;
}

class Report {
public:
    explicit Report(std::ostream& out) : out_(out) {}

    void section(const std::string& title) { out_ << "== " << title << '\n'; }

    void line(const std::string& name, bool ok, const std::string& detail = {}) {
        out_ << (ok ? "[PASS] " : "[FAIL] ") << name;
        if (!detail.empty()) out_ << "  (" << detail << ')';
        out_ << '\n';
        ok_ = ok_ && ok;
        ++count_;
    }

    void checks(const std::vector<IdentityCheck>& cs) {
        for (const auto& c : cs) line(c.name, c.passed, c.detail);
    }

    [[nodiscard]] bool ok() const { return ok_; }
    [[nodiscard]] int count() const { return count_; }

private:
    std::ostream& out_;
    bool ok_ = true;
    int count_ = 0;
};

int cmd_table(const std::string& kind_flag, int max_k, const std::string& pipeline, const std::string& format,
              bool approx, std::ostream& out, std::ostream& err) {
    const char kind = kind_flag == "b" || kind_flag == "B" ? 'B' : 'S';
    BlowupTable table;
    std::string tag;
    if (kind == 'B') {
        if (pipeline == "ode") {
            table = b_table_log_ode(max_k);
        } else if (pipeline == "quad") {
            table = b_table_quadratic(max_k);
        } else if (pipeline == "sigma") {
            table = b_table_sigma(max_k);
        } else if (pipeline == "all") {
            const BlowupTable a = b_table_log_ode(max_k);
            const BlowupTable q = b_table_quadratic(max_k);
            table = b_table_sigma(max_k);
            for (int k = 0; k <= max_k; ++k) {
                if (!(a.b[k] == table.b[k]) || !(q.b[k] == table.b[k])) {
                    err << "pipeline disagreement at B_" << k << '\n';
                    return kMismatch;
                }
            }
            tag = "all";
        } else {
            throw UsageError("pipeline '" + pipeline + "' does not produce B tables");
        }
    } else {
        if (pipeline == "sigma") {
            table = s_table_sigma(max_k);
        } else if (pipeline == "sqrt") {
            table = s_table_sqrt(max_k, Pipeline::LogOde);
        } else if (pipeline == "all") {
            const BlowupTable r = s_table_sqrt(max_k, Pipeline::LogOde);
            table = s_table_sigma(max_k);
            for (int k = 0; k <= max_k; ++k) {
                if (!(r.s[k] == table.s[k])) {
                    err << "pipeline disagreement at S_" << k << '\n';
                    return kMismatch;
                }
            }
            tag = "all";
        } else {
            throw UsageError("pipeline '" + pipeline + "' does not produce S tables");
        }
    }
    if (tag.empty()) tag = to_string(table.pipeline);
    const auto records = table_records(table, kind, tag);
    if (format == "json") {
        out << to_json(records, approx);
    } else if (format == "csv") {
        out << to_csv(records, approx);
    } else {
        out << to_text(records, approx);
    }
    return kOk;
}

int cmd_verify(int max_k, const std::string& fault, std::ostream& out) {
    Report report(out);

    const int order = std::max(max_k, 8);
    PeRecurrence rec;
    if (fault == "pe-c2") rec.c2_divisor = Rational(21);
    report.section("Weierstrass series self-tests through t^" + std::to_string(order));
    report.checks(bundle_self_test(build_bundle(order, rec)));

    report.section("root identities of 4s^3 - g2 s - g3");
    report.checks(root_identities());

    report.section("pipeline cross-check, k <= " + std::to_string(max_k));
    const PipelineReport cc = crosscheck(max_k);
    for (const auto& a : cc.agreements) {
        std::string name = a.kind + " pipelines " + to_string(a.first) + " = " + to_string(a.second);
        std::string detail;
        if (!a.agree && a.first_mismatch)
            detail = "first mismatch at k = " + std::to_string(*a.first_mismatch) + ": " + a.first_value.to_string() +
                     " vs " + a.second_value.to_string();
        report.line(name, a.agree, detail);
    }
    report.checks(cc.invariants);
    report.line("two-blowup corollary relation residual vanishes", cc.corollary_relation);

    const BlowupTable table = full_table(max_k);
    report.section("simple type (x = 2)");
    report.line("B_k(2), S_k(2) match exp(-t^2/2) cosh t, exp(-t^2/2) sinh t", simple_type_crosscheck(max_k, table));

    report.section("reference values");
    auto fixture = [&](const std::string& name, int k, bool twisted, const Poly& want) {
        if (k > max_k) return;
        const Poly& got = twisted ? table.s[k] : table.b[k];
        report.line(name, got == want, "got " + got.to_string());
    };
    fixture("B_0 = 1", 0, false, Poly(1));
    fixture("B_4 = -2", 4, false, Poly(-2));
    fixture("S_1 = 1", 1, true, Poly(1));
    fixture("S_3 = -x", 3, true, -Poly::x());
    fixture("B_12 matches printed value", 12, false, printed_b12());
    fixture("B_30 matches printed value", 30, false, printed_b30());

    out << (report.ok() ? "verified" : "FAILED") << ": " << report.count() << " checks\n";
    return report.ok() ? kOk : kMismatch;
}

int cmd_reduce(const std::string& exps, const std::string& tw, bool simple, const std::string& format,
               std::ostream& out) {
    ExceptionalMonomial q;
    q.exponents = parse_int_list(exps, "exponents");
    for (int t : parse_int_list(tw, "twisted")) {
        if (t != 0 && t != 1) throw UsageError("twisted flags must be 0 or 1");
        q.twisted.push_back(t == 1);
    }
    if (q.exponents.size() != q.twisted.size()) throw UsageError("--exponents and --twisted differ in length");

    int max_k = 1;
    for (int k : q.exponents) max_k = std::max(max_k, k);
    const ReductionResult r = reduce_monomial(q, full_table(max_k));

    if (format == "json") {
        nlohmann::ordered_json j;
        j["tool"] = kToolName;
        j["version"] = kToolVersion;
        j["polynomial"] = r.polynomial.to_string();
        nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
        const auto c = r.polynomial.coeffs();
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i].is_zero()) continue;
            coeffs.push_back({{"power", i}, {"value", c[i].to_string()}});
        }
        j["coefficients"] = std::move(coeffs);
        j["vanishes"] = r.vanishes;
        if (simple) j["simple_type_value"] = simple_type_specialize(r.polynomial).to_string();
        out << j.dump(2) << '\n';
    } else {
        out << r.polynomial.to_string() << '\n';
        if (simple) out << "x=2: " << simple_type_specialize(r.polynomial).to_string() << '\n';
    }
    return kOk;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact blowup polynomials B_k(x), S_k(x) and their cross-verification", "blowup"};
    app.require_subcommand(1);

    std::string kind, pipeline = "all", format = "text";
    int table_max = 40;
    bool approx = false;
    auto* table = app.add_subcommand("table", "Emit B_k or S_k for k <= --max");
    table->add_option("--kind", kind, "b or s")->required()->check(CLI::IsMember({"b", "s", "B", "S"}));
    table->add_option("--max", table_max, "largest k")->check(CLI::Range(0, 100000));
    table->add_option("--pipeline", pipeline, "ode, quad, sigma (B); sigma, sqrt (S); all")
        ->check(CLI::IsMember({"ode", "quad", "sigma", "sqrt", "all"}));
    table->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    table->add_flag("--approx", approx, "add a non-authoritative decimal rendering");

    int verify_max = 40;
    std::string fault = "none";
    auto* verify = app.add_subcommand("verify", "Run every identity check for k <= --max");
    verify->add_option("--max", verify_max, "largest k")->check(CLI::Range(0, 100000));
    verify->add_option("--inject-fault", fault, "negative control: none or pe-c2 (c2 = g2/21)")
        ->check(CLI::IsMember({"none", "pe-c2"}));

    std::string exps, tw, reduce_format = "text";
    bool simple = false;
    auto* reduce = app.add_subcommand("reduce", "Reduce e_1^k_1 ... e_n^k_n to a polynomial in x");
    reduce->add_option("--exponents", exps, "comma-separated exponents")->required();
    reduce->add_option("--twisted", tw, "comma-separated 0/1 flags, one per exponent")->required();
    reduce->add_flag("--simple-type", simple, "also print the value at x = 2");
    reduce->add_option("--format", reduce_format, "text or json")->check(CLI::IsMember({"json", "text"}));

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*table) return cmd_table(kind, table_max, pipeline, format, approx, out, err);
        if (*verify) return cmd_verify(verify_max, fault, out);
        if (*reduce) return cmd_reduce(exps, tw, simple, reduce_format, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace blowup::cli
