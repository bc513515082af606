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

#include "blowup/tables.hpp"

#include <algorithm>
#include <future>
#include <utility>

namespace blowup {

const char* to_string(Pipeline p) {
    switch (p) {
        case Pipeline::LogOde: return "log-ode";
        case Pipeline::Quadratic: return "quadratic";
        case Pipeline::Sigma: return "sigma";
        case Pipeline::SqrtRelation: return "sqrt-relation";
    }
    return "unknown";
}

std::optional<Pipeline> parse_pipeline(std::string_view tag) {
    for (Pipeline p : {Pipeline::LogOde, Pipeline::Quadratic, Pipeline::Sigma, Pipeline::SqrtRelation})
        if (tag == to_string(p)) return p;
    return std::nullopt;
}

std::vector<Poly> factorial_coefficients(const Series& f, int max_k) {
    std::vector<Poly> out;
    out.reserve(static_cast<std::size_t>(max_k + 1));
    Rational fact(1);
    for (int k = 0; k <= max_k; ++k) {
        if (k > 0) fact *= Rational(k);
        out.push_back(f.coeff(k) * fact);
    }
    return out;
}

Series egf_series(const std::vector<Poly>& normalized) {
    std::vector<Poly> plain;
    plain.reserve(normalized.size());
    Rational fact(1);
    for (std::size_t k = 0; k < normalized.size(); ++k) {
        if (k > 0) fact *= Rational(static_cast<long>(k));
        plain.push_back(normalized[k] / fact);
    }
    return Series::from_terms(plain, static_cast<int>(normalized.size()) - 1);
}

namespace {

void check_order(int max_k) {
    if (max_k < 0) throw std::invalid_argument("blowup table order must be non-negative");
}

BlowupTable b_only(int max_k, std::vector<Poly> b, Pipeline p) {
    return {max_k, std::move(b), {}, p};
}

BlowupTable s_only(int max_k, std::vector<Poly> s, Pipeline p) {
    return {max_k, {}, std::move(s), p};
}

Series gaussian_prefactor(int n) {
    // exp(-t^2 x / 6)
    return exp(Series::monomial(Poly{Rational(0), Rational(-1, 6)}, 2, n));
}

}  // namespace

BlowupTable b_table_log_ode(int max_k) {
    check_order(max_k);
    // u = f'' solves u'' + 6u^2 + 4xu + 2 = 0 with u(0) = u'(0) = 0.
    const int un = std::max(max_k - 2, 0);
    const Poly x = Poly::x();
    std::vector<Poly> u(static_cast<std::size_t>(un + 1));
    for (int n = 0; n + 2 <= un; ++n) {
        Poly rhs = Rational(-4) * x * u[n];
        if (n == 0) rhs -= Poly(2);
        Poly sq;
        for (int i = 0; i <= n; ++i) {
            if (u[i].is_zero() || u[n - i].is_zero()) continue;
            sq += u[i] * u[n - i];
        }
        rhs -= Rational(6) * sq;
        u[n + 2] = rhs / Rational(static_cast<long>(n + 2) * (n + 1));
    }
    const Series useries = Series::from_terms(u, un);
    const Series f = integrate(integrate(useries));
    return b_only(max_k, factorial_coefficients(exp(f), max_k), Pipeline::LogOde);
}

BlowupTable b_table_quadratic(int max_k) {
    check_order(max_k);
    const Poly x = Poly::x();
    std::vector<Poly> b(static_cast<std::size_t>(std::max(max_k, 3) + 1));
    b[0] = Poly(1);

    // Coefficient of t^i in the m-th t-derivative.
    auto deriv = [&](int m, int i) -> Poly {
        Rational w(1);
        for (int j = 1; j <= m; ++j) w *= Rational(i + j);
        return b[i + m] * w;
    };

    for (int n = 0; n + 4 <= max_k; ++n) {
        Poly rest;
        for (int i = 0; i <= n; ++i) {
            const int r = n - i;
            if (i < n) rest += deriv(4, i) * b[r];
            rest -= Rational(4) * deriv(3, i) * deriv(1, r);
            rest += Rational(3) * deriv(2, i) * deriv(2, r);
            rest += Rational(4) * x * (deriv(2, i) * b[r] - deriv(1, i) * deriv(1, r));
            rest += Rational(2) * b[i] * b[r];
        }
        Rational multiplier(1);
        for (int j = 1; j <= 4; ++j) multiplier *= Rational(n + j);
        if (b[0].is_zero() || multiplier.is_zero())
            throw BlowupError(BlowupErrc::RecursionStall, "quadratic recursion: isolating multiplier vanished");
        if (!b[0].is_constant())
            throw BlowupError(BlowupErrc::RecursionStall, "quadratic recursion: B_0 is not a constant");
        multiplier *= b[0].constant_term();
        b[n + 4] = -rest / multiplier;
    }
    b.resize(static_cast<std::size_t>(max_k + 1));
    std::vector<Poly> normalized;
    Rational fact(1);
    for (int k = 0; k <= max_k; ++k) {
        if (k > 0) fact *= Rational(k);
        normalized.push_back(b[k] * fact);
    }
    return b_only(max_k, std::move(normalized), Pipeline::Quadratic);
}

BlowupTable b_table_sigma(int max_k) {
    check_order(max_k);
    const Series B = gaussian_prefactor(max_k) * sigma3_series(max_k);
    return b_only(max_k, factorial_coefficients(B, max_k), Pipeline::Sigma);
}

BlowupTable s_table_sigma(int max_k) {
    check_order(max_k);
    const int n = std::max(max_k, 1);
    const Series S = gaussian_prefactor(n) * sigma_series(n);
    return s_only(max_k, factorial_coefficients(S, max_k), Pipeline::Sigma);
}

BlowupTable s_table_sqrt(int max_k, const BlowupTable& b_table) {
    check_order(max_k);
    if (!b_table.has_b() || b_table.max_k < std::max(max_k + 3, 4))
        throw std::invalid_argument("s_table_sqrt: B table must reach order max_k + 3");
    const Series B = egf_series(b_table.b);
    const Series dB = diff(B);
    const Series radicand = dB * dB - diff(dB) * B;
    if (radicand.is_zero() || radicand.offset() != 2 || !(radicand.leading() == Poly(1)))
        throw BlowupError(BlowupErrc::SqrtPreconditionFailed,
                          "(B')^2 - B''B does not begin t^2 + ...: " + radicand.to_string());
    const Series S = sqrt(radicand);
    return s_only(max_k, factorial_coefficients(S, max_k), Pipeline::SqrtRelation);
}

BlowupTable s_table_sqrt(int max_k, Pipeline b_source) {
    check_order(max_k);
    const int m = std::max(max_k + 3, 4);
    switch (b_source) {
        case Pipeline::LogOde: return s_table_sqrt(max_k, b_table_log_ode(m));
        case Pipeline::Quadratic: return s_table_sqrt(max_k, b_table_quadratic(m));
        case Pipeline::Sigma: return s_table_sqrt(max_k, b_table_sigma(m));
        case Pipeline::SqrtRelation: break;
    }
    throw std::invalid_argument("s_table_sqrt: B source must be a B pipeline");
}

BlowupTable full_table(int max_k) {
    BlowupTable t = b_table_sigma(max_k);
    t.s = s_table_sigma(max_k).s;
    return t;
}

Series corollary_residual(const BlowupTable& table) {
    if (!table.has_b()) throw std::invalid_argument("corollary_residual: table has no B column");
    std::vector<Series> d;
    d.push_back(egf_series(table.b));
    for (int m = 1; m <= 4; ++m) d.push_back(diff(d.back()));

    const int n = table.max_k;
    Series quartic(n);
    for (int j = 0; j <= 4; ++j) {
        Series term = d[4 - j] * d[j] * Poly(binomial(4, j));
        quartic = (j % 2 == 0) ? quartic + term : quartic - term;
    }
    Series quadratic(n);
    for (int j = 0; j <= 2; ++j) {
        Series term = d[2 - j] * d[j] * Poly(binomial(2, j));
        quadratic = (j % 2 == 0) ? quadratic + term : quadratic - term;
    }
    return quartic + quadratic * (Rational(4) * Poly::x()) + d[0] * d[0] * Poly(4);
}

bool verify_corollary_relation(const BlowupTable& table) { return corollary_residual(table).is_zero(); }

bool verify_corollary_relation(int max_k) { return verify_corollary_relation(b_table_sigma(max_k)); }

Series s_squared_residual(const BlowupTable& table) {
    if (!table.has_b() || !table.has_s())
        throw std::invalid_argument("s_squared_residual: table needs both B and S");
    const Series B = egf_series(table.b);
    const Series S = egf_series(table.s);
    const Series dB = diff(B);
    return dB * dB - diff(dB) * B - S * S;
}

namespace {

IdentityCheck check(std::string name, bool ok, std::string detail = {}) {
    return {std::move(name), ok, std::move(detail)};
}

}  // namespace

std::vector<IdentityCheck> table_invariants(const BlowupTable& t) {
    std::vector<IdentityCheck> out;
    const int K = t.max_k;
    if (t.has_b()) {
        const auto& b = t.b;
        bool seeds = b[0] == Poly(1);
        for (int k = 1; k <= std::min(K, 3); ++k) seeds = seeds && b[k].is_zero();
        out.push_back(check("B_0 = 1, B_1 = B_2 = B_3 = 0", seeds));

        std::optional<int> bad_odd, bad_deg, bad_parity, bad_int;
        for (int k = 0; k <= K; ++k) {
            if (k % 2 == 1) {
                if (!b[k].is_zero() && !bad_odd) bad_odd = k;
                continue;
            }
            if (k >= 4 && b[k].degree() > k / 2 - 2 && !bad_deg) bad_deg = k;
            const Poly expected = ((k / 2) % 2 == 0) ? b[k] : -b[k];
            if (!(b[k].reflect() == expected) && !bad_parity) bad_parity = k;
            if (!b[k].all_integer() && !bad_int) bad_int = k;
        }
        auto where = [](const std::optional<int>& k) {
            return k ? "fails at k = " + std::to_string(*k) : std::string("holds");
        };
        out.push_back(check("B_k = 0 for odd k", !bad_odd, where(bad_odd)));
        out.push_back(check("deg B_k <= k/2 - 2 for even k >= 4", !bad_deg, where(bad_deg)));
        out.push_back(check("B_k(-x) = (-1)^(k/2) B_k(x) for even k", !bad_parity, where(bad_parity)));
        out.push_back(check("B_k has integer coefficients", !bad_int, where(bad_int)));
    }
    if (t.has_s()) {
        const auto& s = t.s;
        bool seeds = s[0].is_zero() && (K < 1 || s[1] == Poly(1));
        out.push_back(check("S_0 = 0, S_1 = 1", seeds));

        std::optional<int> bad_even, bad_deg, bad_parity, bad_int;
        for (int k = 0; k <= K; ++k) {
            if (k % 2 == 0) {
                if (!s[k].is_zero() && !bad_even) bad_even = k;
                continue;
            }
            if (s[k].degree() > (k - 1) / 2 && !bad_deg) bad_deg = k;
            const Poly expected = (((k - 1) / 2) % 2 == 0) ? s[k] : -s[k];
            if (!(s[k].reflect() == expected) && !bad_parity) bad_parity = k;
            if (!s[k].all_integer() && !bad_int) bad_int = k;
        }
        auto where = [](const std::optional<int>& k) {
            return k ? "fails at k = " + std::to_string(*k) : std::string("holds");
        };
        out.push_back(check("S_k = 0 for even k", !bad_even, where(bad_even)));
        out.push_back(check("deg S_k <= (k-1)/2 for odd k", !bad_deg, where(bad_deg)));
        out.push_back(check("S_k(-x) = (-1)^((k-1)/2) S_k(x) for odd k", !bad_parity, where(bad_parity)));
        out.push_back(check("S_k has integer coefficients", !bad_int, where(bad_int)));
    }
    return out;
}

bool PipelineReport::passed() const {
    return corollary_relation && all_passed(invariants) &&
           std::all_of(agreements.begin(), agreements.end(), [](const PairAgreement& a) { return a.agree; });
}

namespace {

PairAgreement compare(std::string kind, const BlowupTable& a, const std::vector<Poly>& av,
                      const BlowupTable& b, const std::vector<Poly>& bv) {
    PairAgreement r{std::move(kind), a.pipeline, b.pipeline, true, std::nullopt, {}, {}};
    const std::size_t n = std::min(av.size(), bv.size());
    for (std::size_t k = 0; k < n; ++k) {
        if (!(av[k] == bv[k])) {
            r.agree = false;
            r.first_mismatch = static_cast<int>(k);
            r.first_value = av[k];
            r.second_value = bv[k];
            break;
        }
    }
    if (r.agree && av.size() != bv.size()) {
        r.agree = false;
        r.first_mismatch = static_cast<int>(n);
    }
    return r;
}

}  // namespace

PipelineReport crosscheck(int max_k) {
    check_order(max_k);
    auto log_ode = std::async(std::launch::async, b_table_log_ode, max_k);
    auto quad = std::async(std::launch::async, b_table_quadratic, max_k);
    auto sig_b = std::async(std::launch::async, b_table_sigma, max_k);
    auto sig_s = std::async(std::launch::async, s_table_sigma, max_k);
    auto sqrt_s = std::async(std::launch::async, [max_k] { return s_table_sqrt(max_k, Pipeline::LogOde); });

    const BlowupTable tl = log_ode.get();
    const BlowupTable tq = quad.get();
    const BlowupTable tsb = sig_b.get();
    const BlowupTable tss = sig_s.get();
    const BlowupTable tsq = sqrt_s.get();

    PipelineReport report;
    report.max_k = max_k;
    report.agreements.push_back(compare("B", tl, tl.b, tq, tq.b));
    report.agreements.push_back(compare("B", tl, tl.b, tsb, tsb.b));
    report.agreements.push_back(compare("B", tq, tq.b, tsb, tsb.b));
    report.agreements.push_back(compare("S", tss, tss.s, tsq, tsq.s));

    for (const BlowupTable* t : {&tl, &tq, &tsb, &tss, &tsq}) {
        for (auto c : table_invariants(*t)) {
            c.name = std::string(to_string(t->pipeline)) + ": " + c.name;
            report.invariants.push_back(std::move(c));
        }
    }

    BlowupTable combined = tsb;
    combined.s = tss.s;
    const Series s2 = s_squared_residual(combined);
    report.invariants.push_back(check("(B')^2 - B''B - S^2 = 0", s2.is_zero(),
                                      "through t^" + std::to_string(s2.truncation())));
    report.corollary_relation = verify_corollary_relation(tsb);
    return report;
}

}  // namespace blowup
