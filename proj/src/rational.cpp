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

#include "blowup/rational.hpp"

#include <stdexcept>
#include <utility>

namespace blowup {

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(numerator, denominator);
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    if (q_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty string");
    std::string s(text);
    const auto slash = s.find('/');
    auto valid_int = [](std::string_view part, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) ++i;
        if (i >= part.size()) return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!valid_int(s, true)) throw std::invalid_argument("Rational: malformed '" + s + "'");
        if (s[0] == '+') s.erase(0, 1);
        return Rational(mpz_class(s));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw std::invalid_argument("Rational: malformed '" + s + "'");
    if (num[0] == '+') num.erase(0, 1);
    mpz_class d(den);
    if (d == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    return Rational(mpq_class(mpz_class(num), d));
}

std::string Rational::to_string() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return Rational(r);
}

Rational binomial(unsigned n, unsigned k) {
    if (k > n) return Rational{};
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Rational(r);
}

}  // namespace blowup
