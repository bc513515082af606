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

#include "blowup/poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace blowup {

Poly::Poly(const Rational& c) {
    if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

Poly Poly::monomial(const Rational& c, unsigned power) {
    if (c.is_zero()) return {};
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return Poly(std::move(v));
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Poly::coeff(std::size_t power) const {
    return power < c_.size() ? c_[power] : Rational{};
}

Rational Poly::eval(const Rational& a) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= a;
        acc += *it;
    }
    return acc;
}

Poly Poly::reflect() const {
    Poly r = *this;
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
}

bool Poly::all_integer() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& c) { return c.is_integer(); });
}

namespace {

template <class Render>
std::string render(std::span<const Rational> c, Render&& magnitude) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        const Rational& a = c[i];
        if (a.is_zero()) continue;
        const bool neg = a.sign() < 0;
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        const Rational mag = neg ? -a : a;
        const bool unit = mag == Rational(1);
        if (i == 0) {
            os << magnitude(mag);
            continue;
        }
        if (!unit) os << magnitude(mag) << '*';
        os << 'x';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

}  // namespace

std::string Poly::to_string() const {
    return render(c_, [](const Rational& r) { return r.to_string(); });
}

std::string Poly::to_approx_string() const {
    return render(c_, [](const Rational& r) {
        std::ostringstream os;
        os.precision(12);
        os << r.approx();
        return os.str();
    });
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& a : c_) a *= c;
    return *this;
}

Poly& Poly::operator/=(const Rational& c) {
    for (auto& a : c_) a /= c;
    return *this;
}

Poly operator-(Poly a) {
    for (auto& c : a.c_) c = -c;
    return a;
}

Poly pow(const Poly& p, unsigned n) {
    Poly result(1);
    Poly base = p;
    while (n != 0) {
        if (n & 1U) result *= base;
        n >>= 1U;
        if (n != 0) base *= base;
    }
    return result;
}

}  // namespace blowup
