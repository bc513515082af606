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

#include "blowup/series.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace blowup {

const char* to_string(SeriesErrc code) {
    switch (code) {
        case SeriesErrc::LeadingNotUnit: return "LeadingNotUnit";
        case SeriesErrc::NonzeroConstantTerm: return "NonzeroConstantTerm";
        case SeriesErrc::OddOffset: return "OddOffset";
        case SeriesErrc::LeadingNotOne: return "LeadingNotOne";
        case SeriesErrc::ResidueObstruction: return "ResidueObstruction";
    }
    return "unknown";
}

Series::Series(int truncation) : trunc_(truncation) {}

Series::Series(int offset, std::vector<Poly> coeffs, int truncation)
    : offset_(offset), c_(std::move(coeffs)), trunc_(truncation) {
    if (!c_.empty() && offset_ + static_cast<int>(c_.size()) - 1 > trunc_)
        throw std::invalid_argument("Series: coefficients extend past the truncation");
    if (!c_.empty()) c_.resize(static_cast<std::size_t>(trunc_ - offset_ + 1));
    normalize();
}

Series Series::from_terms(const std::vector<Poly>& coeffs_from_t0, int truncation) {
    std::vector<Poly> c(coeffs_from_t0.begin(),
                        coeffs_from_t0.begin() +
                            std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(coeffs_from_t0.size()),
                                                     std::max(truncation + 1, 0)));
    return Series(0, std::move(c), truncation);
}

Series Series::monomial(const Poly& c, int exponent, int truncation) {
    if (exponent > truncation) return Series(truncation);
    return Series(exponent, {c}, truncation);
}

void Series::normalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        offset_ = 0;
        return;
    }
    if (lead != 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
        offset_ += static_cast<int>(lead);
    }
}

Poly Series::coeff(int exponent) const {
    if (exponent > trunc_)
        throw std::out_of_range("Series: coefficient t^" + std::to_string(exponent) +
                                " lies above the truncation t^" + std::to_string(trunc_));
    if (c_.empty() || exponent < offset_) return {};
    return c_[static_cast<std::size_t>(exponent - offset_)];
}

Poly Series::leading() const { return c_.empty() ? Poly{} : c_.front(); }

Series Series::truncated(int n) const {
    if (n > trunc_) throw std::invalid_argument("Series: cannot raise the truncation");
    if (c_.empty() || n < offset_) return Series(n);
    std::vector<Poly> c(c_.begin(), c_.begin() + (n - offset_ + 1));
    return Series(offset_, std::move(c), n);
}

Series Series::shifted(int k) const {
    Series r = *this;
    if (!r.c_.empty()) r.offset_ += k;
    r.trunc_ += k;
    return r;
}

Series& Series::operator+=(const Series& o) {
    const int n = std::min(trunc_, o.trunc_);
    const int lo = std::min(valuation(), o.valuation());
    if (lo > n) {
        *this = Series(n);
        return *this;
    }
    std::vector<Poly> c(static_cast<std::size_t>(n - lo + 1));
    for (int e = lo; e <= n; ++e) c[e - lo] = coeff(e) + o.coeff(e);
    *this = Series(lo, std::move(c), n);
    return *this;
}

Series& Series::operator-=(const Series& o) { return *this += -o; }

Series operator-(Series a) {
    for (auto& p : a.c_) p = -p;
    return a;
}

Series& Series::operator*=(const Poly& c) {
    for (auto& p : c_) p *= c;
    normalize();
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    const int va = a.valuation();
    const int vb = b.valuation();
    const int n = std::min(a.trunc_ + vb, b.trunc_ + va);
    if (a.is_zero() || b.is_zero()) return Series(n);
    const int lo = va + vb;
    if (lo > n) return Series(n);
    std::vector<Poly> c(static_cast<std::size_t>(n - lo + 1));
    for (int e = lo; e <= n; ++e) {
        Poly acc;
        for (int i = va; i <= e - vb; ++i) {
            const Poly& x = a.c_[i - va];
            if (x.is_zero()) continue;
            const Poly& y = b.c_[e - i - vb];
            if (y.is_zero()) continue;
            acc += x * y;
        }
        c[e - lo] = std::move(acc);
    }
    return Series(lo, std::move(c), n);
}

Series operator/(const Series& a, const Series& b) {
    if (b.is_zero()) throw SeriesError(SeriesErrc::LeadingNotUnit, "series division by zero");
    const Poly& lead = b.c_.front();
    if (!lead.is_constant())
        throw SeriesError(SeriesErrc::LeadingNotUnit,
                          "leading coefficient " + lead.to_string() + " is not a unit");
    const Rational g0 = lead.constant_term();
    const int v = b.offset_;
    const int rel = b.trunc_ - v;
    std::vector<Poly> q(static_cast<std::size_t>(rel + 1));
    q[0] = Poly(Rational(1) / g0);
    for (int n = 1; n <= rel; ++n) {
        Poly acc;
        for (int i = 1; i <= n; ++i) {
            const Poly& g = b.c_[i];
            if (g.is_zero() || q[n - i].is_zero()) continue;
            acc += g * q[n - i];
        }
        q[n] = -acc / g0;
    }
    const Series inverse(-v, std::move(q), rel - v);
    return a * inverse;
}

Series exp(const Series& f) {
    const int n = f.truncation();
    if (n < 0) throw std::invalid_argument("exp: constant term of the argument is unknown");
    if (!f.is_zero() && f.offset() <= 0)
        throw SeriesError(SeriesErrc::NonzeroConstantTerm,
                          "exp: argument has a nonzero term at t^" + std::to_string(f.offset()));
    std::vector<Poly> fk(static_cast<std::size_t>(n + 1));
    for (int k = 1; k <= n; ++k) fk[k] = f.coeff(k) * Rational(k);
    std::vector<Poly> e(static_cast<std::size_t>(n + 1));
    e[0] = Poly(1);
    for (int m = 1; m <= n; ++m) {
        Poly acc;
        for (int k = 1; k <= m; ++k) {
            if (fk[k].is_zero() || e[m - k].is_zero()) continue;
            acc += fk[k] * e[m - k];
        }
        e[m] = acc / Rational(m);
    }
    return Series(0, std::move(e), n);
}

Series sqrt(const Series& f) {
    if (f.is_zero()) throw SeriesError(SeriesErrc::LeadingNotOne, "sqrt: argument vanishes");
    const int v = f.offset();
    if (v % 2 != 0)
        throw SeriesError(SeriesErrc::OddOffset, "sqrt: leading exponent " + std::to_string(v) + " is odd");
    if (!(f.leading() == Poly(1)))
        throw SeriesError(SeriesErrc::LeadingNotOne,
                          "sqrt: leading coefficient " + f.leading().to_string() + " is not 1");
    const int rel = f.truncation() - v;
    std::vector<Poly> r(static_cast<std::size_t>(rel + 1));
    r[0] = Poly(1);
    for (int n = 1; n <= rel; ++n) {
        Poly acc = f.coeff(v + n);
        for (int i = 1; i < n; ++i) {
            if (r[i].is_zero() || r[n - i].is_zero()) continue;
            acc -= r[i] * r[n - i];
        }
        r[n] = acc / Rational(2);
    }
    return Series(v / 2, std::move(r), v / 2 + rel);
}

Series diff(const Series& f) {
    const int n = f.truncation() - 1;
    if (f.is_zero()) return Series(n);
    const int lo = f.offset() - 1;
    if (lo > n) return Series(n);
    std::vector<Poly> c(static_cast<std::size_t>(n - lo + 1));
    for (int e = lo + 1; e <= n + 1; ++e) c[e - 1 - lo] = f.coeff(e) * Rational(e);
    return Series(lo, std::move(c), n);
}

Series integrate(const Series& f, const Poly& constant) {
    const int n = f.truncation() + 1;
    if (f.truncation() >= -1 && !f.coeff(-1).is_zero())
        throw SeriesError(SeriesErrc::ResidueObstruction, "integrate: nonzero t^-1 coefficient");
    if (n < 0 && !constant.is_zero())
        throw std::invalid_argument("integrate: constant term lies above the truncation");
    const int lo = std::min(f.is_zero() ? 0 : f.offset() + 1, 0);
    if (lo > n) return Series(n);
    std::vector<Poly> c(static_cast<std::size_t>(n - lo + 1));
    for (int e = lo; e <= n; ++e) {
        if (e == 0) {
            c[e - lo] = constant;
        } else {
            c[e - lo] = f.coeff(e - 1) / Rational(e);
        }
    }
    return Series(lo, std::move(c), n);
}

std::string Series::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        const int e = offset_ + static_cast<int>(i);
        if (!first) os << " + ";
        first = false;
        const bool bare = e != 0 && c_[i] == Poly(1);
        if (!bare) {
            if (c_[i].degree() > 0 || c_[i].constant_term().sign() < 0) {
                os << '(' << c_[i].to_string() << ')';
            } else {
                os << c_[i].to_string();
            }
        }
        if (e != 0) {
            if (!bare) os << '*';
            os << 't';
            if (e != 1) os << '^' << e;
        }
    }
    if (!first) os << " + ";
    os << "O(t^" << (trunc_ + 1) << ')';
    return os.str();
}

}  // namespace blowup
