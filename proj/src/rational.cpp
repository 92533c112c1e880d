/*
   Copyright 2026 The aim Authors

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

#include "aim/rational.hpp"

#include <cctype>
#include <limits>

namespace aim {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw ArithmeticError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw UsageError("empty rational literal");
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    auto digits = [&](std::size_t from, std::size_t to) {
        if (from >= to) return false;
        for (std::size_t k = from; k < to; ++k)
            if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
        return true;
    };
    Rational r;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        if (!digits(i, slash) || !digits(slash + 1, s.size())) throw UsageError("malformed rational '" + s + "'");
        r = Rational(Integer(s.substr(i, slash - i), 10), Integer(s.substr(slash + 1), 10));
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        const bool frac_ok = dot + 1 == s.size() || digits(dot + 1, s.size());
        if (!digits(i, dot) || !frac_ok) throw UsageError("malformed decimal '" + s + "'");
        const std::string whole = s.substr(i, dot - i);
        const std::string frac = s.substr(dot + 1);
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        r = Rational(Integer(whole + frac, 10), scale);
    } else {
        if (!digits(i, s.size())) throw UsageError("malformed integer '" + s + "'");
        r = Rational(Integer(s.substr(i), 10));
    }
    return neg ? -r : r;
}

std::optional<long> Rational::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p()) return std::nullopt;
    return v_.get_num().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ArithmeticError("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, long e) {
    if (e < 0) {
        if (r.is_zero()) throw ArithmeticError("zero raised to a negative power");
        return Rational(1) / pow(r, -e);
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), r.numerator().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), r.denominator().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(num, den);
}

Rational primitive_content(std::span<const Rational> values) {
    Integer g = 0, l = 1;
    int lead_sign = 0;
    for (const auto& v : values) {
        if (v.is_zero()) continue;
        lead_sign = v.sign();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.numerator().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.denominator().get_mpz_t());
    }
    if (lead_sign == 0) return Rational(1);
    Rational c(g, l);
    return lead_sign < 0 ? -c : c;
}

std::string to_string(const Rational& r) { return r.to_string(); }

namespace {

/// Integer numerators over the common denominator of v.
Integer scale_to_integers(std::span<const Rational> v, std::vector<Integer>& out) {
    Integer l = 1;
    for (const auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
    out.resize(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        mpz_divexact(out[i].get_mpz_t(), l.get_mpz_t(), v[i].raw().get_den_mpz_t());
        out[i] *= v[i].raw().get_num();
    }
    return l;
}

}  // namespace

std::vector<Rational> convolve(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Integer> ia, ib;
    const Integer la = scale_to_integers(a, ia), lb = scale_to_integers(b, ib);
    std::vector<Integer> acc(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < ia.size(); ++i) {
        if (sgn(ia[i]) == 0) continue;
        for (std::size_t j = 0; j < ib.size(); ++j) mpz_addmul(acc[i + j].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
    }
    const Integer den = la * lb;
    std::vector<Rational> out;
    out.reserve(acc.size());
    for (const auto& c : acc) out.emplace_back(c, den);
    return out;
}

}  // namespace aim
