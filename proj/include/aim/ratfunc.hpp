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

#ifndef AIM_RATFUNC_HPP
#define AIM_RATFUNC_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "aim/polynomial.hpp"

namespace aim {

/*
 * Quotient of two polynomials over F in canonical form:
 *   - gcd(numerator, denominator) = 1,
 *   - the denominator is monic,
 *   - zero is 0/1.
 * With that form equality is structural. Sums and products use the Henrici
 * formulas so the gcds run on small operands.
 */
template <class F>
class RationalFunction {
   public:
    using Poly = Polynomial<F>;

    explicit RationalFunction(char var = 'x') : num_(var), den_(F(1), var) {}
    RationalFunction(int c) : RationalFunction(F(c)) {}  // NOLINT: integer literals
    RationalFunction(const F& c, char var = 'x') : num_(c, var), den_(F(1), var) {}  // NOLINT
    RationalFunction(Poly num) : num_(std::move(num)), den_(F(1), num_.var()) {}  // NOLINT
    RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RationalFunction variable(char var = 'x') { return RationalFunction(Poly::variable(var)); }

    const Poly& numerator() const noexcept { return num_; }
    const Poly& denominator() const noexcept { return den_; }
    char var() const noexcept { return num_.is_constant() ? den_.var() : num_.var(); }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const { return den_.is_constant() && num_.is_one(); }
    bool is_polynomial() const noexcept { return den_.is_constant(); }
    bool is_constant() const noexcept { return den_.is_constant() && num_.is_constant(); }
    /// Value of a constant function.
    F constant_value() const {
        if (!is_constant()) throw UsageError("constant_value of a nonconstant rational function");
        return num_.coeff(0);
    }

    /// Exact value at t; throws PoleError if the denominator vanishes there.
    F operator()(const F& t) const {
        const F d = den_(t);
        if (d.is_zero()) throw PoleError("rational function evaluated at a pole", FieldTraits<F>::to_string(t));
        return num_(t) / d;
    }

    RationalFunction operator-() const { return from_canonical(-num_, den_); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return add(a, b, false);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return add(a, b, true);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return RationalFunction(Poly::merge_var(a.num_, b.num_));
        if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ * b.num_);
        const Poly g1 = gcd(a.num_, b.den_);
        const Poly g2 = gcd(b.num_, a.den_);
        Poly n = exact_quotient(a.num_, g1) * exact_quotient(b.num_, g2);
        Poly d = exact_quotient(a.den_, g2) * exact_quotient(b.den_, g1);
        return from_coprime(std::move(n), std::move(d));
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw ArithmeticError("division by the zero rational function");
        return a * b.reciprocal();
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction reciprocal() const {
        if (is_zero()) throw ArithmeticError("reciprocal of the zero rational function");
        return from_coprime(den_, num_);
    }

    /// Builds from an already reduced pair with a monic denominator.
    static RationalFunction from_canonical(Poly num, Poly den) {
        RationalFunction r;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        return r;
    }
    /// Builds from a coprime pair, only rescaling the denominator to be monic.
    static RationalFunction from_coprime(Poly num, Poly den) {
        if (den.is_zero()) throw ArithmeticError("rational function with zero denominator");
        const F lc = den.leading();
        if (!(lc == F(1))) {
            num /= lc;
            den /= lc;
        }
        return from_canonical(std::move(num), std::move(den));
    }

   private:
    static RationalFunction add(const RationalFunction& a, const RationalFunction& b, bool subtract) {
        if (b.is_zero()) return a;
        if (a.is_zero()) return subtract ? -b : b;
        auto combine = [subtract](Poly x, const Poly& y) { return subtract ? (x -= y) : (x += y); };
        if (a.den_ == b.den_) {
            if (a.is_polynomial()) return RationalFunction(combine(a.num_, b.num_));
            return RationalFunction(combine(a.num_, b.num_), a.den_);
        }
        if (a.is_polynomial()) return from_canonical(combine(a.num_ * b.den_, b.num_), b.den_);
        if (b.is_polynomial()) return from_canonical(combine(a.num_, b.num_ * a.den_), a.den_);
        const Poly g = gcd(a.den_, b.den_);
        if (g.is_one()) return from_canonical(combine(a.num_ * b.den_, b.num_ * a.den_), a.den_ * b.den_);
        const Poly ad = exact_quotient(a.den_, g), bd = exact_quotient(b.den_, g);
        Poly n = combine(a.num_ * bd, b.num_ * ad);
        Poly d = ad * b.den_;
        const Poly h = gcd(n, g);
        if (!h.is_one()) {
            n = exact_quotient(n, h);
            d = exact_quotient(d, h);
        }
        return from_coprime(std::move(n), std::move(d));
    }

    void normalize() {
        if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
        if (num_.is_zero()) {
            const char v = var();
            num_ = Poly(v);
            den_ = Poly(F(1), v);
            return;
        }
        if (!den_.is_constant()) {
            const Poly g = gcd(num_, den_);
            if (!g.is_one()) {
                num_ = exact_quotient(num_, g);
                den_ = exact_quotient(den_, g);
            }
        }
        const F lc = den_.leading();
        if (!(lc == F(1))) {
            num_ /= lc;
            den_ /= lc;
        }
    }

    Poly num_;
    Poly den_;
};

/// Elements of Q(q): rational functions in the variable q over Q.
using QFunction = RationalFunction<Rational>;

/// The transcendental q as an element of Q(q).
inline QFunction q_symbol() { return QFunction::variable('q'); }

/// Applies `map` to every coefficient of numerator and denominator.
template <class G, class F, class Map>
RationalFunction<G> map_coefficients(const RationalFunction<F>& f, Map&& map) {
    auto convert = [&](const Polynomial<F>& p) {
        std::vector<G> out;
        out.reserve(p.size());
        for (const auto& c : p.coefficients()) out.push_back(map(c));
        return Polynomial<G>(std::move(out), p.var());
    };
    auto den = convert(f.denominator());
    if (den.is_zero()) throw ArithmeticError("denominator vanishes after coefficient substitution");
    return RationalFunction<G>(convert(f.numerator()), std::move(den));
}

/// Substitutes a numeric q into a function over Q(q).
inline RationalFunction<Rational> specialize_q(const RationalFunction<QFunction>& f, const Rational& q) {
    return map_coefficients<Rational>(f, [&](const QFunction& c) { return c(q); });
}

namespace detail {

template <class F>
std::size_t term_count(const Polynomial<F>& p) {
    std::size_t n = 0;
    for (const auto& c : p.coefficients()) n += c.is_zero() ? 0 : 1;
    return n;
}

}  // namespace detail

/// "num/den" with parentheses only where precedence needs them.
template <class F>
std::string to_string(const RationalFunction<F>& f) {
    const std::string n = to_string(f.numerator());
    if (f.is_polynomial()) return n;
    const bool wrap_num = detail::term_count(f.numerator()) > 1;
    const bool wrap_den = detail::term_count(f.denominator()) > 1;
    const std::string d = to_string(f.denominator());
    return (wrap_num ? "(" + n + ")" : n) + "/" + (wrap_den ? "(" + d + ")" : d);
}

template <class F>
struct FieldTraits<RationalFunction<F>> {
    using RF = RationalFunction<F>;
    using Poly = Polynomial<F>;

    /*
     * Content over the polynomial ring F[var]: (gcd of numerators) / (lcm of
     * denominators), further scaled by the content of F itself so that the
     * integral parts also have primitive coefficients.
     */
    static RF content(std::span<const RF> values) {
        Poly g(values.empty() ? 'x' : values.front().var());
        Poly l(F(1), g.var());
        for (const auto& v : values) {
            if (v.is_zero()) continue;
            g = gcd(g, v.numerator());
            if (!v.denominator().is_one()) l = lcm(l, v.denominator());
        }
        if (g.is_zero()) return RF(1);
        std::vector<F> inner;
        for (const auto& v : values) {
            if (v.is_zero()) continue;
            const Poly integral = exact_quotient(v.numerator() * exact_quotient(l, v.denominator()), g);
            inner.insert(inner.end(), integral.coefficients().begin(), integral.coefficients().end());
        }
        const F c = FieldTraits<F>::content(inner);
        return RF::from_coprime(g * c, l);
    }
    static std::string to_string(const RF& v) { return aim::to_string(v); }
    static bool is_compound(const RF& v) { return v.is_polynomial() && detail::term_count(v.numerator()) > 1; }
    static std::optional<Rational> as_rational(const RF& v) {
        if (!v.is_constant()) return std::nullopt;
        return FieldTraits<F>::as_rational(v.constant_value());
    }
    static RF from_rational(const Rational& r) { return RF(FieldTraits<F>::from_rational(r)); }
    static std::optional<std::uint64_t> image(const RF& v, const ModularImage& ctx) {
        const auto d = horner_image(v.denominator(), ctx);
        if (!d || *d == 0) return std::nullopt;
        const auto n = horner_image(v.numerator(), ctx);
        if (!n) return std::nullopt;
        return ctx.mul(*n, ctx.inv(*d));
    }

   private:
    static std::optional<std::uint64_t> horner_image(const Poly& p, const ModularImage& ctx) {
        std::uint64_t acc = 0;
        const auto c = p.coefficients();
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
            const auto t = FieldTraits<F>::image(*it, ctx);
            if (!t) return std::nullopt;
            acc = ctx.add(ctx.mul(acc, ctx.point), *t);
        }
        return acc;
    }
};

}  // namespace aim

#endif
