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

#ifndef AIM_POLYNOMIAL_HPP
#define AIM_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "aim/errors.hpp"
#include "aim/field.hpp"

namespace aim {

/// Degree reported for the zero polynomial. No real polynomial has it.
inline constexpr int kZeroDegree = -1;

/*
 * Dense univariate polynomial over a field F, coefficients indexed by power.
 *
 * Invariant: the coefficient vector has no trailing zeros, so the zero
 * polynomial is the empty vector and degree() == kZeroDegree for it.
 *
 * The variable name is carried for printing and for catching accidental mixes
 * of x- and q-polynomials. Constants are compatible with every variable.
 */
template <class F>
class Polynomial {
   public:
    using Coefficient = F;

    explicit Polynomial(char var = 'x') : var_(var) {}
    Polynomial(const F& c, char var = 'x') : var_(var) {  // NOLINT: constant embedding
        if (!c.is_zero()) c_.push_back(c);
    }
    Polynomial(std::vector<F> coeffs, char var = 'x') : c_(std::move(coeffs)), var_(var) { trim(); }
    Polynomial(std::initializer_list<F> coeffs, char var = 'x') : c_(coeffs), var_(var) { trim(); }

    static Polynomial monomial(const F& c, std::size_t k, char var = 'x') {
        if (c.is_zero()) return Polynomial(var);
        std::vector<F> v(k + 1, F(0));
        v[k] = c;
        return Polynomial(std::move(v), var);
    }
    static Polynomial variable(char var = 'x') { return monomial(F(1), 1, var); }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == F(1); }
    char var() const noexcept { return var_; }
    std::span<const F> coefficients() const noexcept { return c_; }
    std::size_t size() const noexcept { return c_.size(); }

    /// Coefficient of var^k; zero beyond the degree.
    F coeff(std::size_t k) const { return k < c_.size() ? c_[k] : F(0); }
    const F& operator[](std::size_t k) const { return c_.at(k); }
    const F& leading() const {
        if (c_.empty()) throw UsageError("leading coefficient of the zero polynomial");
        return c_.back();
    }
    /// Largest v with var^v dividing *this (0 for the zero polynomial).
    std::size_t valuation() const {
        std::size_t v = 0;
        while (v < c_.size() && c_[v].is_zero()) ++v;
        return v == c_.size() ? 0 : v;
    }

    /// Horner evaluation.
    F operator()(const F& t) const {
        F acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& a : r.c_) a = -a;
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) {
        var_ = merge_var(*this, o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        var_ = merge_var(*this, o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const F& s) {
        if (s.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& a : c_) a = a * s;
        return *this;
    }
    Polynomial& operator/=(const F& s) {
        if (s.is_zero()) throw ArithmeticError("polynomial divided by zero scalar");
        for (auto& a : c_) a = a / s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const F& s) { return a *= s; }
    friend Polynomial operator*(const F& s, Polynomial a) { return a *= s; }
    friend Polynomial operator/(Polynomial a, const F& s) { return a /= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        const char v = merge_var(a, b);
        if (a.is_zero() || b.is_zero()) return Polynomial(v);
        if constexpr (std::is_same_v<F, Rational>) {
            if (a.c_.size() > 2 && b.c_.size() > 2) return Polynomial(convolve(a.c_, b.c_), v);
        }
        std::vector<F> out(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                out[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Polynomial(std::move(out), v);
    }
    /// Structural equality; the variable only matters for nonconstant polynomials.
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.c_.size() != b.c_.size()) return false;
        if (a.c_.size() > 1 && a.var_ != b.var_) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    /// Multiply by var^k.
    Polynomial shifted_up(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<F> v(k, F(0));
        v.insert(v.end(), c_.begin(), c_.end());
        return Polynomial(std::move(v), var_);
    }
    /// Divide by var^k; the low k coefficients must be zero.
    Polynomial shifted_down(std::size_t k) const {
        if (k == 0 || is_zero()) return *this;
        if (k > valuation()) throw ArithmeticError("shifted_down would discard nonzero coefficients");
        return Polynomial(std::vector<F>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()), var_);
    }
    Polynomial with_var(char v) const {
        Polynomial r(*this);
        r.var_ = v;
        return r;
    }

    static char merge_var(const Polynomial& a, const Polynomial& b) {
        if (a.is_constant()) return b.is_constant() ? a.var_ : b.var_;
        if (!b.is_constant() && a.var_ != b.var_)
            throw UsageError(std::string("polynomials in different variables: ") + a.var_ + " and " + b.var_);
        return a.var_;
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<F> c_;
    char var_ = 'x';
};

template <class F>
struct DivRem {
    Polynomial<F> quotient;
    Polynomial<F> remainder;
};

/// Euclidean division over the field: a = q*b + r with deg r < deg b.
template <class F>
DivRem<F> divrem(const Polynomial<F>& a, const Polynomial<F>& b) {
    if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
    const char v = Polynomial<F>::merge_var(a, b);
    if (a.degree() < b.degree()) return {Polynomial<F>(v), a.with_var(v)};
    std::vector<F> r(a.coefficients().begin(), a.coefficients().end());
    const auto bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    const F& lb = bc.back();
    const bool monic = lb == F(1);
    std::vector<F> q(r.size() - db, F(0));
    for (std::size_t k = r.size(); k-- > db;) {
        if (r[k].is_zero()) continue;
        const F t = monic ? r[k] : r[k] / lb;
        q[k - db] = t;
        for (std::size_t i = 0; i < db; ++i)
            if (!bc[i].is_zero()) r[k - db + i] = r[k - db + i] - t * bc[i];
        r[k] = F(0);
    }
    r.resize(db);
    return {Polynomial<F>(std::move(q), v), Polynomial<F>(std::move(r), v)};
}

/// a / b, which must be exact.
template <class F>
Polynomial<F> exact_quotient(const Polynomial<F>& a, const Polynomial<F>& b) {
    if (b.is_one()) return a;
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw ArithmeticError("inexact polynomial division");
    return q;
}

/// lc(b)^e * a mod b for some e <= deg a - deg b + 1, using only ring
/// operations (steps with a vanishing top coefficient skip the scaling).
template <class F>
Polynomial<F> pseudo_remainder(const Polynomial<F>& a, const Polynomial<F>& b) {
    if (b.is_zero()) throw ArithmeticError("pseudo-remainder by zero");
    const char v = Polynomial<F>::merge_var(a, b);
    std::vector<F> r(a.coefficients().begin(), a.coefficients().end());
    const auto bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    const F& lb = bc.back();
    std::size_t top = r.size();
    while (top > db) {
        const std::size_t k = top - 1;
        if (!r[k].is_zero()) {
            const F lr = r[k];
            for (std::size_t i = 0; i < k; ++i) r[i] = r[i] * lb;
            for (std::size_t i = 0; i < db; ++i)
                if (!bc[i].is_zero()) r[k - db + i] = r[k - db + i] - lr * bc[i];
        }
        r[k] = F(0);
        --top;
    }
    r.resize(std::min(r.size(), db));
    return Polynomial<F>(std::move(r), v);
}

template <class F>
Polynomial<F> monic(const Polynomial<F>& p) {
    if (p.is_zero() || p.leading() == F(1)) return p;
    return p / p.leading();
}

template <class F>
F content(const Polynomial<F>& p) {
    return FieldTraits<F>::content(p.coefficients());
}

template <class F>
Polynomial<F> primitive_part(const Polynomial<F>& p) {
    if (p.is_zero()) return p;
    const F c = content(p);
    return c == F(1) ? p : p / c;
}

namespace detail {

inline constexpr ModularImage kImages[] = {{2147483647, 1234577}, {2147483629, 7654337}, {2147483587, 3141593}};

/*
 * Degree of gcd(a, b) after reduction modulo a prime (inner variable
 * specialized). When both leading coefficients survive the reduction this is
 * an upper bound for the degree of the true gcd. nullopt if no listed prime
 * is usable.
 */
template <class F>
std::optional<std::size_t> modular_gcd_degree(const Polynomial<F>& a, const Polynomial<F>& b) {
    for (const auto& ctx : kImages) {
        auto reduce = [&](const Polynomial<F>& p) -> std::optional<std::vector<std::uint64_t>> {
            std::vector<std::uint64_t> out;
            out.reserve(p.size());
            for (const auto& c : p.coefficients()) {
                const auto t = FieldTraits<F>::image(c, ctx);
                if (!t) return std::nullopt;
                out.push_back(*t);
            }
            if (out.back() == 0) return std::nullopt;
            return out;
        };
        auto u = reduce(a), v = reduce(b);
        if (!u || !v) continue;
        // Euclid over Z/p on coefficient vectors without trailing zeros
        auto trim = [](std::vector<std::uint64_t>& w) {
            while (!w.empty() && w.back() == 0) w.pop_back();
        };
        while (!v->empty()) {
            if (u->size() >= v->size()) {
                const auto inv = ctx.inv(v->back());
                while (u->size() >= v->size()) {
                    const auto t = ctx.mul(u->back(), inv);
                    const std::size_t off = u->size() - v->size();
                    for (std::size_t i = 0; i < v->size(); ++i)
                        (*u)[off + i] = ctx.sub((*u)[off + i], ctx.mul(t, (*v)[i]));
                    trim(*u);
                    if (u->empty()) break;
                }
            }
            std::swap(*u, *v);
        }
        return u->size() - 1;
    }
    return std::nullopt;
}

}  // namespace detail

/*
 * Monic gcd. gcd(0, 0) = 0 and gcd(p, 0) = monic(p).
 *
 * Primitive pseudo-remainder sequence: each remainder is stripped of its
 * content, so over Q the coefficients stay integers and over Q(q) they stay
 * polynomials in q. Common powers of the variable are split off first.
 */
template <class F>
Polynomial<F> gcd(const Polynomial<F>& a0, const Polynomial<F>& b0) {
    const char v = Polynomial<F>::merge_var(a0, b0);
    if (a0.is_zero()) return monic(b0).with_var(v);
    if (b0.is_zero()) return monic(a0).with_var(v);
    const std::size_t va = a0.valuation(), vb = b0.valuation();
    const std::size_t common = std::min(va, vb);
    const auto x_power = Polynomial<F>::monomial(F(1), common, v);
    Polynomial<F> a = a0.shifted_down(va), b = b0.shifted_down(vb);
    if (a.is_constant() || b.is_constant()) return x_power;
    if (a.degree() < b.degree()) std::swap(a, b);
    if (const auto bound = detail::modular_gcd_degree(a, b)) {
        if (*bound == 0) return x_power;
        if (*bound == static_cast<std::size_t>(b.degree()) && divrem(a, b).remainder.is_zero())
            return monic(b).shifted_up(common).with_var(v);
    }
    a = primitive_part(a);
    b = primitive_part(b);
    while (true) {
        Polynomial<F> r = pseudo_remainder(a, b);
        if (r.is_zero()) break;
        if (r.is_constant()) return x_power;
        a = std::move(b);
        b = primitive_part(r);
    }
    return monic(b).shifted_up(common).with_var(v);
}

/// Monic least common multiple; lcm with zero is zero.
template <class F>
Polynomial<F> lcm(const Polynomial<F>& a, const Polynomial<F>& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial<F>(Polynomial<F>::merge_var(a, b));
    return monic(exact_quotient(a, gcd(a, b)) * b);
}

template <class F>
Polynomial<F> pow(const Polynomial<F>& p, std::size_t e) {
    Polynomial<F> result(F(1), p.var()), base = p;
    while (e) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e) base *= base;
    }
    return result;
}

/// p(var + k), by repeated synthetic division (Horner in the shifted basis).
template <class F>
Polynomial<F> taylor_shift(const Polynomial<F>& p, const F& k) {
    if (p.is_constant() || k.is_zero()) return p;
    std::vector<F> a(p.coefficients().begin(), p.coefficients().end());
    const std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j > i; --j) a[j - 1] = a[j - 1] + k * a[j];
    return Polynomial<F>(std::move(a), p.var());
}

/// p(c * var): coefficient k is multiplied by c^k.
template <class F>
Polynomial<F> scale_variable(const Polynomial<F>& p, const F& c) {
    if (p.is_constant()) return p;
    std::vector<F> a(p.coefficients().begin(), p.coefficients().end());
    F ck(1);
    for (std::size_t k = 1; k < a.size(); ++k) {
        ck = ck * c;
        a[k] = a[k] * ck;
    }
    return Polynomial<F>(std::move(a), p.var());
}

/// Text form in the expression language, e.g. "3*x^2 - 1/2*x + 1".
template <class F>
std::string to_string(const Polynomial<F>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto c = p.coefficients();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k].is_zero()) continue;
        std::string coef = FieldTraits<F>::to_string(c[k]);
        const bool compound = FieldTraits<F>::is_compound(c[k]);
        bool negative = !compound && !coef.empty() && coef[0] == '-';
        if (negative) coef.erase(0, 1);
        if (!out.empty()) out += negative ? " - " : " + ";
        else if (negative) out += "-";
        if (k == 0) {
            out += compound ? "(" + coef + ")" : coef;
            continue;
        }
        if (coef != "1") out += (compound ? "(" + coef + ")" : coef) + "*";
        out += p.var();
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace aim

#endif
