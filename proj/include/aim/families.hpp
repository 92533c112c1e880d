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

#ifndef AIM_FAMILIES_HPP
#define AIM_FAMILIES_HPP

#include "aim/daim.hpp"
#include "aim/qaim.hpp"

// Reference equations with known polynomial solutions, built directly in the field.
namespace aim::families {

using RQ = RationalFunction<Rational>;
using RX = RationalFunction<QFunction>;
using PQ = Polynomial<Rational>;
using PX = Polynomial<QFunction>;

/// x (x+1) Delta^2 y - 2(a-1) x Delta y + a(a-1) y = 0; degree n solution at a = n+1.
inline Equation<Rational> euler(const Rational& a) {
    const PQ x1({Rational(1), Rational(1)});
    const PQ xx1({Rational(0), Rational(1), Rational(1)});
    return {RQ(PQ(Rational(2) * (a - Rational(1))), x1), RQ(PQ(a - a * a), xx1)};
}

/// (a2 x^2 + a1 x + a0) Delta^2 y + (b1 x + b0) Delta y - k y = 0.
template <class F>
Equation<F> hypergeometric(const F& a2, const F& a1, const F& a0, const F& b1, const F& b0, const F& k) {
    using P = Polynomial<F>;
    const P den({a0, a1, a2});
    if (den.is_zero()) throw UsageError("hypergeometric leading coefficient vanishes");
    return {RationalFunction<F>(-P({b0, b1}), den), RationalFunction<F>(P(k), den)};
}

/// Meixner instance of the hypergeometric equation; terminates at n when k = n(1 - mu).
inline Equation<Rational> meixner(const Rational& mu, const Rational& delta, long n, const Rational& k) {
    if (mu.is_zero()) throw UsageError("meixner needs mu != 0");
    const Rational one(1);
    const PQ den({mu * (delta + one), mu});
    const PQ lam({-((mu - one) * (one - Rational(n)) + mu * delta), -(mu - one)});
    return {RQ(lam, den), RQ(PQ(-k), den)};
}

inline Rational meixner_eigenvalue(const Rational& mu, long n) { return Rational(n) * (Rational(1) - mu); }

/// Delta^2 y = (a x + b) Delta y + gamma y; polynomial solution of degree n iff gamma = -n a (a != 0).
inline Equation<Rational> hermite_difference(const Rational& a, const Rational& b, const Rational& gamma) {
    return {RQ(PQ({b, a})), RQ(PQ(gamma))};
}

/// Constant coefficients lambda0 = a, s0 = b.
template <class F>
Equation<F> constant(const F& a, const F& b) {
    return {RationalFunction<F>(a), RationalFunction<F>(b)};
}

inline QFunction qpow(long k) { return power(q_symbol(), k); }

/// Little q-Laguerre type equation with parameters n (degree) and eta.
inline SymbolicQEquation q_laguerre(long n, long eta) {
    const QFunction q = q_symbol(), one(1);
    const PX den({QFunction(0), q - one, q * (q - one)});  // (q-1) x (1 + q x)
    const PX lam({qpow(-1 - eta) - one, -(one + q - qpow(n))});
    const PX s({(qpow(n) - one) / (q - one)});
    return {RX(lam, den), RX(s, den), q};
}

/// Al-Salam-Carlitz type equation; polynomial coefficients in x.
inline SymbolicQEquation al_salam_carlitz(long n, const QFunction& a) {
    const QFunction q = q_symbol(), one(1);
    if (a.is_zero()) throw UsageError("al-salam-carlitz needs a != 0");
    const QFunction c = a - a * q;
    const PX lam({(q + a * q) / c, -qpow(2 - n) / c});
    const PX s({-qpow(2 - n) * (qpow(n) - one) / (a * (q - one) * (q - one))});
    return {RX(lam), RX(s), q};
}

/// Stieltjes-Wigert type equation.
inline SymbolicQEquation stieltjes_wigert(long n) {
    const QFunction q = q_symbol(), one(1);
    const PX lam({one, -q * (one + q - qpow(n))});
    const PX lden({QFunction(0), QFunction(0), (q - one) * q * q});
    const PX s({(qpow(n) - one) / ((q - one) * (q - one) * q)});
    const PX sden({QFunction(0), QFunction(0), one});
    return {RX(lam, lden), RX(s, sden), q};
}

/// sum_k [n k]_q (-1)^k q^{k^2} x^k.
inline PX stieltjes_wigert_closed_form(long n) {
    std::vector<QFunction> c;
    for (long k = 0; k <= n; ++k) {
        QFunction t = gaussian_binomial(n, k, q_symbol()) * qpow(k * k);
        c.push_back(k % 2 ? -t : t);
    }
    return PX(std::move(c));
}

/// Rising factorial (x)_n as a polynomial.
inline PQ pochhammer(long n) {
    PQ p(Rational(1));
    for (long k = 0; k < n; ++k) p = p * PQ({Rational(k), Rational(1)});
    return p;
}

}  // namespace aim::families

#endif
