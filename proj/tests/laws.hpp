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

#ifndef AIM_TESTS_LAWS_HPP
#define AIM_TESTS_LAWS_HPP

#include "aim/diffops.hpp"

// Operator identities as predicates, shared by the unit and acceptance suites.
namespace aim::laws {

template <class F>
using RF = RationalFunction<F>;

inline Rational factorial(long n) { return n <= 1 ? Rational(1) : Rational(n) * factorial(n - 1); }

template <class F>
bool product_rule(const RF<F>& f, const RF<F>& g) {
    const auto lhs = delta(f * g);
    return lhs == g * delta(f) + shift(f, 1) * delta(g) && lhs == f * delta(g) + g * delta(f) + delta(f) * delta(g);
}

template <class F>
bool quotient_rule(const RF<F>& g, const RF<F>& f) {
    return delta(g / f) == (f * delta(g) - g * delta(f)) / (f * shift(f, 1));
}

template <class F>
bool delta_nabla(const RF<F>& f) {
    const auto second = shift(f, 1) - RF<F>(2) * f + shift(f, -1);
    return delta(nabla(f)) == second && nabla(delta(f)) == second && delta(f) - nabla(f) == second;
}

template <class F>
bool shift_commutes(const RF<F>& f, long k) {
    return delta(shift(f, k)) == shift(delta(f), k) && nabla(shift(f, k)) == shift(nabla(f), k);
}

/// nabla^k f(x+k) = delta^k f(x).
template <class F>
bool nabla_delta_shift(const RF<F>& f, unsigned k) {
    return nabla(shift(f, static_cast<long>(k)), k) == delta(f, k) && delta(shift(f, -static_cast<long>(k)), k) == nabla(f, k);
}

/// The binomial expansions of delta^n and nabla^n.
template <class F>
bool binomial_expansion(const RF<F>& f, unsigned n) {
    RF<F> d(0), b(0);
    for (long k = 0; k <= static_cast<long>(n); ++k) {
        const RF<F> c(FieldTraits<F>::from_rational(binomial(n, k) * (k % 2 ? Rational(-1) : Rational(1))));
        d += c * shift(f, static_cast<long>(n) - k);
        b += c * shift(f, -k);
    }
    return delta(f, n) == d && nabla(f, n) == b;
}

/// Sum as printed: n! sum_{j+k<=n} D^j f D^k g / (j! k! (n-j-k)!).
template <class F>
bool leibniz_printed(const RF<F>& f, const RF<F>& g, unsigned n) {
    RF<F> sum(0);
    for (unsigned j = 0; j <= n; ++j)
        for (unsigned k = 0; j + k <= n; ++k)
            sum += RF<F>(FieldTraits<F>::from_rational(factorial(n) / (factorial(j) * factorial(k) * factorial(n - j - k)))) *
                   delta(f, j) * delta(g, k);
    return delta(f * g, n) == sum;
}

/// sum_{j,k<=n, j+k>=n} n!/((n-j)! (n-k)! (j+k-n)!) D^j f D^k g.
template <class F>
bool leibniz(const RF<F>& f, const RF<F>& g, unsigned n) {
    RF<F> sum(0);
    for (unsigned j = 0; j <= n; ++j)
        for (unsigned k = n - j; k <= n; ++k)
            sum += RF<F>(FieldTraits<F>::from_rational(factorial(n) /
                                                       (factorial(n - j) * factorial(n - k) * factorial(j + k - n)))) *
                   delta(f, j) * delta(g, k);
    return delta(f * g, n) == sum;
}

/*
 * (1-q)^n x^n D_q^n f = sign q^{-C(n,2)} sum_k [n k]_q (-1)^k q^{C(k,2)} f(x q^{n-k});
 * sign = 1 is the printed form, sign = (-1)^n the one that holds.
 */
template <class F>
bool q_expansion(const RF<F>& f, const F& q, unsigned n, bool alternating_sign) {
    const long nn = static_cast<long>(n);
    const RF<F> x = RF<F>::variable();
    RF<F> lhs = f;
    lhs = dq(lhs, q, n);
    RF<F> xn(1);
    for (unsigned i = 0; i < n; ++i) xn *= x;
    lhs = RF<F>(power(F(1) - q, nn)) * xn * lhs;
    RF<F> sum(0);
    for (long k = 0; k <= nn; ++k) {
        const F c = gaussian_binomial(nn, k, q) * power(q, k * (k - 1) / 2);
        sum += RF<F>(k % 2 ? -c : c) * qscale(f, nn - k, q);
    }
    F scale = power(q, -nn * (nn - 1) / 2);
    if (alternating_sign && n % 2) scale = -scale;
    return lhs == RF<F>(scale) * sum;
}

template <class F>
bool q_product_rule(const RF<F>& f, const RF<F>& g, const F& q) {
    return dq(f * g, q) == g * dq(f, q) + qscale(f, 1, q) * dq(g, q);
}

template <class F>
bool q_quotient_rule(const RF<F>& f, const RF<F>& g, const F& q) {
    return dq(f / g, q) == (g * dq(f, q) - f * dq(g, q)) / (qscale(g, 1, q) * g);
}

}  // namespace aim::laws

#endif
