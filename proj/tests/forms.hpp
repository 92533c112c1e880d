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

#ifndef AIM_TESTS_FORMS_HPP
#define AIM_TESTS_FORMS_HPP

#include "aim/daim.hpp"
#include "aim/families.hpp"
#include "aim/qaim.hpp"

// Closed forms and displayed solutions transcribed for comparison.
namespace aim::forms {

using P = Polynomial<Rational>;
using RF = RationalFunction<Rational>;
using PX = Polynomial<QFunction>;
using RX = RationalFunction<QFunction>;

inline Rational r(long n, long d = 1) { return Rational(n) / Rational(d); }

/// prod_{k=lo}^{hi} (x + k).
inline RF rising(long lo, long hi) {
    RF p(1);
    for (long k = lo; k <= hi; ++k) p *= RF::variable() + RF(Rational(k));
    return p;
}

inline Rational pochhammer(const Rational& a, long n) {
    Rational p(1);
    for (long k = 0; k < n; ++k) p *= a + Rational(k);
    return p;
}

// ---- Euler family ------------------------------------------------------

inline RF euler_lambda(const Rational& a, long n) {
    Rational prod(1);
    for (long k = 0; k <= n; ++k) prod *= a - Rational(k + 1);
    return RF(Rational(n + 2) * prod) / rising(1, n + 1);
}

inline RF euler_s(const Rational& a, long n) {
    Rational prod(1);
    for (long k = 0; k <= n; ++k) prod *= a - Rational(k + 1);
    return RF(-Rational(n + 1) * a * prod) / rising(0, n + 1);
}

/// n >= 1.
inline RF euler_delta(const Rational& a, long n) {
    const Rational num = -a * pochhammer(Rational(1) - a, n) * pochhammer(Rational(1) - a, n + 1);
    return RF(num) / (rising(0, n) * rising(1, n + 1));
}

// ---- hypergeometric difference equation --------------------------------

struct Hyper {
    Rational a2, a1, a0, b1, b0;
};

inline Equation<Rational> hypergeometric(const Hyper& h, const Rational& k) {
    return families::hypergeometric(h.a2, h.a1, h.a0, h.b1, h.b0, k);
}

inline P hyper_y1(const Hyper& h) { return P({h.b0 / h.b1, Rational(1)}); }

inline P hyper_y2(const Hyper& h) {
    const auto& [a2, a1, a0, b1, b0] = h;
    return P({(a0 * (r(2) * a2 + b1) + b0 * (a1 + a2 + b0 + b1)) / ((a2 + b1) * (r(2) * a2 + b1)),
              (r(2) * a1 + r(2) * b0 + b1) / (r(2) * a2 + b1), Rational(1)});
}

inline P hyper_y3(const Hyper& h) {
    const auto& [a2, a1, a0, b1, b0] = h;
    const Rational c2 = r(3) * (r(2) * a1 + r(2) * a2 + b0 + b1) / (r(4) * a2 + b1);
    const Rational c1 = (r(6) * a1 * a1 + r(12) * a2 * b0 + r(3) * b0 * b0 + r(5) * a2 * b1 + r(6) * b0 * b1 +
                         r(2) * b1 * b1 + r(3) * a0 * (r(4) * a2 + b1) + r(9) * a1 * (r(2) * a2 + b0 + b1)) /
                        ((r(3) * a2 + b1) * (r(4) * a2 + b1));
    const Rational c0 =
        (a0 * (r(36) * a2 * a2 + r(10) * a2 * b0 + r(24) * a2 * b1 + r(3) * b0 * b1 + r(4) * b1 * b1 +
               r(4) * a1 * (r(3) * a2 + b1)) +
         b0 * (r(2) * a1 * a1 + r(10) * a2 * a2 + r(7) * a2 * b0 + b0 * b0 + r(9) * a2 * b1 + r(3) * b0 * b1 +
               r(2) * b1 * b1 + a1 * (r(12) * a2 + r(3) * b0 + r(5) * b1))) /
        ((r(2) * a2 + b1) * (r(3) * a2 + b1) * (r(4) * a2 + b1));
    return P({c0, c1, c2, Rational(1)});
}

/// (n(n-1) a2 + n b1 - k) / (a0 + (n+x)(a1 + a2(n+x))), the printed delta_n/delta_{n-1}.
inline RF hyper_ratio_printed(const Hyper& h, const Rational& k, long n) {
    const Rational num = Rational(n * (n - 1)) * h.a2 + Rational(n) * h.b1 - k;
    const RF t = RF::variable() + RF(Rational(n));
    return RF(num) / (RF(h.a0) + t * (RF(h.a1) + RF(h.a2) * t));
}

/// The printed closed product, j = 0..n.
inline RF hyper_delta_product_printed(const Hyper& h, const Rational& k, const RF& delta0, long n) {
    RF p = delta0;
    for (long j = 0; j <= n; ++j) p *= hyper_ratio_printed(h, k, j);
    return p;
}

// ---- q families --------------------------------------------------------

inline QFunction qp(long k) { return families::qpow(k); }

/// Degree-5 q-Laguerre solution as displayed, with q^eta substituted.
inline PX laguerre_y5_display(long eta) {
    const QFunction q = q_symbol(), one(1), qe = qp(eta), b5 = one - qp(5);
    auto den = [&](long k) {
        QFunction d(1);
        for (long j = 1; j <= k; ++j) d *= qp(j) * qe - one;
        return d;
    };
    return PX({one, q * qe * b5 / ((one - q) * den(1)),
               qp(4) * qe * qe * (one + qp(2)) * b5 / ((one - q) * den(2)),
               qp(9) * power(qe, 3) * (one + qp(2)) * b5 / ((one - q) * den(3)),
               qp(16) * power(qe, 4) * b5 / ((one - q) * den(4)), qp(25) * power(qe, 5) / den(5)});
}

/// Degree-5 Al-Salam-Carlitz solution as displayed, over y_5(0).
inline PX asc_y5_display(const QFunction& a) {
    const QFunction q = q_symbol(), one(1);
    const QFunction p = one + q + qp(2) + qp(3) + qp(4);
    const QFunction w = qp(6) + power(a, 4) * qp(6) + a * qp(2) * (one + q) * (one + qp(2)) +
                        power(a, 3) * qp(2) * (one + q) * (one + qp(2)) +
                        a * a * (one + qp(2)) * (one + q + qp(4));
    const QFunction c1 = -p *
                         ((one + power(a, 4)) * qp(4) + a * q * (one + q) * (one + qp(2)) * (one + a * a) +
                          a * a * (one + qp(2)) * (one + q + qp(2))) /
                         ((one + a) * qp(2) * w);
    const QFunction c2 = (one + qp(2)) * (a + a * q + (one + a * a) * qp(2)) * p / (qp(3) * w);
    const QFunction c3 = -(a + (one + a + a * a) * q) * (one + qp(2)) * p / ((one + a) * qp(4) * w);
    const QFunction c4 = p / (qp(4) * w);
    const QFunction c5 = -one / ((one + a) * qp(4) * w);
    return PX({one, c1, c2, c3, c4, c5});
}

/// Degree-5 Stieltjes-Wigert solution in the displayed q-binomial form.
inline PX sw_y5_display() {
    const QFunction q = q_symbol(), one(1), b5 = one - qp(5), b4 = one - qp(4);
    const QFunction g2 = b5 * b4 / ((one - q) * (one - qp(2)));
    return PX({one, -b5 / (one - q) * q, g2 * qp(4), -g2 * qp(9), b5 / (one - q) * qp(16), -qp(25)});
}

/// delta_{m+1}/delta_m for the q-Laguerre equation, as computed by the oracle.
inline RX laguerre_ratio(long n, long m) {
    const QFunction q = q_symbol(), one(1);
    const RX x = RX::variable();
    const RX den = RX((q - one) * (q - one)) * x * (RX(1) + RX(qp(m + 2)) * x);
    return m == 0 ? RX(qp(n) - q) / den : RX(qp(m + 1) - qp(n)) / den;
}

/// The printed q-Laguerre ratio, without the factor x in (1 + q^{m+2} x).
inline RX laguerre_ratio_printed(long n, long m) {
    const QFunction q = q_symbol(), one(1);
    return RX(qp(m + 1) - qp(n)) / (RX((q - one) * (q - one) * (one + qp(m + 2))) * RX::variable());
}

inline RX asc_ratio_printed(long n, long m, const QFunction& a) {
    const QFunction q = q_symbol(), one(1);
    return RX(qp(2 - n) * (qp(m + 1) - qp(n)) / (a * (q - one) * (q - one)));
}

inline RX sw_ratio_printed(long n, long m) {
    const QFunction q = q_symbol(), one(1);
    const RX x = RX::variable();
    return RX(qp(n) - qp(m + 1)) / (RX(qp(m + 2) * (q - one) * (q - one)) * x * x);
}

}  // namespace aim::forms

#endif
