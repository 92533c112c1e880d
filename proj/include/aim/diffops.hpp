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

#ifndef AIM_DIFFOPS_HPP
#define AIM_DIFFOPS_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "aim/ratfunc.hpp"

namespace aim {

enum class OperatorKind { Delta, Dq };

/// Values of a function on the unit-spaced grid start, start+1, ...
template <class F>
struct GridFunction {
    Rational start;
    std::vector<F> values;

    std::size_t size() const noexcept { return values.size(); }
    /// Value at the integer point x (must lie on the grid).
    const F& at(long x) const {
        const Rational offset = Rational(x) - start;
        const auto i = offset.to_long();
        if (!i || *i < 0 || static_cast<std::size_t>(*i) >= values.size())
            throw UsageError("grid point " + std::to_string(x) + " outside grid");
        return values[static_cast<std::size_t>(*i)];
    }
};

// ---- shift-type operators ----------------------------------------------

/// f(x + k). Shifting is a field automorphism, so no renormalization is needed.
template <class F>
RationalFunction<F> shift(const RationalFunction<F>& f, long k) {
    if (k == 0) return f;
    const F step = FieldTraits<F>::from_rational(Rational(k));
    return RationalFunction<F>::from_canonical(taylor_shift(f.numerator(), step), taylor_shift(f.denominator(), step));
}

/// Forward difference applied `order` times.
template <class F>
RationalFunction<F> delta(RationalFunction<F> f, unsigned order = 1) {
    for (unsigned i = 0; i < order; ++i) f = shift(f, 1) - f;
    return f;
}

/// Backward difference applied `order` times.
template <class F>
RationalFunction<F> nabla(RationalFunction<F> f, unsigned order = 1) {
    for (unsigned i = 0; i < order; ++i) f = f - shift(f, -1);
    return f;
}

/// q^j for any integer j.
template <class F>
F power(const F& q, long j) {
    if (j < 0) return F(1) / power(q, -j);
    F r(1), b = q;
    for (unsigned long e = static_cast<unsigned long>(j); e; e >>= 1U) {
        if (e & 1U) r = r * b;
        if (e > 1) b = b * b;
    }
    return r;
}

/// f(q^j x).
template <class F>
RationalFunction<F> qscale(const RationalFunction<F>& f, long j, const F& q) {
    if (j == 0 || f.is_constant()) return f;
    const F c = power(q, j);
    return RationalFunction<F>::from_coprime(scale_variable(f.numerator(), c), scale_variable(f.denominator(), c));
}

/// q-derivative (f(x) - f(qx)) / ((1 - q) x), applied `order` times.
template <class F>
RationalFunction<F> dq(RationalFunction<F> f, const F& q, unsigned order = 1) {
    if (q == F(1) || q.is_zero()) throw UsageError("D_q needs q different from 0 and 1");
    using Poly = Polynomial<F>;
    const RationalFunction<F> denom(Poly({F(0), F(1) - q}, f.var()));
    for (unsigned i = 0; i < order; ++i) f = (f - qscale(f, 1, q)) / denom;
    return f;
}

// ---- q-series helpers ---------------------------------------------------

/// [n]_q = 1 + q + ... + q^(n-1).
template <class F>
F q_integer(long n, const F& q) {
    F s(0), t(1);
    for (long i = 0; i < n; ++i) {
        s = s + t;
        t = t * q;
    }
    return s;
}

/// (a; q)_n = prod_{j<n} (1 - a q^j).
template <class F>
F q_pochhammer(const F& a, const F& q, long n) {
    F p(1), t = a;
    for (long j = 0; j < n; ++j) {
        p = p * (F(1) - t);
        t = t * q;
    }
    return p;
}

/// Gaussian binomial (q;q)_n / ((q;q)_k (q;q)_{n-k}); zero outside 0 <= k <= n.
template <class F>
F gaussian_binomial(long n, long k, const F& q) {
    if (k < 0 || k > n) return F(0);
    return q_pochhammer(q, q, n) / (q_pochhammer(q, q, k) * q_pochhammer(q, q, n - k));
}

inline Rational binomial(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

// ---- first-order solvers ------------------------------------------------

/*
 * y(i+1) = lambda(i) y(i) + g(i), y(n0) = y0, tabulated for i = n0..n.
 * The closed form is the product/sum formula; stepping the recurrence gives
 * the same values exactly. Poles surface as PoleError from the callables.
 */
template <class F>
GridFunction<F> solve_first_order_grid(const std::function<F(long)>& lambda, const std::function<F(long)>& g,
                                       const F& y0, long n0, long n) {
    if (n < n0) throw UsageError("solve_first_order_grid: end before start");
    GridFunction<F> out{Rational(n0), {y0}};
    out.values.reserve(static_cast<std::size_t>(n - n0 + 1));
    for (long i = n0; i < n; ++i) out.values.push_back(lambda(i) * out.values.back() + g(i));
    return out;
}

struct QSeriesValue {
    double value = 0;
    std::size_t terms = 0;  ///< factors consumed before the tail bound was met
};

inline constexpr std::size_t kMaxProductFactors = 10000;

inline double eval_double(const RationalFunction<Rational>& f, const Rational& t) {
    return f(t).to_double();
}

/*
 * Solution continuous at 0 of D_q y = alpha y + beta:
 *
 *   y(x) = y0 / P_inf + sum_k x q^k (1-q) beta(x q^k) / P_k,
 *   P_k  = prod_{j<=k} [1 - (1-q) x q^j alpha(x q^j)].
 *
 * Factors are evaluated exactly and accumulated in double. Stops once
 * |x| q^k max(|alpha|, |beta|, 1) < tol at the current node.
 */
inline QSeriesValue solve_first_order_q(const RationalFunction<Rational>& alpha,
                                        const RationalFunction<Rational>& beta, const Rational& y0,
                                        const Rational& x, const Rational& q, double tol) {
    if (!(q.sign() > 0 && q < Rational(1))) throw UsageError("solve_first_order_q needs 0 < q < 1");
    if (!(tol > 0)) throw UsageError("solve_first_order_q needs tol > 0");
    const double one_minus_q = (Rational(1) - q).to_double();
    const double y0d = y0.to_double();
    double product = 1, series = 0;
    Rational node = x;  // x q^k
    for (std::size_t k = 0; k < kMaxProductFactors; ++k) {
        const double a = alpha.is_zero() ? 0.0 : eval_double(alpha, node);
        const double b = beta.is_zero() ? 0.0 : eval_double(beta, node);
        const double t = node.to_double();
        product *= 1 - one_minus_q * t * a;
        if (product == 0) throw PoleError("first-order q-solution hits a zero factor", node.to_string());
        series += t * one_minus_q * b / product;
        const double bound = std::abs(t) * std::max({std::abs(a), std::abs(b), 1.0});
        if (bound < tol) return {y0d / product + series, k + 1};
        node *= q;
    }
    throw TruncationError("infinite q-product did not meet its tail bound within the factor cap");
}

}  // namespace aim

#endif
