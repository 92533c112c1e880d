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

#ifndef AIM_QAIM_HPP
#define AIM_QAIM_HPP

#include <vector>

#include "aim/engine.hpp"

namespace aim {

/*
 * D_q^2 y = lambda0 D_q y + s0 y. With F = QFunction the base q is the
 * transcendental q_symbol(); with F = Rational it is a number in (0, 1).
 */
template <class F>
struct QEquation {
    RationalFunction<F> lambda0;
    RationalFunction<F> s0;
    F q;

    Operator<F> op() const { return {OperatorKind::Dq, q}; }
};

using SymbolicQEquation = QEquation<QFunction>;

template <class F>
AimTrace<F> q_iterate(const QEquation<F>& eq, long m_max) {
    if (m_max < 0) throw UsageError("m_max must be non-negative");
    AimTrace<F> t(eq.op(), eq.lambda0, eq.s0);
    t.extend_to(m_max);
    return t;
}

template <class F>
TerminationReport q_find_termination(const QEquation<F>& eq, long m_max) {
    AimTrace<F> t(eq.op(), eq.lambda0, eq.s0);
    return find_termination(t, m_max);
}

template <class F>
std::vector<PolynomialSolution<F>> q_polynomial_solution(const QEquation<F>& eq, long n) {
    return polynomial_solutions(eq.op(), eq.lambda0, eq.s0, n, Normalization::UnitConstant);
}

template <class F>
RationalFunction<F> q_verify(const QEquation<F>& eq, const Polynomial<F>& y) {
    return residual(eq.op(), eq.lambda0, eq.s0, RationalFunction<F>(y));
}

/// Value of the function at a numeric q. Numeric-q functions pass through.
inline RationalFunction<Rational> at_numeric_q(const RationalFunction<QFunction>& f, const Rational& q) {
    return specialize_q(f, q);
}
inline RationalFunction<Rational> at_numeric_q(const RationalFunction<Rational>& f, const Rational&) { return f; }

/*
 * First solution as the infinite product
 *   y(x) = y(0) / prod_k [1 + (1-q) q^k x r(q^k x)],  r = s_{n-1}/lambda_{n-1},
 * evaluated for numeric q with the truncation rule of solve_first_order_q.
 */
template <class F>
QSeriesValue q_product_solution_value(AimTrace<F>& trace, long n, const Rational& x, const Rational& q, double tol,
                                      const Rational& y0 = Rational(1)) {
    if (n < 0) throw UsageError("product solution needs a termination index >= 0");
    trace.extend_to(n);
    const auto& lam = trace.at(n - 1).lambda;
    if (lam.is_zero()) throw PoleError("lambda_{n-1} vanishes identically", "all x");
    const auto r = at_numeric_q(trace.at(n - 1).s / lam, q);
    return solve_first_order_q(-r, RationalFunction<Rational>(0), y0, x, q, tol);
}

/// W = y1 D_q y2 - y2 D_q y1 is nonzero at every sample.
template <class V>
bool q_independence_check(const std::vector<V>& y1, const std::vector<V>& y2, const std::vector<V>& dqy1,
                          const std::vector<V>& dqy2) {
    const auto n = y1.size();
    if (y2.size() != n || dqy1.size() != n || dqy2.size() != n)
        throw UsageError("independence check needs aligned samples");
    for (std::size_t i = 0; i < n; ++i)
        if (y1[i] * dqy2[i] - y2[i] * dqy1[i] == V(0)) return false;
    return n > 0;
}

}  // namespace aim

#endif
