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

#ifndef AIM_DAIM_HPP
#define AIM_DAIM_HPP

#include <optional>
#include <vector>

#include "aim/engine.hpp"

namespace aim {

/// Delta^2 y = lambda0 Delta y + s0 y.
template <class F>
struct Equation {
    RationalFunction<F> lambda0;
    RationalFunction<F> s0;

    Operator<F> op() const { return {OperatorKind::Delta, F(1)}; }
};

template <class F>
AimTrace<F> iterate(const Equation<F>& eq, long n_max) {
    if (n_max < 0) throw UsageError("n_max must be non-negative");
    AimTrace<F> t(eq.op(), eq.lambda0, eq.s0);
    t.extend_to(n_max);
    return t;
}

template <class F>
TerminationReport find_termination(const Equation<F>& eq, long n_max) {
    AimTrace<F> t(eq.op(), eq.lambda0, eq.s0);
    return find_termination(t, n_max);
}

template <class F>
std::vector<PolynomialSolution<F>> polynomial_solution(const Equation<F>& eq, long n) {
    return polynomial_solutions(eq.op(), eq.lambda0, eq.s0, n, Normalization::Monic);
}

template <class F>
RationalFunction<F> verify(const Equation<F>& eq, const Polynomial<F>& y) {
    return residual(eq.op(), eq.lambda0, eq.s0, RationalFunction<F>(y));
}

namespace detail {

template <class F>
F at_integer(const RationalFunction<F>& f, long i) {
    return f(FieldTraits<F>::from_rational(Rational(i)));
}

/// s_{n-1}/lambda_{n-1}; the first-solution factor is 1 minus this.
template <class F>
RationalFunction<F> ratio(AimTrace<F>& trace, long n) {
    if (n < 0) throw UsageError("product solution needs a termination index >= 0");
    trace.extend_to(n);
    const auto& lam = trace.at(n - 1).lambda;
    if (lam.is_zero()) throw PoleError("lambda_{n-1} vanishes identically", "all x");
    return trace.at(n - 1).s / lam;
}

}  // namespace detail

/// y(x) = prod_{i=x0}^{x-1} [1 - s_{n-1}(i)/lambda_{n-1}(i)], y(x0) = 1.
template <class F>
GridFunction<F> product_solution_values(AimTrace<F>& trace, long n, long x0, long x_end) {
    if (x_end < x0) throw UsageError("empty product grid");
    const auto rho = RationalFunction<F>(1) - detail::ratio(trace, n);
    GridFunction<F> g{Rational(x0), {F(1)}};
    for (long i = x0; i < x_end; ++i) g.values.push_back(g.values.back() * detail::at_integer(rho, i));
    return g;
}

/// Residual of the difference equation at x0 .. x_end-2 for grid values.
template <class F>
std::vector<F> grid_residuals(const Equation<F>& eq, const GridFunction<F>& y) {
    std::vector<F> out;
    const auto start = y.start.to_long();
    if (!start) throw UsageError("grid must start at an integer");
    for (std::size_t i = 0; i + 2 < y.size(); ++i) {
        const long x = *start + static_cast<long>(i);
        const F d1 = y.values[i + 1] - y.values[i];
        const F d2 = y.values[i + 2] - F(2) * y.values[i + 1] + y.values[i];
        out.push_back(d2 - detail::at_integer(eq.lambda0, x) * d1 - detail::at_integer(eq.s0, x) * y.values[i]);
    }
    return out;
}

/// y1(x) y2(x+1) - y1(x+1) y2(x) on consecutive grid points.
template <class F>
std::vector<F> casorati(const GridFunction<F>& y1, const GridFunction<F>& y2) {
    if (!(y1.start == y2.start) || y1.size() != y2.size()) throw UsageError("casorati grids differ");
    std::vector<F> out;
    for (std::size_t i = 0; i + 1 < y1.size(); ++i)
        out.push_back(det2(y1.values[i], y1.values[i + 1], y2.values[i], y2.values[i + 1]));
    return out;
}

struct SecondSolutionOptions {
    std::optional<long> n0;     // default: smallest pole-free start >= 1
    std::optional<long> m;      // default: the termination index
    std::optional<long> x_end;  // default: n0 + points - 1
    long points = 12;
};

template <class F>
struct SecondSolutionSample {
    GridFunction<F> first;
    GridFunction<F> grid;
    long n0 = 1;
    long m = 0;
    std::vector<F> casorati_values;
    std::vector<F> residuals;  // zero at every interior point for a genuine solution
};

inline constexpr long kMaxStartSearch = 64;

namespace detail {

template <class F>
SecondSolutionSample<F> second_at(const Equation<F>& eq, const RationalFunction<F>& rho,
                                  const RationalFunction<F>& tau, const RationalFunction<F>& inv, long n0, long m,
                                  long x_end) {
    SecondSolutionSample<F> out;
    out.n0 = n0;
    out.m = m;
    out.first = {Rational(n0), {F(1)}};
    out.grid = {Rational(n0), {F(0)}};
    std::vector<F> taus;  // tau at n0-m .. x_end-2
    for (long j = n0 - m; j + 1 < x_end; ++j) taus.push_back(at_integer(tau, j));
    auto tau_at = [&](long j) { return taus[static_cast<std::size_t>(j - (n0 - m))]; };
    F head(1);  // prod_{j=n0}^{i-m-1} tau(j)
    for (long i = n0; i < x_end; ++i) {
        if (i - m - 1 >= n0) head = head * tau_at(i - m - 1);
        F window(1);
        for (long k = 0; k < m; ++k) window = window * tau_at(i - m + k);
        const F r = at_integer(rho, i);
        out.grid.values.push_back(r * out.grid.values.back() + head * at_integer(inv, i) * window);
        out.first.values.push_back(r * out.first.values.back());
    }
    out.casorati_values = casorati(out.first, out.grid);
    out.residuals = grid_residuals(eq, out.grid);
    return out;
}

}  // namespace detail

/*
 * The inhomogeneous part of the general solution built from the terminated
 * pair (lambda_{n-1}, s_{n-1}) and lambda_n, with the first solution and the
 * Casorati determinants alongside.
 */
template <class F>
SecondSolutionSample<F> second_solution_values(const Equation<F>& eq, AimTrace<F>& trace, long n,
                                               const SecondSolutionOptions& opt = {}) {
    using RF = RationalFunction<F>;
    const RF r = detail::ratio(trace, n);
    const RF rho = RF(1) - r;
    const RF tau = RF(1) + trace.at(n).lambda / trace.at(n - 1).lambda;
    const RF inv = trace.at(n - 1).lambda.reciprocal();
    const long m = opt.m.value_or(n);
    if (m < 0) throw UsageError("m must be non-negative");
    auto run = [&](long n0) {
        const long x_end = opt.x_end.value_or(n0 + opt.points - 1);
        if (x_end <= n0) throw UsageError("second-solution grid needs at least two points");
        auto s = detail::second_at(eq, rho, tau, inv, n0, m, x_end);
        for (const auto& c : s.casorati_values)
            if (c.is_zero())
                throw DependenceError("Casorati determinant vanishes on the grid starting at " + std::to_string(n0));
        return s;
    };
    if (opt.n0) return run(*opt.n0);
    for (long n0 = 1; n0 <= kMaxStartSearch; ++n0) {
        try {
            return run(n0);
        } catch (const PoleError&) {
        }
    }
    throw PoleError("no pole-free grid start found", "1.." + std::to_string(kMaxStartSearch));
}

/*
 * Second solution by reduction of order from a known solution g:
 *   f(x+1) = g(x+1)/g(x) f(x) + g(x+1) w(x),  f(n0) = 0,
 *   w(x+1) = w(x) [(2 - a1(x)) g(x+1)/g(x+2) - 1],  w(n0) = 1,
 * where a1 = -lambda0.
 */
template <class F>
GridFunction<F> reduce_order_second_solution(const Equation<F>& eq, const Polynomial<F>& g,
                                             std::optional<long> n0_opt, std::optional<long> x_end_opt,
                                             long points = 12) {
    using RF = RationalFunction<F>;
    const RF a1 = -eq.lambda0;
    auto run = [&](long n0) {
        const long x_end = x_end_opt.value_or(n0 + points - 1);
        if (x_end <= n0) throw UsageError("reduction grid needs at least two points");
        std::vector<F> gv;
        for (long x = n0; x <= x_end + 1; ++x) gv.push_back(g(FieldTraits<F>::from_rational(Rational(x))));
        auto gat = [&](long x) -> const F& {
            const F& v = gv[static_cast<std::size_t>(x - n0)];
            if (v.is_zero()) throw PoleError("known solution vanishes on the grid", std::to_string(x));
            return v;
        };
        GridFunction<F> f{Rational(n0), {F(0)}};
        F w(1);
        for (long x = n0; x < x_end; ++x) {
            f.values.push_back(gv[static_cast<std::size_t>(x + 1 - n0)] / gat(x) * f.values.back() +
                               gv[static_cast<std::size_t>(x + 1 - n0)] * w);
            if (x + 1 < x_end) w = w * ((F(2) - detail::at_integer(a1, x)) * gv[static_cast<std::size_t>(x + 1 - n0)] /
                                             gat(x + 2) -
                                         F(1));
        }
        return f;
    };
    if (n0_opt) return run(*n0_opt);
    for (long n0 = 1; n0 <= kMaxStartSearch; ++n0) {
        try {
            return run(n0);
        } catch (const PoleError&) {
        }
    }
    throw PoleError("no grid start avoiding zeros of the known solution", "1.." + std::to_string(kMaxStartSearch));
}

/// k = n(n-1) a2 + n b1.
template <class F>
F hypergeometric_eigenvalue(const F& a2, const F& b1, long n) {
    const F nn = FieldTraits<F>::from_rational(Rational(n));
    return nn * (nn - F(1)) * a2 + nn * b1;
}

}  // namespace aim

#endif
