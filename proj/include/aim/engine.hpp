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

#ifndef AIM_ENGINE_HPP
#define AIM_ENGINE_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "aim/diffops.hpp"
#include "aim/matrix.hpp"

/*
 * Machinery shared by the difference and q-difference iterations. Both
 * recursions have the shape
 *
 *   lambda_n = L lambda_{n-1} + (T lambda_{n-1}) lambda_0 + T s_{n-1}
 *   s_n      = L s_{n-1}      + (T lambda_{n-1}) s_0
 *
 * with (L, T) = (Delta, x -> x+1) or (D_q, x -> qx).
 */
namespace aim {

template <class F>
struct Operator {
    using Field = F;
    OperatorKind kind = OperatorKind::Delta;
    F q = F(1);  // only read for Dq

    RationalFunction<F> apply(const RationalFunction<F>& f) const {
        return kind == OperatorKind::Delta ? delta(f) : dq(f, q);
    }
    RationalFunction<F> step(const RationalFunction<F>& f) const {
        return kind == OperatorKind::Delta ? shift(f, 1) : qscale(f, 1, q);
    }
};

template <class F>
struct TraceEntry {
    long n;
    RationalFunction<F> lambda;
    RationalFunction<F> s;
    RationalFunction<F> delta;  // lambda_n s_{n-1} - lambda_{n-1} s_n
};

/*
 * Iteration history. entries.front() is the convention entry n = -1 with
 * lambda = -1, s = 0, so that delta_0 = s_0.
 */
template <class F>
class AimTrace {
   public:
    using RF = RationalFunction<F>;

    AimTrace(Operator<F> op, RF lambda0, RF s0) : op_(std::move(op)) {
        entries_.push_back({-1, RF(-1), RF(0), RF(0)});
        push(std::move(lambda0), std::move(s0));
    }

    const Operator<F>& op() const noexcept { return op_; }
    long last_index() const noexcept { return static_cast<long>(entries_.size()) - 2; }
    const std::vector<TraceEntry<F>>& entries() const noexcept { return entries_; }
    const TraceEntry<F>& at(long n) const {
        if (n < -1 || n > last_index()) throw UsageError("trace index out of range");
        return entries_[static_cast<std::size_t>(n + 1)];
    }
    const RF& lambda0() const { return at(0).lambda; }
    const RF& s0() const { return at(0).s; }

    /// Computes entries up to and including index n.
    void extend_to(long n) {
        while (last_index() < n) {
            const auto& prev = entries_.back();
            const RF tl = op_.step(prev.lambda);
            RF lam = op_.apply(prev.lambda) + tl * lambda0() + op_.step(prev.s);
            RF s = op_.apply(prev.s) + tl * s0();
            push(std::move(lam), std::move(s));
        }
    }

   private:
    void push(RF lam, RF s) {
        const auto& prev = entries_.back();
        RF d = lam * prev.s - prev.lambda * s;
        entries_.push_back({last_index() + 1, std::move(lam), std::move(s), std::move(d)});
    }

    Operator<F> op_;
    std::vector<TraceEntry<F>> entries_;
};

struct TerminationReport {
    std::optional<long> terminated_at;
    long max_checked = -1;
    bool degenerate = false;            // some lambda_n vanished identically
    bool next_vanishes = false;         // delta_{n+1} == 0 was confirmed
};

/// Smallest n <= n_max with delta_n == 0, extending the trace as needed.
template <class F>
TerminationReport find_termination(AimTrace<F>& trace, long n_max) {
    if (n_max < 0) throw UsageError("n_max must be non-negative");
    TerminationReport r;
    for (long n = 0; n <= n_max; ++n) {
        trace.extend_to(n);
        r.max_checked = n;
        if (trace.at(n).lambda.is_zero()) r.degenerate = true;
        if (trace.at(n).delta.is_zero()) {
            r.terminated_at = n;
            trace.extend_to(n + 1);
            r.next_vanishes = trace.at(n + 1).delta.is_zero();
            if (trace.at(n + 1).lambda.is_zero()) r.degenerate = true;
            break;
        }
    }
    return r;
}

enum class Normalization { Monic, UnitConstant };

template <class F>
struct PolynomialSolution {
    Polynomial<F> coefficients;
    int degree = kZeroDegree;
    bool verified = false;
    RationalFunction<F> residual;
    std::size_t basis_size = 1;  // > 1 when several independent polynomial solutions exist
};

/// L y = op^2 y - lambda0 op y - s0 y.
template <class F>
RationalFunction<F> residual(const Operator<F>& op, const RationalFunction<F>& lambda0,
                             const RationalFunction<F>& s0, const RationalFunction<F>& y) {
    const auto dy = op.apply(y);
    return op.apply(dy) - lambda0 * dy - s0 * y;
}

template <class F>
Polynomial<F> normalized(const Polynomial<F>& p, Normalization norm) {
    if (p.is_zero()) return p;
    if (norm == Normalization::UnitConstant && !p.coeff(0).is_zero()) return p / p.coeff(0);
    return monic(p);
}

/*
 * Solutions of degree <= n: substitute sum c_k x^k into D (L y) with D the
 * common denominator, and take the kernel of the coefficient matrix.
 */
template <class F>
std::vector<PolynomialSolution<F>> polynomial_solutions(const Operator<F>& op, const RationalFunction<F>& lambda0,
                                                        const RationalFunction<F>& s0, long n, Normalization norm) {
    using Poly = Polynomial<F>;
    using RF = RationalFunction<F>;
    if (n < 0) throw UsageError("solution degree must be non-negative");
    const Poly d = lcm(lambda0.denominator(), s0.denominator());
    const RF dd(d);
    std::vector<Poly> columns;
    std::size_t rows = 0;
    for (long k = 0; k <= n; ++k) {
        const RF r = dd * residual(op, lambda0, s0, RF(Poly::monomial(F(1), static_cast<std::size_t>(k))));
        if (!r.is_polynomial()) throw InconsistencyError("cleared residual is not a polynomial");
        columns.push_back(r.numerator());
        rows = std::max(rows, columns.back().size());
    }
    Matrix<F> m(std::max<std::size_t>(rows, 1), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (std::size_t r = 0; r < columns[c].size(); ++r) m(r, c) = columns[c][r];
    const auto basis = nullspace(std::move(m));
    if (basis.empty()) throw InconsistencyError("no polynomial solution of degree <= " + std::to_string(n));
    std::vector<PolynomialSolution<F>> out;
    for (const auto& v : basis) {
        PolynomialSolution<F> s;
        s.coefficients = normalized(Poly(v), norm);
        s.degree = s.coefficients.degree();
        s.residual = residual(op, lambda0, s0, RF(s.coefficients));
        s.verified = s.residual.is_zero();
        s.basis_size = basis.size();
        out.push_back(std::move(s));
    }
    return out;
}

/*
 * Coefficients c with values = sum_j c_j basis_j on every sample, or nullopt
 * if values are not in the span. All vectors must have equal length.
 */
template <class F>
std::optional<std::vector<F>> fit_in_span(const std::vector<F>& values, const std::vector<std::vector<F>>& basis) {
    const std::size_t rows = values.size(), cols = basis.size();
    for (const auto& b : basis)
        if (b.size() != rows) throw UsageError("fit_in_span: sample vectors differ in length");
    Matrix<F> m(rows, cols + 1);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = basis[c][r];
        m(r, cols) = values[r];
    }
    const auto pivots = row_reduce(m);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    std::vector<F> coeffs(cols, F(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) coeffs[pivots[r]] = m(r, cols);
    return coeffs;
}

}  // namespace aim

#endif
