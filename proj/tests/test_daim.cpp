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

#include "doctest.h"

#include "aim/daim.hpp"
#include "aim/families.hpp"
#include "forms.hpp"
#include "support.hpp"

using namespace aim;
using aim::test::px;
using P = Polynomial<Rational>;
using RF = RationalFunction<Rational>;
namespace fam = aim::families;

namespace {


using forms::Hyper;
using forms::hyper_y1;
using forms::hyper_y2;
using forms::hyper_y3;
using forms::r;
using forms::rising;

Equation<Rational> hyper(const Hyper& h, const Rational& k) { return forms::hypergeometric(h, k); }

/// Positive a2, b1 keep the eigenvalues distinct; a0 > 0 with a1 >= 0 keeps the grid pole-free.
Hyper random_hyper(test::Random& g) {
    auto pos = [&] { return Rational(g.integer(1, 6)) / Rational(g.integer(1, 4)); };
    return {pos(), Rational(g.integer(0, 6)) / Rational(g.integer(1, 3)), pos(), pos(), g.rational()};
}

Rational fact(long n) { return n <= 1 ? Rational(1) : Rational(n) * fact(n - 1); }

std::vector<Rational> on_grid(const P& p, long x0, long x1) {
    std::vector<Rational> v;
    for (long x = x0; x <= x1; ++x) v.push_back(p(Rational(x)));
    return v;
}

}  // namespace

TEST_SUITE("iteration") {
    TEST_CASE("Euler first step") {
        const auto t = iterate(fam::euler(3), 1);
        CHECK(t.at(1).lambda == RF(6) / rising(1, 2));
        CHECK(t.at(1).s == RF(-12) / rising(0, 2));
    }

    TEST_CASE("zero equation stays zero") {
        const auto t = iterate(fam::constant(Rational(0), Rational(0)), 6);
        for (long n = 0; n <= 6; ++n) {
            CHECK(t.at(n).lambda.is_zero());
            CHECK(t.at(n).s.is_zero());
        }
    }

    TEST_CASE("constant coefficients") {
        const Rational a = r(2), b = r(3);
        const auto t = iterate(fam::constant(a, b), 2);
        CHECK(t.at(1).lambda == RF(a * a + b));
        CHECK(t.at(1).s == RF(a * b));
        CHECK(t.at(2).lambda == RF(a * (a * a + r(2) * b)));
        CHECK(t.at(2).s == RF(b * (a * a + b)));
    }

    TEST_CASE("convention entry and delta_0 = s_0") {
        test::Random g(31);
        for (int i = 0; i < test::kCases; ++i) {
            const Equation<Rational> eq{g.ratfunc(2), g.ratfunc(2)};
            const auto t = iterate(eq, 0);
            CHECK(t.at(-1).lambda == RF(-1));
            CHECK(t.at(-1).s.is_zero());
            CHECK(t.at(0).delta == eq.s0);
        }
        CHECK_THROWS_AS(iterate(fam::euler(3), -1), UsageError);
        CHECK_THROWS_AS(iterate(fam::euler(3), 2).at(3), UsageError);
    }

    TEST_CASE("trace satisfies the recursion") {
        test::Random g(32);
        for (int i = 0; i < 20; ++i) {
            const Equation<Rational> eq{g.ratfunc(1), g.ratfunc(1)};
            const auto t = iterate(eq, 3);
            for (long n = 1; n <= 3; ++n) {
                const auto& p = t.at(n - 1);
                CHECK(t.at(n).lambda == delta(p.lambda) + shift(p.lambda, 1) * eq.lambda0 + shift(p.s, 1));
                CHECK(t.at(n).s == delta(p.s) + shift(p.lambda, 1) * eq.s0);
                CHECK(t.at(n).delta == t.at(n).lambda * p.s - p.lambda * t.at(n).s);
            }
        }
    }

    TEST_CASE("Euler closed forms") {
        test::Random g(33);
        std::vector<Rational> as{r(2), r(5), r(7, 2), r(-1, 3)};
        for (int i = 0; i < 3; ++i) as.push_back(g.nonzero_rational());
        for (const auto& a : as) {
            const auto t = iterate(fam::euler(a), 6);
            for (long n = 0; n <= 6; ++n) {
                CHECK(t.at(n).lambda == forms::euler_lambda(a, n));
                CHECK(t.at(n).s == forms::euler_s(a, n));
                if (n >= 1) CHECK(t.at(n).delta == forms::euler_delta(a, n));
            }
        }
    }
}

TEST_SUITE("termination") {
    TEST_CASE("examples") {
        CHECK(find_termination(fam::euler(4), 24).terminated_at == 3);
        const auto none = find_termination(fam::constant(r(1), r(1)), 25);
        CHECK_FALSE(none.terminated_at);
        CHECK(none.max_checked == 25);
        test::Random g(34);
        for (int i = 0; i < 10; ++i) {
            const auto rep = find_termination(Equation<Rational>{g.ratfunc(2), RF(0)}, 5);
            CHECK(rep.terminated_at == 0);
            CHECK(rep.next_vanishes);
        }
        CHECK_THROWS_AS(find_termination(fam::euler(3), -1), UsageError);
    }

    TEST_CASE("Euler family terminates at a - 1") {
        for (long n = 0; n <= 8; ++n) {
            const auto rep = find_termination(fam::euler(Rational(n + 1)), 24);
            CHECK(rep.terminated_at == n);
            CHECK(rep.next_vanishes);
        }
    }

    TEST_CASE("hypergeometric eigenvalues") {
        const Hyper h{r(1), r(3), r(2), r(2), r(1)};
        CHECK(hypergeometric_eigenvalue(h.a2, h.b1, 0).is_zero());
        CHECK(hypergeometric_eigenvalue(h.a2, h.b1, 1) == h.b1);
        CHECK(hypergeometric_eigenvalue(h.a2, h.b1, 3) == r(12));
        test::Random g(35);
        for (int i = 0; i < 10; ++i) {
            const Hyper hh = random_hyper(g);
            for (long n = 0; n <= 5; ++n) {
                const auto rep = find_termination(hyper(hh, hypergeometric_eigenvalue(hh.a2, hh.b1, n)), 24);
                CHECK(rep.terminated_at == n);
                CHECK(rep.next_vanishes);
            }
        }
    }

    TEST_CASE("delta ratio for the hypergeometric equation") {
        test::Random g(36);
        for (int i = 0; i < 5; ++i) {
            const Hyper h = random_hyper(g);
            const Rational k = hypergeometric_eigenvalue(h.a2, h.b1, 9) + r(1, 7);  // generic
            const auto t = iterate(hyper(h, k), 6);
            for (long n = 1; n <= 6; ++n) {
                const RF law = forms::hyper_ratio_printed(h, k, n);
                const RF ratio = t.at(n).delta / t.at(n - 1).delta;
                if (n == 1) {
                    CHECK(ratio == -law);  // the first step carries the opposite sign
                } else {
                    CHECK(ratio == law);
                }
            }
        }
    }

    TEST_CASE("Meixner and Hermite instances") {
        for (long n = 0; n <= 4; ++n) {
            const Rational mu = r(1, 2), dl = r(1);
            CHECK(find_termination(fam::meixner(mu, dl, n, fam::meixner_eigenvalue(mu, n)), 24).terminated_at == n);
            CHECK(find_termination(fam::meixner(r(3), r(5, 2), n, fam::meixner_eigenvalue(r(3), n)), 24).terminated_at == n);
            CHECK(find_termination(fam::hermite_difference(r(2), r(1, 3), Rational(-2 * n)), 24).terminated_at == n);
        }
        CHECK_FALSE(find_termination(fam::hermite_difference(r(1), r(0), r(-3, 2)), 10).terminated_at);
        CHECK_THROWS_AS(fam::meixner(r(0), r(1), 1, r(1)), UsageError);
    }
}

TEST_SUITE("polynomial solutions") {
    TEST_CASE("Euler") {
        const auto s = polynomial_solution(fam::euler(3), 2);
        REQUIRE(s.size() == 1);
        CHECK(s[0].coefficients == px({0, 1, 1}));
        CHECK(s[0].verified);
        CHECK(s[0].residual.is_zero());
        for (long n = 1; n <= 8; ++n) CHECK(polynomial_solution(fam::euler(Rational(n + 1)), n)[0].coefficients == fam::pochhammer(n));
    }

    TEST_CASE("hypergeometric closed forms") {
        test::Random g(37);
        std::vector<Hyper> sets{{r(1), r(3), r(2), r(2), r(1)}};
        for (int i = 0; i < 5; ++i) sets.push_back(random_hyper(g));
        for (const auto& h : sets) {
            auto sol = [&](long n) { return polynomial_solution(hyper(h, hypergeometric_eigenvalue(h.a2, h.b1, n)), n)[0]; };
            CHECK(sol(0).coefficients == px({1}));
            CHECK(sol(1).coefficients == hyper_y1(h));
            CHECK(sol(2).coefficients == hyper_y2(h));
            CHECK(sol(3).coefficients == hyper_y3(h));
            CHECK(sol(3).verified);
        }
        const Hyper h{r(1), r(3), r(2), r(2), r(1)};
        CHECK(hyper_y2(h) == P({r(5, 4), r(5, 2), r(1)}));
        CHECK(hyper_y3(h) == P({r(33, 8), r(9), r(11, 2), r(1)}));
    }

    TEST_CASE("several independent solutions") {
        const auto s = polynomial_solution(fam::constant(r(0), r(0)), 1);
        REQUIRE(s.size() == 2);
        CHECK(s[0].basis_size == 2);
        CHECK(s[0].verified);
        CHECK(s[1].verified);
    }

    TEST_CASE("no solution") {
        CHECK_THROWS_AS(polynomial_solution(fam::constant(r(1), r(1)), 3), InconsistencyError);
        CHECK_THROWS_AS(polynomial_solution(fam::euler(3), -1), UsageError);
    }

    TEST_CASE("verify") {
        CHECK(verify(fam::euler(3), px({0, 1, 1})).is_zero());
        const auto eq = fam::hypergeometric(r(1), r(3), r(2), r(2), r(1), r(6));
        CHECK(verify(eq, px({1})) == -eq.s0);
        CHECK(verify(fam::constant(r(0), r(0)), px({0, 1})).is_zero());
        CHECK_FALSE(verify(fam::euler(3), px({0, 1, 2})).is_zero());
    }
}

TEST_SUITE("product solution") {
    TEST_CASE("Euler values") {
        auto t = iterate(fam::euler(3), 2);
        const auto y = product_solution_values(t, 2, 1, 6);
        const std::vector<Rational> expect{r(1), r(3), r(6), r(10), r(15), r(21)};
        CHECK(y.values == expect);
        CHECK_THROWS_AS(product_solution_values(t, 2, 0, 4), PoleError);
        CHECK_THROWS_AS(product_solution_values(t, 2, 4, 2), UsageError);
    }

    TEST_CASE("vanishing s gives the constant solution") {
        auto t = iterate(Equation<Rational>{RF(px({1, 2})), RF(0)}, 1);
        for (const auto& v : product_solution_values(t, 1, 0, 8).values) CHECK(v == r(1));
        for (const auto& v : product_solution_values(t, 0, 0, 8).values) CHECK(v == r(1));
    }

    TEST_CASE("agrees with the polynomial solution up to a constant") {
        test::Random g(38);
        int compared = 0;
        for (int i = 0; i < 10; ++i) {
            const Hyper h = random_hyper(g);
            const long n = g.integer(1, 4);
            const auto eq = hyper(h, hypergeometric_eigenvalue(h.a2, h.b1, n));
            auto t = iterate(eq, n);
            const P y = polynomial_solution(eq, n)[0].coefficients;
            const long x0 = 2;
            GridFunction<Rational> prod;
            try {
                prod = product_solution_values(t, n, x0, x0 + 9);
            } catch (const PoleError&) {
                continue;
            }
            const Rational c = y(Rational(x0));
            for (long x = x0; x <= x0 + 9; ++x) CHECK(y(Rational(x)) == c * prod.at(x));
            ++compared;
        }
        CHECK(compared >= 5);
    }
}

TEST_SUITE("second solution") {
    TEST_CASE("Euler construction") {
        for (long n = 1; n <= 4; ++n) {
            const auto eq = fam::euler(Rational(n + 1));
            auto t = iterate(eq, n);
            SecondSolutionOptions opt;
            opt.n0 = 1;
            opt.x_end = 12;
            const auto s = second_solution_values(eq, t, n, opt);
            CHECK(s.m == n);
            CHECK(s.grid.size() == 12);
            for (const auto& v : s.residuals) CHECK(v.is_zero());
            for (const auto& c : s.casorati_values) CHECK_FALSE(c.is_zero());
            const P pn = fam::pochhammer(n), pn1 = fam::pochhammer(n + 1);
            // (x - n0)(x)_n / (n+1)!
            const P closed = (px({-1, 1}) * pn) / fact(n + 1);
            CHECK(s.grid.values == on_grid(closed, 1, 12));
            CHECK(fit_in_span(s.grid.values, {on_grid(pn, 1, 12), on_grid(pn1, 1, 12)}).has_value());
            // The combination (x)_{n+1} + (n - n0)(x)_n is a solution but not this one.
            const P other = pn1 + P(Rational(n - 1)) * pn;
            CHECK_FALSE(fit_in_span(s.grid.values, {on_grid(other, 1, 12)}).has_value());
            CHECK(verify(eq, other).is_zero());
        }
    }

    TEST_CASE("default start avoids the pole at 0") {
        const auto eq = fam::euler(3);
        auto t = iterate(eq, 2);
        const auto s = second_solution_values(eq, t, 2);
        CHECK(s.n0 == 1);
        CHECK(s.grid.size() == 12);
        SecondSolutionOptions at0;
        at0.n0 = 0;
        CHECK_THROWS_AS(second_solution_values(eq, t, 2, at0), PoleError);
        SecondSolutionOptions bad;
        bad.m = -1;
        CHECK_THROWS_AS(second_solution_values(eq, t, 2, bad), UsageError);
    }

    TEST_CASE("free window length") {
        const auto eq = fam::euler(4);
        auto t = iterate(eq, 3);
        for (long m = 0; m <= 5; ++m) {
            SecondSolutionOptions opt;
            opt.m = m;
            opt.n0 = 4;
            const auto s = second_solution_values(eq, t, 3, opt);
            for (const auto& v : s.residuals) CHECK(v.is_zero());
        }
    }

    TEST_CASE("second difference zero") {
        const auto eq = fam::constant(r(0), r(0));
        auto t = iterate(eq, 0);
        const auto s = second_solution_values(eq, t, 0);
        for (const auto& v : s.first.values) CHECK(v == r(1));
        for (std::size_t i = 0; i + 2 < s.grid.size(); ++i)
            CHECK(s.grid.values[i + 2] - r(2) * s.grid.values[i + 1] + s.grid.values[i] == r(0));
        CHECK_FALSE(s.grid.values[1] == s.grid.values[0]);
    }

    TEST_CASE("reduction of order") {
        for (long n = 1; n <= 4; ++n) {
            const auto eq = fam::euler(Rational(n + 1));
            const P g = fam::pochhammer(n);
            const auto f = reduce_order_second_solution(eq, g, 1, 12);
            for (const auto& v : grid_residuals(eq, f)) CHECK(v.is_zero());
            const auto y1 = on_grid(g, 1, 12);
            const auto fit = fit_in_span(f.values, {y1, on_grid(fam::pochhammer(n + 1), 1, 12)});
            REQUIRE(fit.has_value());
            CHECK_FALSE((*fit)[1].is_zero());
            for (const auto& c : casorati(GridFunction<Rational>{r(1), y1}, f)) CHECK_FALSE(c.is_zero());
            auto t = iterate(eq, n);
            SecondSolutionOptions opt;
            opt.n0 = 1;
            opt.x_end = 8;
            const auto s = second_solution_values(eq, t, n, opt);
            const std::vector<Rational> f8(f.values.begin(), f.values.begin() + 8);
            CHECK(fit_in_span(s.grid.values, {on_grid(g, 1, 8), f8}).has_value());
        }
    }

    TEST_CASE("reduction from the constant solution is linear") {
        const auto f = reduce_order_second_solution(fam::constant(r(0), r(0)), px({1}), 0, 10);
        for (long x = 0; x <= 10; ++x) CHECK(f.at(x) == Rational(x));
    }

    TEST_CASE("reduction needs a nonvanishing known solution") {
        const auto eq = fam::euler(3);
        CHECK_THROWS_AS(reduce_order_second_solution(eq, px({0, 1, 1}), 0, 6), PoleError);
        CHECK(reduce_order_second_solution(eq, px({0, 1, 1}), std::nullopt, std::nullopt).start == r(1));
    }

    TEST_CASE("casorati") {
        const GridFunction<Rational> a{r(0), {r(1), r(1), r(1)}}, b{r(0), {r(0), r(1), r(2)}};
        for (const auto& c : casorati(a, b)) CHECK(c == r(1));
        for (const auto& c : casorati(a, a)) CHECK(c.is_zero());
        CHECK_THROWS_AS(casorati(a, GridFunction<Rational>{r(1), {r(1), r(1), r(1)}}), UsageError);
    }
}
