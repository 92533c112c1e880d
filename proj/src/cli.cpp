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

#include "aim/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "aim/daim.hpp"
#include "aim/dsl.hpp"
#include "aim/qaim.hpp"

namespace aim::cli {

namespace {

using json = nlohmann::ordered_json;

const std::vector<Preset> kPresets = {
    {"euler", "x(x+1) D^2 y - 2(a-1) x D y + a(a-1) y = 0; polynomial of degree a-1", false, "2*(a-1)/(1+x)",
     "(a-a^2)/(x*(1+x))", {{"a", "3"}}},
    {"hypergeometric",
     "(a2 x^2 + a1 x + a0) D^2 y + (b1 x + b0) D y = k y; degree n when k = n(n-1) a2 + n b1",
     false,
     "-(b1*x+b0)/(a2*x^2+a1*x+a0)",
     "k/(a2*x^2+a1*x+a0)",
     {{"a2", "1"}, {"a1", "3"}, {"a0", "2"}, {"b1", "2"}, {"b0", "1"}, {"n", "2"}, {"k", "n*(n-1)*a2+n*b1"}}},
    {"meixner",
     "Meixner instance of the hypergeometric family; terminates at n",
     false,
     "-((mu-1)*(x-n+1)+mu*delta)/(mu*(x+delta+1))",
     "-k/(mu*(x+delta+1))",
     {{"mu", "1/2"}, {"delta", "1"}, {"n", "3"}, {"k", "n*(1-mu)"}}},
    {"hermite-difference",
     "D^2 y = (a x + b) D y + gamma y; terminates only for gamma = -n a, so generic gamma exits 3",
     false,
     "a*x+b",
     "gamma",
     {{"a", "1"}, {"b", "0"}, {"gamma", "-2"}}},
    {"q-laguerre",
     "little q-Laguerre type equation; degree n",
     true,
     "(q^(-1-eta) - 1 - (1+q-q^n)*x)/((q-1)*x*(1+q*x))",
     "(q^n-1)/((q-1)^2*x*(1+q*x))",
     {{"n", "5"}, {"eta", "2"}}},
    {"al-salam-carlitz",
     "Al-Salam-Carlitz type equation; degree n, a may involve q",
     true,
     "(q+a*q-q^(2-n)*x)/(a-a*q)",
     "-q^(2-n)*(q^n-1)/(a*(q-1)^2)",
     {{"n", "3"}, {"a", "2"}}},
    {"stieltjes-wigert",
     "Stieltjes-Wigert type equation; Gaussian-binomial coefficients",
     true,
     "(1-q*(1+q-q^n)*x)/((q-1)*q^2*x^2)",
     "(q^n-1)/((q-1)^2*q*x^2)",
     {{"n", "4"}}},
    {"constant", "constant coefficients; never terminates for b != 0", false, "a", "b", {{"a", "1"}, {"b", "1"}}},
    {"zero", "D^2 y = 0; solutions 1 and x", false, "0", "0", {}},
};

struct Settings {
    std::string command;
    std::optional<std::string> preset, op, lambda0, s0, q, json_path, grid, x, q_eval, range, coeffs, poly;
    std::vector<std::string> binds;
    std::optional<long> n_max, n0, m;
    std::optional<double> tol;
    bool trace_full = false;
    std::optional<std::string> config;
};

// An equation ready for lowering: operator, sources and bindings resolved.
struct Resolved {
    OperatorKind kind = OperatorKind::Delta;
    std::string lambda0, s0;
    dsl::Bindings binds;
    std::optional<Rational> q;  // numeric value
    bool symbolic = false;      // lower into Q(q)
};

template <class F>
struct Problem {
    Operator<F> op;
    RationalFunction<F> lambda0, s0;
    Normalization norm;
};

std::string caret(std::string_view src, Span sp) {
    const std::size_t b = std::min(sp.begin, src.size());
    const std::size_t w = std::max<std::size_t>(1, std::min(sp.end, src.size() + 1) - b);
    return "\n    " + std::string(src) + "\n    " + std::string(b, ' ') + std::string(w, '^');
}

[[noreturn]] void rethrow_syntax(const std::string& flag, std::string_view src, const SyntaxError& e) {
    throw UsageError(flag + ": " + e.what() + caret(src, e.span()));
}

Rational constant_arg(const std::string& flag, const std::string& src) {
    try {
        return dsl::fold_constant(*dsl::parse(src), {});
    } catch (const SyntaxError& e) {
        rethrow_syntax(flag, src, e);
    }
}

std::pair<long, long> parse_range(const std::string& flag, const std::string& text) {
    const auto dots = text.find("..");
    auto num = [&](const std::string& s) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(s, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (used != s.size()) throw UsageError(flag + ": expected an integer, got '" + s + "'");
        return v;
    };
    if (dots == std::string::npos) {
        const long v = num(text);
        return {v, v};
    }
    const long a = num(text.substr(0, dots)), b = num(text.substr(dots + 2));
    if (b < a) throw UsageError(flag + ": empty range " + text);
    return {a, b};
}

void add_binding(dsl::Bindings& b, const std::string& assignment) {
    try {
        b.set_assignment(assignment);
    } catch (const SyntaxError& e) {
        rethrow_syntax("--bind", assignment, e);
    }
}

Resolved resolve(const Settings& s) {
    Resolved r;
    const Preset* p = s.preset ? &find_preset(*s.preset) : nullptr;
    const std::string op = s.op.value_or(p && p->q_difference ? "dq" : "delta");
    r.kind = op == "dq" ? OperatorKind::Dq : OperatorKind::Delta;
    if (p) {
        r.lambda0 = p->lambda0;
        r.s0 = p->s0;
        for (const auto& [name, value] : p->bindings) r.binds.set(name, value);
    }
    if (s.lambda0) r.lambda0 = *s.lambda0;
    if (s.s0) r.s0 = *s.s0;
    if (r.lambda0.empty() || r.s0.empty()) throw UsageError("an equation needs --lambda0 and --s0 (or --preset)");
    for (const auto& a : s.binds) add_binding(r.binds, a);
    if (!s.q || *s.q == "symbolic") {
        r.symbolic = s.q.has_value() || r.kind == OperatorKind::Dq;
    } else {
        r.q = constant_arg("--q", *s.q);
        if (r.kind == OperatorKind::Dq && !(r.q->sign() > 0 && *r.q < Rational(1)))
            throw UsageError("--q: a numeric base must lie in (0, 1)");
    }
    return r;
}

template <class F>
RationalFunction<F> lower_flag(const std::string& flag, const std::string& src, const Resolved& r) {
    try {
        return dsl::lower<F>(src, r.binds, dsl::FieldSpec{r.q});
    } catch (const SyntaxError& e) {
        rethrow_syntax(flag, src, e);
    }
}

template <class F>
Problem<F> make_problem(const Resolved& r) {
    Problem<F> p;
    p.op.kind = r.kind;
    if constexpr (std::is_same_v<F, QFunction>) {
        if (r.kind == OperatorKind::Dq) p.op.q = q_symbol();
    } else {
        if (r.kind == OperatorKind::Dq) p.op.q = *r.q;
    }
    p.lambda0 = lower_flag<F>("--lambda0", r.lambda0, r);
    p.s0 = lower_flag<F>("--s0", r.s0, r);
    p.norm = r.kind == OperatorKind::Delta ? Normalization::Monic : Normalization::UnitConstant;
    return p;
}

template <class Fn>
auto dispatch(const Resolved& r, Fn&& fn) {
    if (r.symbolic) return fn(make_problem<QFunction>(r));
    return fn(make_problem<Rational>(r));
}

template <class F>
std::string str(const F& v) {
    return FieldTraits<F>::to_string(v);
}

template <class F>
json coefficient_list(const Polynomial<F>& p) {
    json a = json::array();
    for (const auto& c : p.coefficients()) a.push_back(str(c));
    return a;
}

template <class F>
json degrees(const RationalFunction<F>& f) {
    return json::array({f.numerator().degree(), f.denominator().degree()});
}

template <class F>
json trace_json(const AimTrace<F>& t, bool full) {
    json a = json::array();
    for (const auto& e : t.entries()) {
        if (e.n < 0) continue;
        json row = {{"n", e.n},
                    {"lambda", degrees(e.lambda)},
                    {"s", degrees(e.s)},
                    {"delta", degrees(e.delta)},
                    {"delta_zero", e.delta.is_zero()}};
        if (full) row["delta_text"] = to_string(e.delta);
        a.push_back(std::move(row));
    }
    return a;
}

json termination_json(const TerminationReport& r) {
    return {{"terminated_at", r.terminated_at ? json(*r.terminated_at) : json(nullptr)},
            {"max_checked", r.max_checked},
            {"degenerate", r.degenerate},
            {"next_vanishes", r.next_vanishes}};
}

Polynomial<Rational> numeric_poly(const Polynomial<Rational>& p, const Rational&) { return p; }
Polynomial<Rational> numeric_poly(const Polynomial<QFunction>& p, const Rational& q) {
    std::vector<Rational> c;
    for (const auto& a : p.coefficients()) c.push_back(a(q));
    return Polynomial<Rational>(std::move(c));
}

class Session {
   public:
    Session(Settings s, std::ostream& out) : s_(std::move(s)), out_(out), text_(s_.json_path.value_or("") != "-") {}

    const Settings& settings() const { return s_; }
    json& report() { return report_; }
    std::ostream& text() { return text_ ? out_ : null_; }

    void echo(const Resolved& r) {
        json b = json::object();
        for (const auto& n : r.binds.names()) b[n] = r.binds.source(n);
        report_["config"] = {{"command", s_.command},
                             {"preset", s_.preset ? json(*s_.preset) : json(nullptr)},
                             {"operator", r.kind == OperatorKind::Delta ? "delta" : "dq"},
                             {"lambda0", r.lambda0},
                             {"s0", r.s0},
                             {"bindings", std::move(b)},
                             {"q", r.symbolic ? json("symbolic") : r.q ? json(r.q->to_string()) : json(nullptr)},
                             {"n_max", n_max()}};
        text() << "operator " << (r.kind == OperatorKind::Delta ? "delta" : "dq") << ", field "
               << (r.symbolic ? "Q(q)" : r.q ? "Q with q = " + r.q->to_string() : "Q") << "\n"
               << "lambda0 = " << r.lambda0 << "\n"
               << "s0      = " << r.s0 << "\n";
        for (const auto& n : r.binds.names()) text() << "  " << n << " = " << r.binds.source(n) << "\n";
    }

    long n_max() const { return s_.n_max.value_or(24); }
    double tol() const { return s_.tol.value_or(1e-13); }

    void emit(const std::string& status, double ms) {
        report_["status"] = status;
        report_["timing_ms"] = ms;
        if (!s_.json_path) return;
        const std::string doc = report_.dump(2);
        if (*s_.json_path == "-") {
            out_ << doc << "\n";
            return;
        }
        std::ofstream f(*s_.json_path);
        if (!(f << doc << "\n")) throw UsageError("--json: cannot write " + *s_.json_path);
    }

   private:
    Settings s_;
    std::ostream& out_;
    bool text_;
    std::ostringstream null_;
    json report_ = json::object();
};

// Solves P; returns the exit code and fills the report.
template <class F>
int solve(const Problem<F>& p, Session& ss) {
    AimTrace<F> trace(p.op, p.lambda0, p.s0);
    const auto rep = find_termination(trace, ss.n_max());
    auto& out = ss.report();
    out["termination"] = termination_json(rep);
    out["trace"] = trace_json(trace, ss.settings().trace_full);
    if (ss.settings().trace_full)
        for (const auto& e : trace.entries())
            if (e.n >= 0) ss.text() << "delta_" << e.n << " = " << to_string(e.delta) << "\n";
    if (!rep.terminated_at) {
        ss.text() << "no termination: delta_n is nonzero for every n <= " << rep.max_checked << "\n";
        out["solutions"] = json::array();
        return kNoTermination;
    }
    const long n = *rep.terminated_at;
    ss.text() << "terminated at n = " << n << (rep.next_vanishes ? " (delta_" + std::to_string(n + 1) + " also vanishes)" : "")
              << (rep.degenerate ? ", degenerate: some lambda_n vanishes" : "") << "\n";
    const auto sols = polynomial_solutions(p.op, p.lambda0, p.s0, n, p.norm);
    bool ok = true;
    json arr = json::array();
    for (const auto& s : sols) {
        ok = ok && s.verified;
        arr.push_back({{"coefficients", coefficient_list(s.coefficients)},
                       {"degree", s.degree},
                       {"verified", s.verified},
                       {"residual", to_string(s.residual)},
                       {"basis_size", s.basis_size}});
        ss.text() << "solution (degree " << s.degree << "): " << to_string(s.coefficients) << "\n"
                  << "  coefficients: ";
        for (std::size_t k = 0; k < s.coefficients.size(); ++k)
            ss.text() << (k ? ", " : "") << str(s.coefficients[k]);
        ss.text() << "\n  residual: " << to_string(s.residual) << (s.verified ? "  verified" : "  NOT verified")
                  << "\n";
    }
    if (sols.size() > 1) ss.text() << sols.size() << " independent polynomial solutions\n";
    out["solutions"] = std::move(arr);

    const auto& st = ss.settings();
    if (p.op.kind == OperatorKind::Dq && st.x) {
        Rational qv;
        if constexpr (std::is_same_v<F, QFunction>)
            qv = constant_arg("--q-eval", st.q_eval.value_or("1/2"));
        else
            qv = p.op.q;
        const Rational x = constant_arg("--x", *st.x);
        const auto y = numeric_poly(sols.front().coefficients, qv);
        json pc = {{"x", x.to_string()}, {"q", qv.to_string()}, {"tol", ss.tol()}};
        const Rational y0 = y(Rational(0));
        if (y0.is_zero()) {
            pc["applicable"] = false;
            ss.text() << "product check skipped: solution vanishes at 0\n";
        } else {
            const double exact = y(x).to_double();
            const auto v = q_product_solution_value(trace, n, x, qv, ss.tol(), y0);
            const double err = std::abs(v.value - exact) / std::max(std::abs(exact), 1e-300);
            const bool agrees = err <= std::max(1e-10, 100 * ss.tol());
            pc.update({{"applicable", true},
                       {"exact", exact},
                       {"product", v.value},
                       {"terms", v.terms},
                       {"relative_error", err},
                       {"agrees", agrees}});
            ok = ok && agrees;
            ss.text() << std::setprecision(16) << "product at x = " << x.to_string() << ", q = " << qv.to_string()
                      << ": " << v.value << " vs exact " << exact << " (" << v.terms << " factors, rel err " << err
                      << ")\n";
        }
        out["product_check"] = std::move(pc);
    }
    return ok ? kVerified : kPipeline;
}

template <class F>
json values(const std::vector<F>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(str(x));
    return a;
}

template <class F>
int second(const Problem<F>& p, Session& ss) {
    if (p.op.kind != OperatorKind::Delta) throw UsageError("second: only the difference operator is supported");
    const int code = solve(p, ss);
    if (code != kVerified) return code;
    const auto& st = ss.settings();
    const Equation<F> eq{p.lambda0, p.s0};
    AimTrace<F> trace(p.op, p.lambda0, p.s0);
    const long n = ss.report()["termination"]["terminated_at"].template get<long>();
    SecondSolutionOptions opt;
    if (st.grid) {
        const auto [a, b] = parse_range("--grid", *st.grid);
        opt.n0 = a;
        opt.x_end = b;
    }
    if (st.n0) opt.n0 = st.n0;
    if (st.m) opt.m = st.m;
    const auto sample = second_solution_values(eq, trace, n, opt);
    const long x_end = sample.n0 + static_cast<long>(sample.grid.size()) - 1;
    const Polynomial<F> g = polynomial_solutions(p.op, p.lambda0, p.s0, n, p.norm).front().coefficients;
    const auto red = reduce_order_second_solution(eq, g, sample.n0, x_end);

    GridFunction<F> y1{Rational(sample.n0), {}};
    json xs = json::array();
    for (long x = sample.n0; x <= x_end; ++x) {
        y1.values.push_back(g(FieldTraits<F>::from_rational(Rational(x))));
        xs.push_back(x);
    }
    const auto red_res = grid_residuals(eq, red);
    const auto red_cas = casorati(y1, red);
    auto all_zero = [](const std::vector<F>& v) {
        return std::all_of(v.begin(), v.end(), [](const F& a) { return a.is_zero(); });
    };
    auto none_zero = [](const std::vector<F>& v) {
        return std::none_of(v.begin(), v.end(), [](const F& a) { return a.is_zero(); });
    };
    const auto fit = fit_in_span(sample.grid.values, {y1.values, red.values});

    const bool ok = all_zero(sample.residuals) && all_zero(red_res) && none_zero(red_cas) && fit.has_value();
    ss.report()["second_solution"] = {
        {"n0", sample.n0},
        {"m", sample.m},
        {"x", std::move(xs)},
        {"first", values(y1.values)},
        {"first_product", values(sample.first.values)},
        {"construction", values(sample.grid.values)},
        {"construction_casorati", values(sample.casorati_values)},
        {"construction_residuals_zero", all_zero(sample.residuals)},
        {"reduction", values(red.values)},
        {"reduction_casorati", values(red_cas)},
        {"reduction_residuals_zero", all_zero(red_res)},
        {"fit", fit ? values(*fit) : json(nullptr)},
    };
    auto& t = ss.text();
    t << "second solution on x = " << sample.n0 << " .. " << x_end << " (m = " << sample.m << ")\n";
    std::size_t w = 12;
    for (std::size_t i = 0; i < y1.size(); ++i)
        w = std::max({w, str(y1.values[i]).size(), str(sample.grid.values[i]).size(), str(red.values[i]).size()});
    const int wi = static_cast<int>(w);
    t << "       x  " << std::left << std::setw(wi) << "y1" << "  " << std::setw(wi) << "construction" << "  reduction\n"
      << std::right;
    for (std::size_t i = 0; i < y1.size(); ++i)
        t << "  " << std::setw(6) << (sample.n0 + static_cast<long>(i)) << "  " << std::left << std::setw(wi)
          << str(y1.values[i]) << "  " << std::setw(wi) << str(sample.grid.values[i]) << "  " << str(red.values[i])
          << std::right << "\n";
    t << "residuals: construction " << (all_zero(sample.residuals) ? "all zero" : "NONZERO") << ", reduction "
      << (all_zero(red_res) ? "all zero" : "NONZERO") << "\n";
    t << "Casorati: construction nonzero throughout, reduction "
      << (none_zero(red_cas) ? "nonzero throughout" : "VANISHES") << "\n";
    if (fit)
        t << "construction = " << str((*fit)[0]) << " * y1 + " << str((*fit)[1]) << " * reduction\n";
    else
        t << "construction is NOT in span{y1, reduction}\n";
    return ok ? kVerified : kPipeline;
}

template <class F>
Polynomial<F> read_polynomial(const Settings& st, const Resolved& r) {
    if (st.poly && st.coeffs) throw UsageError("verify: give --coeffs or --poly, not both");
    if (st.poly) {
        const auto f = lower_flag<F>("--poly", *st.poly, r);
        if (!f.is_polynomial()) throw UsageError("--poly: not a polynomial in x");
        if (f.is_zero()) throw UsageError("--poly: empty polynomial");
        return f.numerator();
    }
    if (!st.coeffs) throw UsageError("verify: give --coeffs or --poly");
    std::vector<F> c;
    std::stringstream in(*st.coeffs);
    for (std::string item; std::getline(in, item, ',');) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        const auto f = lower_flag<F>("--coeffs", item, r);
        if (!f.is_constant()) throw UsageError("--coeffs: coefficient '" + item + "' depends on x");
        c.push_back(f.constant_value());
    }
    Polynomial<F> y(std::move(c));
    if (y.is_zero()) throw UsageError("verify: empty polynomial");
    return y;
}

template <class F>
int verify_cmd(const Problem<F>& p, const Resolved& r, Session& ss) {
    const auto y = read_polynomial<F>(ss.settings(), r);
    const auto res = residual(p.op, p.lambda0, p.s0, RationalFunction<F>(y));
    ss.report()["polynomial"] = coefficient_list(y);
    ss.report()["residual"] = to_string(res);
    ss.report()["verified"] = res.is_zero();
    ss.text() << "y = " << to_string(y) << "\nresidual: " << to_string(res) << "\n";
    return res.is_zero() ? kVerified : kPipeline;
}

int scan(const Resolved& base, Session& ss) {
    const auto [lo, hi] = parse_range("--range", ss.settings().range.value_or("0..4"));
    json rows = json::array();
    bool failed = false, open = false;
    ss.text() << "     n  k             terminated_at  degree  verified\n";
    for (long n = lo; n <= hi; ++n) {
        Resolved r = base;
        r.binds.set("n", std::to_string(n));
        std::string k = "-";
        if (r.binds.find("k")) {
            try {
                k = dsl::fold_constant(*r.binds.find("k"), r.binds).to_string();
            } catch (const Error&) {
                k = r.binds.source("k");
            }
        }
        json row = {{"n", n}, {"k", k}};
        try {
            dispatch(r, [&](const auto& p) {
                AimTrace<typename std::decay_t<decltype(p.op)>::Field> t(p.op, p.lambda0, p.s0);
                const auto rep = find_termination(t, ss.n_max());
                row["terminated_at"] = rep.terminated_at ? json(*rep.terminated_at) : json(nullptr);
                if (!rep.terminated_at) {
                    open = true;
                    row["degree"] = nullptr;
                    row["verified"] = false;
                    return 0;
                }
                const auto sols = polynomial_solutions(p.op, p.lambda0, p.s0, *rep.terminated_at, p.norm);
                row["degree"] = sols.front().degree;
                row["verified"] = sols.front().verified;
                row["solution"] = coefficient_list(sols.front().coefficients);
                failed = failed || !sols.front().verified;
                return 0;
            });
        } catch (const UsageError&) {
            throw;
        } catch (const SyntaxError&) {
            throw;
        } catch (const Error& e) {
            failed = true;
            row["error"] = e.what();
        }
        auto cell = [](const json& v) { return v.is_null() ? std::string("-") : v.dump(); };
        ss.text() << std::setw(6) << n << "  " << std::left << std::setw(12) << k << "  " << std::setw(13)
                  << cell(row["terminated_at"]) << "  " << std::setw(6) << cell(row.value("degree", json(nullptr)))
                  << "  " << (row.value("verified", false) ? "yes" : "no") << std::right << "\n";
        rows.push_back(std::move(row));
    }
    ss.report()["rows"] = std::move(rows);
    return failed ? kPipeline : open ? kNoTermination : kVerified;
}

std::string status_of(int code) {
    switch (code) {
        case kVerified: return "verified";
        case kNoTermination: return "no-termination";
        case kUsage: return "usage-error";
        default: return "error";
    }
}

void list_presets(std::ostream& out) {
    for (const auto& p : kPresets) {
        out << p.name << " (" << (p.q_difference ? "dq" : "delta") << "): " << p.summary << "\n"
            << "    lambda0 = " << p.lambda0 << "\n    s0      = " << p.s0 << "\n";
        if (!p.bindings.empty()) {
            out << "    defaults:";
            for (const auto& [n, v] : p.bindings) out << " " << n << "=" << v;
            out << "\n";
        }
    }
}

// Fields from --config that were not given on the command line.
void merge_config(Settings& s) {
    std::ifstream f(*s.config);
    if (!f) throw UsageError("--config: cannot read " + *s.config);
    json c;
    try {
        c = json::parse(f);
    } catch (const json::exception& e) {
        throw UsageError(std::string("--config: ") + e.what());
    }
    if (!c.is_object()) throw UsageError("--config: expected a JSON object");
    auto text = [&](const char* key, std::optional<std::string>& dst) {
        if (dst || !c.contains(key)) return;
        const auto& v = c[key];
        dst = v.is_string() ? v.get<std::string>() : v.dump();
    };
    auto integer = [&](const char* key, std::optional<long>& dst) {
        if (dst || !c.contains(key)) return;
        if (!c[key].is_number_integer()) throw UsageError(std::string("--config: ") + key + " must be an integer");
        dst = c[key].get<long>();
    };
    try {
        text("preset", s.preset);
        text("operator", s.op);
        text("lambda0", s.lambda0);
        text("s0", s.s0);
        text("q", s.q);
        text("json", s.json_path);
        text("grid", s.grid);
        text("x", s.x);
        text("q_eval", s.q_eval);
        text("range", s.range);
        text("coeffs", s.coeffs);
        text("poly", s.poly);
        integer("n_max", s.n_max);
        integer("n0", s.n0);
        integer("m", s.m);
        if (!s.tol && c.contains("tol")) s.tol = c["tol"].get<double>();
        if (c.contains("trace_full") && !s.trace_full) s.trace_full = c["trace_full"].get<bool>();
        if (c.contains("bind")) {
            std::vector<std::string> from_file;
            const auto& b = c["bind"];
            if (b.is_object())
                for (const auto& [k, v] : b.items()) from_file.push_back(k + "=" + (v.is_string() ? v.get<std::string>() : v.dump()));
            else
                for (const auto& v : b) from_file.push_back(v.get<std::string>());
            s.binds.insert(s.binds.begin(), from_file.begin(), from_file.end());
        }
    } catch (const json::exception& e) {
        throw UsageError(std::string("--config: ") + e.what());
    }
    if (s.op && *s.op != "delta" && *s.op != "dq") throw UsageError("--config: operator must be delta or dq");
}

void add_common(CLI::App* sub, Settings& s) {
    auto str_opt = [&](const char* name, std::optional<std::string>& dst, const char* help) {
        return sub->add_option_function<std::string>(name, [&dst](const std::string& v) { dst = v; }, help);
    };
    auto long_opt = [&](const char* name, std::optional<long>& dst, const char* help) {
        return sub->add_option_function<long>(name, [&dst](const long& v) { dst = v; }, help);
    };
    str_opt("--preset", s.preset, "named example equation")->check(CLI::IsMember([] {
        std::vector<std::string> names;
        for (const auto& p : kPresets) names.push_back(p.name);
        return names;
    }()));
    str_opt("--operator", s.op, "delta or dq")->check(CLI::IsMember({"delta", "dq"}));
    str_opt("--lambda0", s.lambda0, "coefficient lambda0 as an expression in x");
    str_opt("--s0", s.s0, "coefficient s0 as an expression in x");
    sub->add_option("--bind", s.binds, "name=value binding, repeatable");
    str_opt("--q", s.q, "'symbolic' or a rational value");
    long_opt("--n-max", s.n_max, "largest iteration index searched (default 24)")->check(CLI::NonNegativeNumber);
    str_opt("--json", s.json_path, "write the JSON report to a path, or '-' for stdout");
    str_opt("--config", s.config, "JSON file supplying any option not given here");
    sub->add_option_function<double>("--tol", [&s](const double& v) { s.tol = v; }, "product truncation tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--trace-full", s.trace_full, "include every delta_n in the report");
}

}  // namespace

const std::vector<Preset>& presets() { return kPresets; }

const Preset& find_preset(const std::string& name) {
    for (const auto& p : kPresets)
        if (p.name == name) return p;
    throw UsageError("unknown preset '" + name + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Settings s;
    CLI::App app{"Polynomial solutions of difference and q-difference equations", "aim"};
    app.require_subcommand(1);
    auto* solve_cmd = app.add_subcommand("solve", "iterate, detect termination and solve");
    auto* scan_cmd = app.add_subcommand("scan", "solve once per value of the binding n");
    auto* second_cmd = app.add_subcommand("second", "second solution on an integer grid");
    auto* verify_sub = app.add_subcommand("verify", "residual of a given polynomial");
    app.add_subcommand("presets", "list bundled equations");
    for (auto* sub : {solve_cmd, scan_cmd, second_cmd, verify_sub}) add_common(sub, s);
    auto opt = [&](CLI::App* sub, const char* name, std::optional<std::string>& dst, const char* help) {
        sub->add_option_function<std::string>(name, [&dst](const std::string& v) { dst = v; }, help);
    };
    opt(solve_cmd, "--x", s.x, "point for the numeric product check (dq)");
    opt(solve_cmd, "--q-eval", s.q_eval, "numeric q for the product check when q is symbolic (default 1/2)");
    opt(scan_cmd, "--range", s.range, "values of n, a..b (default 0..4)");
    opt(second_cmd, "--grid", s.grid, "grid a..b: start and end point");
    second_cmd->add_option_function<long>("--n0", [&s](const long& v) { s.n0 = v; }, "grid start");
    second_cmd->add_option_function<long>("--m", [&s](const long& v) { s.m = v; }, "window length (default n)")
        ->check(CLI::NonNegativeNumber);
    opt(verify_sub, "--coeffs", s.coeffs, "comma separated coefficients, constant term first");
    opt(verify_sub, "--poly", s.poly, "polynomial in x");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kVerified : kUsage;
    }
    for (auto* sub : app.get_subcommands()) s.command = sub->get_name();
    if (s.command == "presets") {
        list_presets(out);
        return kVerified;
    }

    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    };
    std::optional<Session> ss;
    int code = kPipeline;
    std::string message;
    try {
        if (s.config) merge_config(s);
        ss.emplace(s, out);
        const Resolved r = resolve(ss->settings());
        ss->echo(r);
        if (s.command == "solve")
            code = dispatch(r, [&](const auto& p) { return solve(p, *ss); });
        else if (s.command == "second")
            code = dispatch(r, [&](const auto& p) { return second(p, *ss); });
        else if (s.command == "verify")
            code = dispatch(r, [&](const auto& p) { return verify_cmd(p, r, *ss); });
        else
            code = scan(r, *ss);
        ss->emit(status_of(code), elapsed());
        return code;
    } catch (const UsageError& e) {
        message = e.what();
        code = kUsage;
    } catch (const SyntaxError& e) {
        message = e.what();
        code = kUsage;
    } catch (const std::exception& e) {
        message = e.what();
        code = kPipeline;
    }
    err << "aim: " << message << "\n";
    if (ss) {
        ss->report()["error"] = message;
        try {
            ss->emit(status_of(code), elapsed());
        } catch (const Error&) {
        }
    }
    return code;
}

}  // namespace aim::cli
