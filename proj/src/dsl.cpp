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

#include "aim/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace aim::dsl {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::string describe(const Token& t) { return "'" + t.text + "'"; }

}  // namespace

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        TokenKind kind;
        if (is_digit(c)) {
            while (i < src.size() && is_digit(src[i])) ++i;
            if (i < src.size() && src[i] == '.') {
                ++i;
                while (i < src.size() && is_digit(src[i])) ++i;
            }
            kind = TokenKind::Number;
        } else if (is_ident_start(c)) {
            while (i < src.size() && is_ident_char(src[i])) ++i;
            kind = TokenKind::Ident;
        } else {
            switch (c) {
                case '+': kind = TokenKind::Plus; break;
                case '-': kind = TokenKind::Minus; break;
                case '*': kind = TokenKind::Star; break;
                case '/': kind = TokenKind::Slash; break;
                case '^': kind = TokenKind::Caret; break;
                case '(': kind = TokenKind::LParen; break;
                case ')': kind = TokenKind::RParen; break;
                default: {
                    const bool printable = std::isprint(static_cast<unsigned char>(c));
                    throw LexError(printable ? "illegal character '" + std::string(1, c) + "'"
                                             : "illegal byte " + std::to_string(static_cast<unsigned char>(c)),
                                   {start, start + 1});
                }
            }
            ++i;
        }
        out.push_back({kind, std::string(src.substr(start, i - start)), {start, i}});
    }
    return out;
}

namespace {

class Parser {
   public:
    Parser(const std::vector<Token>& toks, std::size_t size) : toks_(toks), size_(size) {}

    ExprPtr parse_all() {
        auto e = expr();
        if (pos_ < toks_.size()) throw ParseError("unexpected " + describe(toks_[pos_]), toks_[pos_].span,
                                                  "an operator or end of input");
        return e;
    }

   private:
    struct DepthGuard {
        explicit DepthGuard(Parser& p) : p_(p) {
            if (++p_.depth_ > kMaxNesting) throw ParseError("expression nested too deeply", p_.here(), "");
        }
        ~DepthGuard() { --p_.depth_; }
        DepthGuard(const DepthGuard&) = delete;
        DepthGuard& operator=(const DepthGuard&) = delete;
        Parser& p_;
    };

    Span here() const { return pos_ < toks_.size() ? toks_[pos_].span : Span{size_, size_}; }
    bool at(TokenKind k) const { return pos_ < toks_.size() && toks_[pos_].kind == k; }

    static ExprPtr node(Expr::Kind kind, Span span) {
        auto e = std::make_unique<Expr>();
        e->kind = kind;
        e->span = span;
        return e;
    }
    static ExprPtr binary(Expr::Kind kind, ExprPtr l, ExprPtr r) {
        auto e = node(kind, {l->span.begin, r->span.end});
        e->children.push_back(std::move(l));
        e->children.push_back(std::move(r));
        return e;
    }

    ExprPtr expr() {
        DepthGuard g(*this);
        auto left = term();
        while (at(TokenKind::Plus) || at(TokenKind::Minus)) {
            const auto kind = toks_[pos_++].kind == TokenKind::Plus ? Expr::Kind::Add : Expr::Kind::Sub;
            left = binary(kind, std::move(left), term());
        }
        return left;
    }

    ExprPtr term() {
        auto left = unary();
        while (at(TokenKind::Star) || at(TokenKind::Slash)) {
            const auto kind = toks_[pos_++].kind == TokenKind::Star ? Expr::Kind::Mul : Expr::Kind::Div;
            left = binary(kind, std::move(left), unary());
        }
        return left;
    }

    ExprPtr negation(ExprPtr (Parser::*operand)()) {
        const Span minus = toks_[pos_++].span;
        auto inner = (this->*operand)();
        auto e = node(Expr::Kind::Neg, {minus.begin, inner->span.end});
        e->children.push_back(std::move(inner));
        return e;
    }

    ExprPtr unary() {
        DepthGuard g(*this);
        if (at(TokenKind::Minus)) return negation(&Parser::unary);
        return power();
    }

    ExprPtr power() {
        auto base = primary();
        if (!at(TokenKind::Caret)) return base;
        ++pos_;
        return binary(Expr::Kind::Pow, std::move(base), exponent());
    }

    ExprPtr exponent() {
        DepthGuard g(*this);
        if (at(TokenKind::Minus)) return negation(&Parser::exponent);
        return power();
    }

    ExprPtr primary() {
        static const std::string expected = "a number, an identifier, '(' or '-'";
        if (pos_ >= toks_.size()) throw ParseError("unexpected end of input", here(), expected);
        const Token& t = toks_[pos_];
        switch (t.kind) {
            case TokenKind::Number: {
                ++pos_;
                auto e = node(Expr::Kind::Literal, t.span);
                e->value = Rational::parse(t.text);
                return e;
            }
            case TokenKind::Ident: {
                ++pos_;
                if (t.text == "x") return node(Expr::Kind::X, t.span);
                if (t.text == "q") return node(Expr::Kind::Q, t.span);
                auto e = node(Expr::Kind::Param, t.span);
                e->name = t.text;
                return e;
            }
            case TokenKind::LParen: {
                DepthGuard g(*this);
                ++pos_;
                auto inner = expr();
                if (!at(TokenKind::RParen)) {
                    if (pos_ >= toks_.size())
                        throw ParseError("unbalanced '('", {t.span.begin, size_}, "')'");
                    throw ParseError("unexpected " + describe(toks_[pos_]), toks_[pos_].span, "')' or an operator");
                }
                inner->span = {t.span.begin, toks_[pos_].span.end};
                ++pos_;
                return inner;
            }
            default:
                throw ParseError("unexpected " + describe(t), t.span, expected);
        }
    }

    const std::vector<Token>& toks_;
    std::size_t size_;
    std::size_t pos_ = 0;
    std::size_t depth_ = 0;
};

}  // namespace

ExprPtr parse(const std::vector<Token>& tokens, std::size_t source_size) {
    return Parser(tokens, source_size).parse_all();
}

ExprPtr parse(std::string_view source) { return parse(tokenize(source), source.size()); }

std::string to_source(const Expr& e) {
    auto bin = [&](const char* op) {
        return "(" + to_source(*e.children[0]) + op + to_source(*e.children[1]) + ")";
    };
    switch (e.kind) {
        case Expr::Kind::Literal:
            return e.value.is_integer() && e.value.sign() >= 0 ? e.value.to_string() : "(" + e.value.to_string() + ")";
        case Expr::Kind::X: return "x";
        case Expr::Kind::Q: return "q";
        case Expr::Kind::Param: return e.name;
        case Expr::Kind::Neg: return "(-" + to_source(*e.children[0]) + ")";
        case Expr::Kind::Add: return bin(" + ");
        case Expr::Kind::Sub: return bin(" - ");
        case Expr::Kind::Mul: return bin("*");
        case Expr::Kind::Div: return bin("/");
        case Expr::Kind::Pow: return bin("^");
    }
    return "";
}

// ---- bindings -------------------------------------------------------------

void Bindings::set(const std::string& name, std::string_view source) {
    if (name.empty() || !is_ident_start(name[0]) || !std::all_of(name.begin(), name.end(), is_ident_char))
        throw UsageError("invalid parameter name '" + name + "'");
    if (name == "x" || name == "q") throw UsageError("'" + name + "' is reserved and cannot be bound");
    values_[name] = {std::string(source), std::shared_ptr<const Expr>(parse(source))};
}

void Bindings::set_assignment(std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos) throw UsageError("binding must look like name=value");
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    set(std::string(trim(assignment.substr(0, eq))), trim(assignment.substr(eq + 1)));
}

const Expr* Bindings::find(const std::string& name) const {
    const auto it = values_.find(name);
    return it == values_.end() ? nullptr : it->second.expr.get();
}

const std::string& Bindings::source(const std::string& name) const {
    const auto it = values_.find(name);
    if (it == values_.end()) throw UsageError("unbound name '" + name + "'");
    return it->second.source;
}

std::vector<std::string> Bindings::names() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : values_) out.push_back(k);
    return out;
}

// ---- constant folding -----------------------------------------------------

namespace {

long checked_exponent(const Rational& e, Span span) {
    if (!e.is_integer()) throw LowerError("exponent " + e.to_string() + " is not an integer", span);
    const auto v = e.to_long();
    if (!v || std::labs(*v) > kMaxExponent)
        throw LowerError("exponent exceeds " + std::to_string(kMaxExponent) + " in magnitude", span);
    return *v;
}

constexpr std::size_t kMaxConstantBits = std::size_t{1} << 20;

std::size_t bits(const Rational& r) {
    return mpz_sizeinbase(r.raw().get_num_mpz_t(), 2) + mpz_sizeinbase(r.raw().get_den_mpz_t(), 2);
}

struct BindingStack {
    std::vector<std::string> names;
    void enter(const std::string& n, Span span) {
        if (std::find(names.begin(), names.end(), n) != names.end())
            throw LowerError("binding '" + n + "' refers to itself", span);
        names.push_back(n);
    }
    void leave() { names.pop_back(); }
};

Rational fold(const Expr& e, const Bindings& b, BindingStack& stack) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::Literal: return e.value;
        case K::X: throw LowerError("x cannot appear in a constant", e.span);
        case K::Q: throw LowerError("q cannot appear in a constant", e.span);
        case K::Param: {
            const Expr* v = b.find(e.name);
            if (!v) throw LowerError("unbound name '" + e.name + "'", e.span);
            stack.enter(e.name, e.span);
            Rational r;
            try {
                r = fold(*v, b, stack);
            } catch (const LowerError& err) {
                throw LowerError("in binding '" + e.name + "': " + err.what(), e.span);
            }
            stack.leave();
            return r;
        }
        case K::Neg: return -fold(*e.children[0], b, stack);
        default: break;
    }
    const Rational l = fold(*e.children[0], b, stack);
    const Rational r = fold(*e.children[1], b, stack);
    switch (e.kind) {
        case K::Add: return l + r;
        case K::Sub: return l - r;
        case K::Mul: return l * r;
        case K::Div:
            if (r.is_zero()) throw LowerError("division by zero", e.children[1]->span);
            return l / r;
        case K::Pow: {
            const long k = checked_exponent(r, e.children[1]->span);
            if (l.is_zero() && k < 0) throw LowerError("zero raised to a negative power", e.span);
            if (bits(l) * static_cast<std::size_t>(std::labs(k)) > kMaxConstantBits)
                throw LowerError("constant power is too large", e.span);
            return pow(l, k);
        }
        default: break;
    }
    throw LowerError("unsupported expression", e.span);
}

// ---- lowering -------------------------------------------------------------

std::size_t inner_degree(const Rational&) { return 0; }
std::size_t inner_degree(const QFunction& c) {
    return static_cast<std::size_t>(std::max({c.numerator().degree(), c.denominator().degree(), 0}));
}

std::size_t coefficient_bits(const QFunction& c) {
    std::size_t m = 0;
    for (const auto* p : {&c.numerator(), &c.denominator()})
        for (const auto& r : p->coefficients()) m = std::max(m, bits(r));
    return m;
}
template <class F>
std::size_t coefficient_bits(const RationalFunction<F>& f) {
    std::size_t m = 0;
    for (const auto* p : {&f.numerator(), &f.denominator()})
        for (const auto& c : p->coefficients()) m = std::max(m, coefficient_bits(c));
    return m;
}

template <class F>
std::size_t size_measure(const RationalFunction<F>& f) {
    std::size_t m = static_cast<std::size_t>(std::max(f.numerator().degree(), 0) + f.denominator().degree());
    for (const auto* p : {&f.numerator(), &f.denominator()})
        for (const auto& c : p->coefficients()) m = std::max(m, inner_degree(c));
    return m;
}

template <class F>
F q_element(const FieldSpec& field, Span span);

template <>
Rational q_element<Rational>(const FieldSpec& field, Span span) {
    if (!field.q) throw LowerError("q needs a numeric value in this field", span);
    return *field.q;
}

template <>
QFunction q_element<QFunction>(const FieldSpec& field, Span) {
    return field.q ? QFunction(*field.q) : q_symbol();
}

template <class F>
class Lowerer {
   public:
    using RF = RationalFunction<F>;
    using Poly = Polynomial<F>;

    Lowerer(const Bindings& b, const FieldSpec& f) : b_(b), field_(f) {}

    RF run(const Expr& e) {
        using K = Expr::Kind;
        switch (e.kind) {
            case K::Literal: return RF(F(e.value));
            case K::X: return RF::variable('x');
            case K::Q: return RF(q_element<F>(field_, e.span));
            case K::Param: return param(e);
            case K::Neg: return -run(*e.children[0]);
            case K::Pow: return power(e);
            default: break;
        }
        const RF l = run(*e.children[0]);
        const RF r = run(*e.children[1]);
        switch (e.kind) {
            case K::Add: return l + r;
            case K::Sub: return l - r;
            case K::Mul: return l * r;
            case K::Div:
                if (r.is_zero()) throw LowerError("division by an expression that is identically zero", e.children[1]->span);
                return l / r;
            default: break;
        }
        throw LowerError("unsupported expression", e.span);
    }

   private:
    RF param(const Expr& e) {
        const Expr* v = b_.find(e.name);
        if (!v) throw LowerError("unbound name '" + e.name + "'", e.span);
        stack_.enter(e.name, e.span);
        RF r;
        try {
            r = run(*v);
        } catch (const LowerError& err) {
            throw LowerError("in binding '" + e.name + "': " + err.what(), e.span);
        }
        stack_.leave();
        if (!r.is_constant()) throw LowerError("binding '" + e.name + "' depends on x", e.span);
        return r;
    }

    RF power(const Expr& e) {
        BindingStack fold_stack;
        long k;
        try {
            k = checked_exponent(fold(*e.children[1], b_, fold_stack), e.children[1]->span);
        } catch (const LowerError& err) {
            throw LowerError(std::string("exponent must fold to an integer constant: ") + err.what(),
                             e.children[1]->span);
        }
        RF base = run(*e.children[0]);
        if (k < 0) {
            if (base.is_zero()) throw LowerError("zero raised to a negative power", e.span);
            base = base.reciprocal();
            k = -k;
        }
        if (size_measure(base) * static_cast<std::size_t>(k) > static_cast<std::size_t>(kMaxDegree))
            throw LowerError("power exceeds the degree limit of " + std::to_string(kMaxDegree), e.span);
        const auto e_u = static_cast<std::size_t>(k);
        if (coefficient_bits(base) * e_u > kMaxConstantBits) throw LowerError("power is too large", e.span);
        // a coprime pair stays coprime under powers, and a monic denominator stays monic
        return RF::from_canonical(pow(base.numerator(), e_u), pow(base.denominator(), e_u));
    }

    const Bindings& b_;
    const FieldSpec& field_;
    BindingStack stack_;
};

}  // namespace

Rational fold_constant(const Expr& e, const Bindings& b) {
    BindingStack stack;
    return fold(e, b, stack);
}

template <class F>
RationalFunction<F> lower(const Expr& e, const Bindings& b, const FieldSpec& field) {
    return Lowerer<F>(b, field).run(e);
}

template RationalFunction<Rational> lower<Rational>(const Expr&, const Bindings&, const FieldSpec&);
template RationalFunction<QFunction> lower<QFunction>(const Expr&, const Bindings&, const FieldSpec&);

}  // namespace aim::dsl
