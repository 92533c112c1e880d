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

#ifndef AIM_DSL_HPP
#define AIM_DSL_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aim/ratfunc.hpp"

/*
 * Coefficient expression language.
 *
 *   expr    := term (('+' | '-') term)*
 *   term    := unary (('*' | '/') unary)*
 *   unary   := '-' unary | power
 *   power   := primary ('^' exponent)?
 *   exponent:= '-' exponent | power
 *   primary := number | ident | '(' expr ')'
 *
 * x is the variable, q the field symbol; every other identifier names a
 * binding. Exponents must fold to integer constants.
 */
namespace aim::dsl {

enum class TokenKind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen };

struct Token {
    TokenKind kind;
    std::string text;
    Span span;
};

std::vector<Token> tokenize(std::string_view source);

struct Expr {
    enum class Kind { Literal, X, Q, Param, Neg, Add, Sub, Mul, Div, Pow };
    Kind kind;
    Span span;
    Rational value;        // Literal
    std::string name;      // Param
    std::vector<std::unique_ptr<Expr>> children;
};

using ExprPtr = std::unique_ptr<Expr>;

inline constexpr std::size_t kMaxNesting = 200;

ExprPtr parse(const std::vector<Token>& tokens, std::size_t source_size);
ExprPtr parse(std::string_view source);

/// Fully parenthesized source text for an AST.
std::string to_source(const Expr& e);

/*
 * Named parameter values. Each value is itself an expression without x; it
 * may use q and other bindings.
 */
class Bindings {
   public:
    void set(const std::string& name, std::string_view source);
    /// Parses "name=value".
    void set_assignment(std::string_view assignment);
    const Expr* find(const std::string& name) const;
    const std::string& source(const std::string& name) const;
    std::vector<std::string> names() const;
    bool empty() const noexcept { return values_.empty(); }

   private:
    struct Value {
        std::string source;
        std::shared_ptr<const Expr> expr;
    };
    std::map<std::string, Value> values_;
};

/// How the symbol q is read when lowering into a field over Q.
struct FieldSpec {
    std::optional<Rational> q;  // numeric value; unset means symbolic
};

inline constexpr long kMaxExponent = 4096;
inline constexpr long kMaxDegree = 1024;

template <class F>
RationalFunction<F> lower(const Expr& e, const Bindings& b, const FieldSpec& field = {});

extern template RationalFunction<Rational> lower<Rational>(const Expr&, const Bindings&, const FieldSpec&);
extern template RationalFunction<QFunction> lower<QFunction>(const Expr&, const Bindings&, const FieldSpec&);

template <class F>
RationalFunction<F> lower(std::string_view source, const Bindings& b, const FieldSpec& field = {}) {
    return lower<F>(*parse(source), b, field);
}

/// Folds a constant expression (no x, no q) to a rational.
Rational fold_constant(const Expr& e, const Bindings& b);

}  // namespace aim::dsl

#endif
