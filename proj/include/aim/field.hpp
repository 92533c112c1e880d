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

#ifndef AIM_FIELD_HPP
#define AIM_FIELD_HPP

#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "aim/rational.hpp"

namespace aim {

/*
 * Per-field hooks used by the generic polynomial code.
 *
 *   content(values)  - nonzero c such that values/c are "integral and
 *                      primitive"; drives content stripping in the gcd.
 *   to_string(v)     - text accepted back by the expression parser.
 *   is_compound(v)   - whether to_string(v) has a top-level + or - and so
 *                      needs parentheses as a factor.
 *   as_rational(v)   - the value as a rational constant, if it is one.
 *   from_rational(r) - embedding of Q.
 *   image(v, ctx)    - v reduced modulo a prime, with any inner variable sent
 *                      to ctx.point; nullopt where a denominator vanishes.
 *                      Only used to bound gcd degrees.
 */
template <class F>
struct FieldTraits;

/// Arithmetic in Z/p for primes below 2^32.
struct ModularImage {
    std::uint64_t p;
    std::uint64_t point;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
    std::uint64_t inv(std::uint64_t a) const {
        std::uint64_t r = 1, e = p - 2;
        for (; e; e >>= 1U, a = mul(a, a))
            if (e & 1U) r = mul(r, a);
        return r;
    }
};

template <class F>
concept Field = requires(F a, const F& b) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    { b.is_zero() } -> std::convertible_to<bool>;
    { FieldTraits<F>::to_string(b) } -> std::convertible_to<std::string>;
};

template <>
struct FieldTraits<Rational> {
    static Rational content(std::span<const Rational> values) { return primitive_content(values); }
    static std::string to_string(const Rational& v) { return v.to_string(); }
    static bool is_compound(const Rational&) { return false; }
    static std::optional<Rational> as_rational(const Rational& v) { return v; }
    static Rational from_rational(const Rational& r) { return r; }
    static std::optional<std::uint64_t> image(const Rational& v, const ModularImage& ctx) {
        const auto d = mpz_fdiv_ui(v.raw().get_den_mpz_t(), ctx.p);
        if (d == 0) return std::nullopt;
        return ctx.mul(mpz_fdiv_ui(v.raw().get_num_mpz_t(), ctx.p), ctx.inv(d));
    }
};

}  // namespace aim

#endif
