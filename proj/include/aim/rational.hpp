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

#ifndef AIM_RATIONAL_HPP
#define AIM_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aim/errors.hpp"

namespace aim {

using Integer = mpz_class;

/*
 * Exact rational number, always in lowest terms with a positive denominator
 * (zero is 0/1). Thin value wrapper over mpq_class: every constructor and
 * operation leaves the value canonical.
 */
class Rational {
   public:
    Rational() = default;
    Rational(long n) : v_(n) {}  // NOLINT: implicit from integer literals is intended
    Rational(int n) : v_(static_cast<long>(n)) {}
    explicit Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "p", "-p", "p/q" or a finite decimal "1.25".
    static Rational parse(std::string_view text);

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }
    bool is_zero() const noexcept { return sgn(v_) == 0; }
    bool is_one() const noexcept { return v_ == 1; }
    bool is_integer() const noexcept { return v_.get_den() == 1; }
    int sign() const noexcept { return sgn(v_); }
    double to_double() const { return v_.get_d(); }
    /// Exact conversion when the value is an integer that fits in a long.
    std::optional<long> to_long() const;
    std::string to_string() const { return v_.get_str(); }
    const mpq_class& raw() const noexcept { return v_; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

   private:
    mpq_class v_;
};

Rational abs(const Rational& r);
/// r^e for any integer e; throws ArithmeticError for 0^negative.
Rational pow(const Rational& r, long e);

/// gcd of numerators over lcm of denominators, carrying the sign of the last
/// nonzero entry. Dividing every entry by the result leaves coprime integers
/// whose last nonzero entry is positive. Returns 1 for an all-zero span.
Rational primitive_content(std::span<const Rational> values);

std::string to_string(const Rational& r);

/// Dense product of coefficient vectors, computed over the integers.
std::vector<Rational> convolve(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace aim

#endif
