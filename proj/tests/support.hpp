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

#ifndef AIM_TESTS_SUPPORT_HPP
#define AIM_TESTS_SUPPORT_HPP

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

#include "aim/ratfunc.hpp"

namespace aim::test {

inline constexpr int kCases = 100;

/// Seed from AIM_SEED, else a fixed default so failures reproduce.
inline std::uint64_t seed() {
    if (const char* s = std::getenv("AIM_SEED")) return std::strtoull(s, nullptr, 10);
    return 20261014;
}

class Random {
   public:
    explicit Random(std::uint64_t salt = 0) : g_(seed() ^ (salt * 0x9E3779B97F4A7C15ULL)) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g_); }

    /// Small rational, numerator in [-9, 9], denominator in [1, 5].
    Rational rational() { return Rational(integer(-9, 9)) / Rational(integer(1, 5)); }
    Rational nonzero_rational() {
        for (;;)
            if (auto r = rational(); !r.is_zero()) return r;
    }

    Polynomial<Rational> poly(int max_degree, char var = 'x') {
        std::vector<Rational> c;
        const long d = integer(0, max_degree);
        for (long k = 0; k <= d; ++k) c.push_back(rational());
        return Polynomial<Rational>(std::move(c), var);
    }
    Polynomial<Rational> nonzero_poly(int max_degree, char var = 'x') {
        for (;;)
            if (auto p = poly(max_degree, var); !p.is_zero()) return p;
    }

    RationalFunction<Rational> ratfunc(int max_degree) {
        return RationalFunction<Rational>(poly(max_degree), nonzero_poly(max_degree));
    }

    QFunction qfunction(int max_degree) {
        return QFunction(poly(max_degree, 'q'), nonzero_poly(max_degree, 'q'));
    }

    Polynomial<QFunction> qpoly(int max_degree, int coeff_degree) {
        std::vector<QFunction> c;
        const long d = integer(0, max_degree);
        for (long k = 0; k <= d; ++k) c.push_back(QFunction(poly(coeff_degree, 'q')));
        return Polynomial<QFunction>(std::move(c));
    }
    RationalFunction<QFunction> qratfunc(int max_degree, int coeff_degree) {
        for (;;) {
            auto d = qpoly(max_degree, coeff_degree);
            if (!d.is_zero()) return RationalFunction<QFunction>(qpoly(max_degree, coeff_degree), d);
        }
    }

    std::mt19937_64& engine() { return g_; }

   private:
    std::mt19937_64 g_;
};

inline Polynomial<Rational> px(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long a : c) v.emplace_back(a);
    return Polynomial<Rational>(std::move(v));
}

}  // namespace aim::test

#endif
