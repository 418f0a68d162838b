/*
 * Copyright 2026 The opalg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <algorithm>
#include <random>

#include "doctest.h"

#include "opalg/errors.hpp"
#include "opalg/polynomial.hpp"

using opalg::Poly;
using opalg::Rational;

TEST_CASE("degree and normalization") {
    CHECK(opalg::poly_degree({}) == -1);
    CHECK(opalg::poly_degree({5}) == 0);
    CHECK(opalg::poly_degree({0, 0, 3}) == 2);
    CHECK(opalg::poly_normalize({1, 0, 0}) == Poly{1});
    CHECK(opalg::poly_normalize({0, 0}) == Poly{});
}

TEST_CASE("ring operations") {
    // (1 + x)(1 - x) = 1 - x^2
    CHECK(opalg::poly_mul({1, 1}, {1, -1}) == Poly{1, 0, -1});
    CHECK(opalg::poly_add({1, 1}, {-1, -1}) == Poly{});
    CHECK(opalg::poly_sub({1, 1}, {0, 1}) == Poly{1});
    // d/dx (x^3 - 2x) = 3x^2 - 2
    CHECK(opalg::poly_derivative({0, -2, 0, 1}) == Poly{-2, 0, 3});
    CHECK(opalg::poly_monic({2, 4}) == Poly{Rational(1, 2), 1});
    CHECK(opalg::poly_eval({2, -3, 1}, Rational(1)) == Rational(0));
    CHECK(opalg::poly_eval({2, -3, 1}, Rational(5)) == Rational(12));
}

TEST_CASE("division with remainder") {
    // x^3 - 1 = (x - 1)(x^2 + x + 1)
    auto [q, r] = opalg::poly_divmod({-1, 0, 0, 1}, {-1, 1});
    CHECK(q == Poly{1, 1, 1});
    CHECK(r == Poly{});

    auto [q2, r2] = opalg::poly_divmod({1, 0, 1}, {0, 1});
    CHECK(q2 == Poly{0, 1});
    CHECK(r2 == Poly{1});

    CHECK_THROWS_AS(opalg::poly_divmod({1}, {}), opalg::Error);
}

TEST_CASE("gcd and squarefreeness") {
    // gcd(x^2 - 1, (x - 1)^2) = x - 1, monic
    CHECK(opalg::poly_gcd({-1, 0, 1}, {1, -2, 1}) == Poly{-1, 1});
    CHECK(opalg::poly_gcd({-1, 1}, {1, 1}) == Poly{1});
    CHECK(opalg::poly_is_squarefree({-1, 0, 1}));
    CHECK(!opalg::poly_is_squarefree({1, -2, 1}));
    CHECK(opalg::poly_is_squarefree({0, 1}));
}

TEST_CASE("rational roots of known polynomials") {
    using R = Rational;
    auto roots = [](const Poly& p) { return opalg::rational_roots(p); };

    CHECK(roots({-1, 0, 1}) == std::vector<R>{-1, 1});            // x^2 - 1
    CHECK(roots({2, -3, 1}) == std::vector<R>{1, 2});             // (x-1)(x-2)
    CHECK(roots({1, -5, 6}) == std::vector<R>{R(1, 3), R(1, 2)}); // (2x-1)(3x-1)
    CHECK(roots({-2, 0, 1}).empty());                             // x^2 - 2
    CHECK(roots({1, 0, 1}).empty());                              // x^2 + 1
    CHECK(roots({1, -2, 1}) == std::vector<R>{1});                // (x-1)^2
    CHECK(roots({0, -1, 0, 1}) == std::vector<R>{-1, 0, 1});      // x^3 - x
    CHECK(roots({-2, 0, 2}) == std::vector<R>{-1, 1});            // 2x^2 - 2
    CHECK(roots({-1000000, 1}) == std::vector<R>{1000000});
    // (x - 1/2)(x - 1/3) = x^2 - 5/6 x + 1/6
    CHECK(roots({R(1, 6), R(-5, 6), 1}) == std::vector<R>{R(1, 3), R(1, 2)});
    CHECK(roots({7}).empty());
    CHECK_THROWS_AS(roots({}), opalg::Error);
}

TEST_CASE("random products of linear factors are fully recovered") {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 200; ++iter) {
        // Distinct roots n/d with small n, d; optional repeated factor and
        // a nonzero leading scale.
        std::size_t count = 1 + rng() % 4;
        std::vector<Rational> roots;
        while (roots.size() < count) {
            long num = static_cast<long>(rng() % 21) - 10;
            long den = 1 + static_cast<long>(rng() % 4);
            Rational r(num, den);
            if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        }
        Poly p{Rational(1 + static_cast<long>(rng() % 5))};
        for (const Rational& r : roots) {
            p = opalg::poly_mul(p, {-r, 1});
            if (rng() % 3 == 0) p = opalg::poly_mul(p, {-r, 1}); // multiplicity
        }
        std::vector<Rational> expect = roots;
        std::sort(expect.begin(), expect.end());
        CHECK(opalg::rational_roots(p) == expect);
    }
}

TEST_CASE("random polynomials never report false roots") {
    std::mt19937_64 rng(77);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t deg = 1 + rng() % 5;
        Poly p(deg + 1);
        for (Rational& c : p) c = Rational(static_cast<long>(rng() % 11) - 5);
        p[deg] = Rational(1 + static_cast<long>(rng() % 4));
        for (const Rational& r : opalg::rational_roots(p)) {
            CHECK(opalg::poly_eval(p, r) == Rational(0));
        }
    }
}
