/* Copyright 2026 The mzvgraph Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mzvgraph/numerics.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

using namespace mzvgraph;

namespace {

constexpr double pi = std::numbers::pi;

// Akiyama-Tanigawa; yields B1 = +1/2.
Rational akiyama_tanigawa(unsigned n) {
    std::vector<Rational> a(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        a[m] = Rational(1, m + 1);
        for (unsigned j = m; j >= 1; --j) a[j - 1] = j * (a[j - 1] - a[j]);
    }
    return a[0];
}

// Direct partial sum with an Euler-Maclaurin tail.
double direct_zeta(int s) {
    const int n = 20000;
    long double sum = 0;
    for (int k = n - 1; k >= 1; --k) sum += std::pow(static_cast<long double>(k), -s);
    const long double N = n;
    sum += std::pow(N, 1 - s) / (s - 1) + 0.5L * std::pow(N, -s) + s * std::pow(N, -s - 1) / 12.0L;
    return static_cast<double>(sum);
}

// Direct double sum over k1 < k2 with both tails treated by integrals; only for moderate accuracy.
double direct_double_zeta(int a, int b, int n) {
    long double sum = 0, inner = 0;
    for (int k2 = 1; k2 <= n; ++k2) {
        sum += inner * std::pow(static_cast<long double>(k2), -b);
        inner += std::pow(static_cast<long double>(k2), -a);
    }
    return static_cast<double>(sum);
}

}  // namespace

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    CHECK(bernoulli(20) == Rational(-174611, 330));
    for (unsigned n = 2; n <= 30; ++n) CHECK(bernoulli(n) == akiyama_tanigawa(n));

    const auto table = bernoulli_table(12);
    CHECK(table.size() == 6);
    CHECK_FALSE(table.contains(0));
    CHECK(table.at(6) == Rational(1, 42));
}

TEST_CASE("single zeta values") {
    CHECK(eval_mzv(Composition({2})) == doctest::Approx(pi * pi / 6).epsilon(1e-12));
    CHECK(std::fabs(eval_mzv(Composition({3}), 1e-12) - 1.2020569031595942) < 1e-12);
    CHECK(std::fabs(eval_mzv(Composition({4}), 1e-12) - std::pow(pi, 4) / 90) < 1e-12);
    for (int s = 2; s <= 9; ++s) CHECK(std::fabs(eval_mzv(Composition({s}), 1e-10) - direct_zeta(s)) < 1e-9);
}

TEST_CASE("multiple zeta values against closed forms") {
    const double tol = 1e-11;
    const double z2 = pi * pi / 6, z3 = 1.2020569031595942, z5 = 1.0369277551433699;
    CHECK(std::fabs(eval_mzv(Composition({1, 2}), tol) - z3) < 1e-10);
    CHECK(std::fabs(eval_mzv(Composition({1, 3}), tol) - std::pow(pi, 4) / 360) < 1e-10);
    CHECK(std::fabs(eval_mzv(Composition({2, 2}), tol) - std::pow(pi, 4) / 120) < 1e-10);
    CHECK(std::fabs(eval_mzv(Composition({1, 1, 2}), tol) - std::pow(pi, 4) / 90) < 1e-10);
    CHECK(std::fabs(eval_mzv(Composition({2, 3}), tol) + eval_mzv(Composition({3, 2}), tol) - (z2 * z3 - z5)) < 1e-10);
    CHECK(std::fabs(eval_mzv(Composition({2, 3}), tol) - 0.22881039760335375) < 1e-10);
    CHECK(std::fabs(eval_mzv(Composition({3, 2}), tol) - direct_double_zeta(3, 2, 200000)) < 1e-5);
}

TEST_CASE("normalized word values") {
    const MzvValue l01 = eval_word(Word("01"), 1e-12);
    CHECK(std::fabs(l01.value.real() - 1.0 / 24) < 1e-12);
    CHECK(l01.value.imag() == 0.0);

    const MzvValue l001 = eval_word(Word("001"), 1e-12);
    CHECK(l001.value.real() == 0.0);
    CHECK(std::fabs(l001.value.imag() + 1.2020569031595942 / (8 * pi * pi * pi)) < 1e-12);

    CHECK(std::fabs(eval_word(Word("0011"), 1e-12).value.real() - 1.0 / 5760) < 1e-12);
    CHECK(std::fabs(eval_word(Word("0001"), 1e-12).value.real() + 1.0 / 1440) < 1e-12);

    for (unsigned k = 1; k <= 6; ++k) {
        const double expected = Rational(bernoulli(2 * k) / (2 * Rational(factorial(2 * k)))).get_d();
        CHECK(std::fabs(eval_word(Word::from_bits(1, 2 * k), 1e-12).value.real() - expected) < 1e-12);
    }
}

TEST_CASE("word sums are evaluated linearly") {
    WordSum s;
    s.add(Word("0011"), 4);
    s.add(Word("0101"), 2);
    const auto sum = eval_word_sum(s).value;
    const auto square = eval_word(Word("01")).value;
    CHECK(std::abs(sum - square * square) < 1e-9);
}

TEST_CASE("random shuffle products are multiplicative") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const auto& us = admissible_words(2 + rng() % 3);
        const auto& vs = admissible_words(2 + rng() % 3);
        const Word u = us[rng() % us.size()], v = vs[rng() % vs.size()];
        const auto lhs = eval_word(u).value * eval_word(v).value;
        CHECK(std::abs(lhs - eval_word_sum(shuffle(u, v)).value) < 1e-8);
    }
}

TEST_CASE("error bound and tolerance handling") {
    const MzvValue v = eval_mzv_bounded(Composition({1, 2, 2}), 1e-10);
    CHECK(v.abs_error_bound <= 1e-10);
    CHECK(v.abs_error_bound > 0.0);
    CHECK(default_tolerance(6) == 1e-8);
    CHECK(default_tolerance(7) == 1e-6);
    CHECK_THROWS_AS(eval_mzv(Composition({2}), 1e-13), std::invalid_argument);
    CHECK_THROWS_AS(eval_mzv(Composition({2}), -1.0), std::invalid_argument);
    CHECK_THROWS_AS(eval_word(Word("0110")), std::invalid_argument);
    CHECK_NOTHROW(eval_mzv(Composition({2, 2, 2, 2, 2, 2, 2, 2, 2, 2}), 1e-12));
}

TEST_CASE("duality on small weights") {
    for (std::size_t n = 2; n <= 7; ++n)
        for (const Word& w : admissible_words(n))
            CHECK(std::fabs(eval_mzv(composition_from_word(w), 1e-11) -
                            eval_mzv(composition_from_word(dual_word(w)), 1e-11)) < 1e-10);
}
