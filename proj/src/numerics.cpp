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

#include "mzvgraph/numerics.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace mzvgraph {

namespace {

constexpr std::size_t initial_terms = 64;
constexpr std::size_t max_terms = std::size_t{1} << 16;

struct Estimate {
    long double value = 0;
    long double bound = 0;
};

/* sum over n_1 > n_2 > ... > n_r >= 1 of x^{n_1} / (n_1^{m_1} ... n_r^{m_r})
 * at x = 1/2, for the word 0^{m_1-1}1 ... 0^{m_r-1}1 (outermost block first).
 * The empty word evaluates to 1.
 */
Estimate polylog_half(const Word& w, std::size_t terms) {
    if (w.empty()) return {1.0L, 0.0L};
    std::vector<int> blocks;
    int run = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 1) {
            blocks.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    const std::size_t r = blocks.size();

    // cumulative[j] = sum_{k <= n} S_j(k), S_r(k) = k^{-m_r}, S_j(k) = k^{-m_j} cumulative[j+1](k-1)
    std::vector<long double> cumulative(r + 1, 0.0L);
    long double power = 1.0L, total = 0.0L;
    for (std::size_t n = 1; n <= terms; ++n) {
        power *= 0.5L;
        const long double ln = static_cast<long double>(n);
        long double outer = 0.0L;
        for (std::size_t j = 0; j < r; ++j) {
            const long double inner = j + 1 < r ? cumulative[j + 1] : 1.0L;
            const long double s = inner / std::pow(ln, static_cast<long double>(blocks[j]));
            if (j == 0) outer = s;
            cumulative[j] += s;
        }
        total += power * outer;
    }

    // Tail: S_1(n) <= H_{n-1}^{r-1} <= (1 + ln n)^{r-1}; successive tail terms shrink by at most rho.
    const long double n1 = static_cast<long double>(terms + 1);
    const long double exponent = static_cast<long double>(r - 1);
    const long double first = std::pow(0.5L, n1) * std::pow(1.0L + std::log(n1), exponent);
    const long double rho = 0.5L * std::pow((1.0L + std::log(n1 + 1)) / (1.0L + std::log(n1)), exponent);
    long double tail = rho < 1.0L ? first / (1.0L - rho) : INFINITY;
    const long double rounding = total * static_cast<long double>(terms * (r + 2)) * 1e-18L;
    return {total, tail + rounding};
}

Word reversed_complement(const Word& w) {
    Word r = w.reversed();
    return Word::from_bits(~r.bits(), r.size());
}

Estimate zeta_of_word(const Word& w, std::size_t terms) {
    // Path composition at 1/2: the [1/2, 1] piece maps to [0, 1/2] under t -> 1 - t,
    // which reverses the word and swaps the two letters.
    Estimate sum;
    for (std::size_t j = 0; j <= w.size(); ++j) {
        const Estimate head = polylog_half(reversed_complement(w.substr(0, j)), terms);
        const Estimate tail = polylog_half(w.substr(j, w.size() - j), terms);
        sum.value += head.value * tail.value;
        sum.bound += std::fabs(head.value) * tail.bound + std::fabs(tail.value) * head.bound + head.bound * tail.bound;
    }
    return sum;
}

void check_tolerance(double tol) {
    if (!(tol >= min_tolerance)) throw std::invalid_argument("tolerance must be at least 1e-12");
}

MzvValue zeta_bounded(const Word& w, double tol) {
    check_tolerance(tol);
    for (std::size_t terms = initial_terms; terms <= max_terms; terms *= 2) {
        Estimate z = zeta_of_word(w, terms);
        const long double bound = z.bound + std::fabs(z.value) * 1e-16L;
        if (bound <= tol / 4) return {static_cast<double>(z.value), static_cast<double>(bound)};
    }
    throw ToleranceError("cannot reach tolerance " + std::to_string(tol) + " for word " + w.str());
}

}  // namespace

double default_tolerance(std::size_t weight) { return weight <= 6 ? 1e-8 : 1e-6; }

MzvValue eval_mzv_bounded(const Composition& c, double tol) { return zeta_bounded(word_from_composition(c), tol); }

double eval_mzv(const Composition& c, double tol) { return eval_mzv_bounded(c, tol).value.real(); }

MzvValue eval_word(const Word& w, double tol) {
    if (!w.admissible()) throw std::invalid_argument("eval_word: word '" + w.str() + "' is not admissible");
    const MzvValue zeta = zeta_bounded(w, tol);
    const std::size_t n = w.size();
    const long double scale = std::pow(2.0L * std::numbers::pi_v<long double>, static_cast<long double>(n));
    const double sign = w.depth() % 2 == 0 ? 1.0 : -1.0;
    const double magnitude = sign * static_cast<double>(static_cast<long double>(zeta.value.real()) / scale);
    // 1 / i^n cycles through 1, -i, -1, i.
    static const std::complex<double> inverse_i_power[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    return {magnitude * inverse_i_power[n % 4], static_cast<double>(zeta.abs_error_bound / scale) + 1e-18};
}

MzvValue eval_word_sum(const WordSum& s, double tol) {
    MzvValue total{{0.0, 0.0}, 0.0};
    for (const auto& [w, c] : s) {
        const MzvValue v = eval_word(w, tol);
        const double coefficient = c.get_d();
        total.value += coefficient * v.value;
        total.abs_error_bound += std::fabs(coefficient) * v.abs_error_bound;
    }
    return total;
}

namespace {

std::vector<Rational> bernoulli_sequence(unsigned n) {
    std::vector<Rational> b{Rational(1)};
    for (unsigned m = 1; m <= n; ++m) {
        Rational acc = 0;
        for (unsigned j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * b[j];
        b.push_back(-acc / (m + 1));
    }
    return b;
}

}  // namespace

Rational bernoulli(unsigned n) { return bernoulli_sequence(n).back(); }

std::map<unsigned, Rational> bernoulli_table(unsigned max_index) {
    const auto b = bernoulli_sequence(max_index);
    std::map<unsigned, Rational> table;
    for (unsigned m = 2; m <= max_index; m += 2) table.emplace(m, b[m]);
    return table;
}

}  // namespace mzvgraph
