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

#include "mzvgraph/verify.hpp"

#include "mzvgraph/decompose.hpp"
#include "mzvgraph/lyndon.hpp"
#include "mzvgraph/numerics.hpp"
#include "mzvgraph/trees.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

namespace mzvgraph {

namespace {

class Checks {
public:
    void expect(std::string name, bool ok, std::string detail = {}) {
        results_.push_back({std::move(name), ok, ok ? std::string{} : std::move(detail)});
    }
    std::vector<CheckResult> take() { return std::move(results_); }

private:
    std::vector<CheckResult> results_;
};

std::vector<Word> words_up_to(std::size_t max_length) {
    std::vector<Word> out;
    for (std::size_t n = 0; n <= max_length; ++n)
        for (const Word& w : all_words(n)) out.push_back(w);
    return out;
}

std::vector<Word> admissible_up_to(std::size_t max_weight) {
    std::vector<Word> out;
    for (std::size_t n = 2; n <= max_weight; ++n)
        for (const Word& w : admissible_words(n)) out.push_back(w);
    return out;
}

void compositions_of(std::size_t weight, std::vector<int>& prefix, std::vector<Composition>& out) {
    for (std::size_t part = 1; part <= weight; ++part) {
        prefix.push_back(static_cast<int>(part));
        if (part == weight) {
            if (part >= 2) out.emplace_back(prefix);
        } else {
            compositions_of(weight - part, prefix, out);
        }
        prefix.pop_back();
    }
}

std::vector<Composition> compositions_up_to(std::size_t max_weight) {
    std::vector<Composition> out;
    std::vector<int> prefix;
    for (std::size_t n = 2; n <= max_weight; ++n) compositions_of(n, prefix, out);
    return out;
}

Word random_word(std::mt19937& rng, std::size_t length) {
    std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << length) - 1);
    return Word::from_bits(length == 0 ? 0 : bits(rng), length);
}

Word random_admissible(std::mt19937& rng, std::size_t weight) {
    return Word("0") + random_word(rng, weight - 2) + Word("1");
}

std::vector<CheckResult> codec_suite() {
    Checks checks;
    std::size_t compositions = 0, bad_compositions = 0;
    for (const Composition& c : compositions_up_to(10)) {
        ++compositions;
        const Word w = word_from_composition(c);
        if (!(composition_from_word(w) == c) || !w.admissible() || w.size() != c.weight()) ++bad_compositions;
    }
    checks.expect("composition -> word -> composition, weight <= 10", bad_compositions == 0,
                  std::to_string(bad_compositions) + " of " + std::to_string(compositions) + " failed");

    const auto words = admissible_up_to(10);
    std::size_t bad_words = 0, bad_dual = 0;
    for (const Word& w : words) {
        if (!(word_from_composition(composition_from_word(w)) == w)) ++bad_words;
        const Word d = dual_word(w);
        if (!d.admissible() || !(dual_word(d) == w) || w.depth() + d.depth() != w.weight()) ++bad_dual;
    }
    checks.expect("word -> composition -> word, weight <= 10", bad_words == 0, std::to_string(bad_words) + " failed");
    checks.expect("composition count equals admissible word count", compositions == words.size(),
                  std::to_string(compositions) + " vs " + std::to_string(words.size()));
    checks.expect("dual is an admissible involution with depth(w) + depth(dual w) = weight", bad_dual == 0,
                  std::to_string(bad_dual) + " failed");
    return checks.take();
}

std::vector<CheckResult> shuffle_suite() {
    Checks checks;
    const auto small = words_up_to(5);
    std::size_t bad_mass = 0;
    for (const Word& u : small)
        for (const Word& v : small) {
            Rational mass = 0;
            const WordSum s = shuffle(u, v);
            for (const auto& [w, c] : s) mass += c;
            if (mass != Rational(binomial(u.size() + v.size(), u.size())) || !s.homogeneous()) ++bad_mass;
        }
    checks.expect("coefficient mass equals binomial(|u|+|v|, |u|), |u|,|v| <= 5", bad_mass == 0,
                  std::to_string(bad_mass) + " pairs failed");

    std::mt19937 rng(20240517);
    std::uniform_int_distribution<std::size_t> length(0, 5);
    std::size_t bad_algebra = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const WordSum a(random_word(rng, length(rng))), b(random_word(rng, length(rng))),
            c(random_word(rng, length(rng)));
        if (!(shuffle(a, b) == shuffle(b, a))) ++bad_algebra;
        if (!(shuffle(shuffle(a, b), c) == shuffle(a, shuffle(b, c)))) ++bad_algebra;
    }
    checks.expect("shuffle commutative and associative on random triples", bad_algebra == 0,
                  std::to_string(bad_algebra) + " failures");

    const auto admissible = admissible_up_to(8);
    std::size_t bad_closure = 0;
    for (const Word& u : admissible) {
        if (u.size() < 8) {
            if (!prepend_word(WordSum(u)).all_admissible() || !append_word(WordSum(u)).all_admissible()) ++bad_closure;
        }
        for (const Word& v : admissible)
            if (u.size() + v.size() <= 8 && !shuffle(u, v).all_admissible()) ++bad_closure;
    }
    checks.expect("shuffle, prepend, append preserve admissibility, weight <= 8", bad_closure == 0,
                  std::to_string(bad_closure) + " failures");
    return checks.take();
}

std::vector<CheckResult> lyndon_suite() {
    Checks checks;
    std::size_t bad_radford = 0, bad_factorization = 0;
    for (std::size_t n = 1; n <= 8; ++n)
        for (const Word& w : all_words(n)) {
            const auto fact = chen_fox_lyndon(w);
            if (!fact.valid() || !(fact.word() == w)) ++bad_factorization;
            const WordSum expansion = radford_expand(fact);
            if (expansion.terms().rbegin()->first != w || expansion.coefficient(w) != 1) ++bad_radford;
            for (const auto& [u, c] : expansion)
                if (c <= 0) ++bad_radford;
        }
    checks.expect("Chen-Fox-Lyndon factorization valid, length <= 8", bad_factorization == 0,
                  std::to_string(bad_factorization) + " failures");
    checks.expect("Radford expansion triangular with leading coefficient 1, length <= 8", bad_radford == 0,
                  std::to_string(bad_radford) + " failures");

    std::size_t bad_reconstruction = 0;
    for (const Word& w : admissible_up_to(8)) {
        const auto d = lyndon_basis_decompose(w);
        bool ok = d.expand() == WordSum(w);
        for (const auto& [multiset, c] : d.terms)
            for (const Word& l : multiset) ok = ok && is_lyndon(l) && l.size() >= 2;
        if (!ok) ++bad_reconstruction;
    }
    checks.expect("Lyndon basis decomposition reconstructs every admissible word, weight <= 8",
                  bad_reconstruction == 0, std::to_string(bad_reconstruction) + " failures");

    std::size_t bad_len2 = 0, bad_00_11 = 0;
    for (std::size_t n = 2; n <= 10; ++n)
        for (const Word& w : all_words(n)) {
            if (!is_lyndon(w)) continue;
            if (!w.admissible()) ++bad_len2;
            if (n >= 3 && !(w[0] == 0 && w[1] == 0) && !(w[n - 2] == 1 && w[n - 1] == 1)) ++bad_00_11;
        }
    checks.expect("Lyndon words of length >= 2 start with 0 and end with 1, length <= 10", bad_len2 == 0,
                  std::to_string(bad_len2) + " counterexamples");
    checks.expect("Lyndon words of length >= 3 start with 00 or end with 11, length <= 10", bad_00_11 == 0,
                  std::to_string(bad_00_11) + " counterexamples");

    std::size_t bad_factors = 0;
    for (const Word& w : admissible_up_to(10))
        for (const auto& f : chen_fox_lyndon(w).factors)
            if (f.word.size() < 2) ++bad_factors;
    checks.expect("factorizations of admissible words avoid the letters 0 and 1, weight <= 10", bad_factors == 0,
                  std::to_string(bad_factors) + " counterexamples");
    return checks.take();
}

std::vector<CheckResult> pipeline_suite() {
    Checks checks;
    std::size_t count = 0, bad = 0;
    std::string first_failure;
    for (const Word& w : admissible_up_to(8)) {
        ++count;
        const TreeSum trees = decompose_word(w);
        if (!(tree_words(trees) == WordSum(w)) || trees.weight() != w.size()) {
            if (bad++ == 0) first_failure = w.str();
        }
    }
    checks.expect("I(decompose_word(w)) = w for all admissible words of weight 2..8", bad == 0 && count == 127,
                  std::to_string(bad) + " of " + std::to_string(count) + " failed, first " + first_failure);

    const SyntaxTree e = SyntaxTree::leaf();
    TreeSum worked(SyntaxTree::append(SyntaxTree::join(e, e)), Rational(1, 2));
    worked.add(append_power(SyntaxTree::prepend(e), 2), -2);
    checks.expect("1/2 I(q(e*e)) - 2 I(q(q(p(e)))) = 01011", tree_words(worked) == WordSum(Word("01011")));
    return checks.take();
}

std::vector<CheckResult> weight5_suite(double tol) {
    Checks checks;
    const auto obstruction = weight5_obstruction(std::min(tol, 1e-9));
    const char* expected[8] = {
        "1 00001\n",
        "1 00011\n",
        "4 00011\n2 00101\n",
        "6 00011\n3 00101\n1 01001\n",
        "1 01111\n",
        "1 00111\n",
        "4 00111\n2 01011\n",
        "6 00111\n3 01011\n1 01101\n",
    };
    for (std::size_t i = 0; i < 8; ++i) {
        const auto& row = obstruction.rows[i];
        const std::string got = format_word_sum(row.words);
        checks.expect("I(" + row.tree.str() + ")", got == expected[i], "got " + got);
    }
    for (std::size_t i = 0; i < 4; ++i) {
        WordSum dual;
        for (const auto& [w, c] : obstruction.rows[i].words) dual.add(dual_word(w), c);
        checks.expect("row " + std::to_string(i + 5) + " is the dual of row " + std::to_string(i + 1),
                      dual == obstruction.rows[i + 4].words);
    }
    const std::array<std::array<int, 2>, 4> mod2{{{0, 0}, {1, 1}, {0, 0}, {1, 1}}};
    checks.expect("matrix mod 2 is [[0,0],[1,1],[0,0],[1,1]]", obstruction.matrix_mod2 == mod2);
    checks.expect("rank mod 2 is 1", obstruction.rank_mod2 == 1, "rank " + std::to_string(obstruction.rank_mod2));
    for (std::size_t i = 0; i < 4; ++i)
        checks.expect("matrix row " + std::to_string(i + 1) + " numerically within 1e-6",
                      obstruction.residuals[i] <= 1e-6, "residual " + std::to_string(obstruction.residuals[i]));
    return checks.take();
}

std::vector<CheckResult> certificates_suite() {
    Checks checks;
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL}) {
        const Certificate cert = unit_fraction_certificate(p);
        const Rational value = certificate_value(cert);
        checks.expect("certificate for 1/" + std::to_string(p), check_certificate(cert),
                      "evaluates to " + format_rational(value));
    }
    return checks.take();
}

std::vector<CheckResult> numeric_suite(double tol) {
    Checks checks;
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> weight_a(2, 6);
    double worst = 0.0;
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t na = weight_a(rng);
        std::uniform_int_distribution<std::size_t> weight_b(2, 8 - na);
        const Word u = random_admissible(rng, na), v = random_admissible(rng, weight_b(rng));
        const auto product = eval_word(u, tol).value * eval_word(v, tol).value;
        worst = std::max(worst, std::abs(product - eval_word_sum(shuffle(u, v), tol).value));
    }
    checks.expect("L(u) L(v) = L(u sh v), 30 random pairs, weight <= 8", worst <= 1e-6,
                  "worst deviation " + std::to_string(worst));

    double worst_dual = 0.0, worst_parity = 0.0;
    for (const Word& w : admissible_up_to(6)) {
        const auto value = eval_word(w, tol);
        const double sign = w.size() % 2 == 0 ? 1.0 : -1.0;
        worst_dual = std::max(worst_dual, std::abs(value.value - sign * eval_word(dual_word(w), tol).value));
        worst_parity = std::max(worst_parity, w.size() % 2 == 0 ? std::fabs(value.value.imag()) : std::fabs(value.value.real()));
    }
    checks.expect("L(w) = (-1)^|w| L(dual w), weight <= 6", worst_dual <= 1e-6,
                  "worst deviation " + std::to_string(worst_dual));
    checks.expect("even weight real, odd weight imaginary", worst_parity <= tol,
                  "worst stray component " + std::to_string(worst_parity));

    for (unsigned k = 1; k <= 4; ++k) {
        const Word w = Word::from_bits(1, 2 * k);
        const double lhs = 2.0 * factorial(2 * k).get_d() * eval_word(w, tol).value.real();
        const double rhs = bernoulli(2 * k).get_d();
        checks.expect("2 (2k)! L(0^{2k-1}1) = B_2k for k = " + std::to_string(k), std::fabs(lhs - rhs) <= 1e-8,
                      std::to_string(lhs) + " vs " + std::to_string(rhs));
    }

    std::mt19937 sample_rng(11);
    auto compositions = compositions_up_to(6);
    std::shuffle(compositions.begin(), compositions.end(), sample_rng);
    compositions.erase(compositions.begin() + 20, compositions.end());
    double worst_square = 0.0;
    for (const Composition& c : compositions) {
        const auto d = decompose_mzv(c);
        const auto via_trees = eval_word_sum(tree_words(d.trees), tol).value;
        worst_square = std::max(worst_square, std::abs(via_trees - eval_word(d.word, tol).value));
    }
    checks.expect("value of decompose_mzv(c) matches L(word(c)), 20 compositions of weight <= 6",
                  worst_square <= 1e-6, "worst deviation " + std::to_string(worst_square));
    return checks.take();
}

}  // namespace

std::vector<std::string> verify_suite_names() {
    return {"codec", "shuffle", "lyndon", "pipeline", "weight5", "certificates", "numeric"};
}

std::vector<CheckResult> run_verify_suite(std::string_view name, double tol) {
    if (name == "codec") return codec_suite();
    if (name == "shuffle") return shuffle_suite();
    if (name == "lyndon") return lyndon_suite();
    if (name == "pipeline") return pipeline_suite();
    if (name == "weight5") return weight5_suite(tol);
    if (name == "certificates") return certificates_suite();
    if (name == "numeric") return numeric_suite(tol);
    throw std::invalid_argument("unknown verify suite '" + std::string(name) + "'");
}

}  // namespace mzvgraph
