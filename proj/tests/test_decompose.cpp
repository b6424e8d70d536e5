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

#include "mzvgraph/decompose.hpp"
#include "mzvgraph/numerics.hpp"

#include <cmath>

using namespace mzvgraph;

TEST_CASE("decompose_word on the worked example") {
    const TreeSum s = decompose_word(Word("01011"));
    CHECK(format_tree_sum(s) == "-2 q(p(q(e)))\n1/2 q(e*e)\n");
    CHECK(tree_words(s) == WordSum(Word("01011")));
    CHECK(tree_words(parse_tree("q(p(q(e)))")) == tree_words(parse_tree("q(q(p(e)))")));
}

TEST_CASE("decompose_word small cases") {
    CHECK(format_tree_sum(decompose_word(Word("01"))) == "1 e\n");
    CHECK(format_tree_sum(decompose_word(Word("001"))) == "1 p(e)\n");
    CHECK(format_tree_sum(decompose_word(Word("011"))) == "1 q(e)\n");
    CHECK(format_tree_sum(decompose_word(Word("0101"))) == "-2 p(q(e))\n1/2 e*e\n");
    CHECK_THROWS_AS(decompose_word(Word("0110")), std::invalid_argument);
}

TEST_CASE("decompose_word inverts the I map exhaustively") {
    for (std::size_t n = 2; n <= 9; ++n)
        for (const Word& w : admissible_words(n)) {
            const TreeSum s = decompose_word(w);
            CHECK(s.homogeneous());
            CHECK(s.weight() == n);
            CHECK(tree_words(s) == WordSum(w));
        }
}

TEST_CASE("decompose_mzv identity string") {
    const MzvDecomposition d = decompose_mzv(Composition::parse("1,2,2"));
    CHECK(d.word.str() == "01011");
    CHECK(d.sign == -1);
    CHECK(d.identity() == "-2*c(G(q(p(q(e))))) + 1/2*c(G(q(e*e))) = -zeta(1,2,2)/(2*pi*i)^5");
    CHECK(decompose_mzv(Composition::parse("2")).identity() == "1*c(G(e)) = -zeta(2)/(2*pi*i)^2");
    CHECK(decompose_mzv(Composition::parse("2,2")).sign == 1);
}

TEST_CASE("even zeta values are exact") {
    CHECK(even_zeta_value(tree_words(SyntaxTree::leaf())) == Rational(1, 24));
    CHECK(even_zeta_value(WordSum(Word("0001"))) == Rational(-1, 1440));
    CHECK(even_zeta_value(WordSum(Word("000001"))) == Rational(1, 60480));
    CHECK_FALSE(even_zeta_value(WordSum(Word("0011"))).has_value());
    CHECK_FALSE(even_zeta_value(WordSum(Word("001"))).has_value());
    for (unsigned k = 1; k <= 5; ++k) {
        const Word w = Word::from_bits(1, 2 * k);
        CHECK(std::fabs(even_zeta_value(WordSum(w))->get_d() - eval_word(w, 1e-12).value.real()) < 1e-12);
    }
}

TEST_CASE("unit fraction certificates") {
    const Certificate c2 = unit_fraction_certificate(2);
    REQUIRE(c2.terms.size() == 1);
    CHECK_FALSE(c2.terms[0].tree.has_value());
    CHECK(c2.terms[0].coefficient == -1);
    CHECK(certificate_json(unit_fraction_certificate(3)) ==
          R"({"target":"1/3","kind":"Z","terms":[{"coeff":"-1","gen":"wedge"},{"coeff":"-4","gen":"e"}]})");

    for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL}) {
        const Certificate c = unit_fraction_certificate(p);
        CAPTURE(p);
        CHECK(check_certificate(c));
        CHECK(certificate_value(c) == Rational(1, p));
        for (const auto& term : c.terms) CHECK(is_integer(term.coefficient));
    }
    CHECK_THROWS_AS(unit_fraction_certificate(9), std::invalid_argument);
    CHECK_THROWS_AS(unit_fraction_certificate(1), std::invalid_argument);
}

TEST_CASE("tampered certificates fail") {
    Certificate c = unit_fraction_certificate(5);
    c.terms.front().coefficient += 1;
    CHECK_FALSE(check_certificate(c));

    Certificate half = unit_fraction_certificate(3);
    half.terms.front().coefficient = Rational(1, 2);
    CHECK_FALSE(check_certificate(half));

    Certificate unknown{{{1, parse_tree("q(e)")}}, Rational(1, 3), CertificateKind::q_span};
    CHECK_FALSE(check_certificate(unknown));
    CHECK_THROWS_AS(certificate_value(unknown), std::domain_error);
}

TEST_CASE("primes") {
    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("weight five obstruction") {
    const Weight5Obstruction w = weight5_obstruction();
    REQUIRE(w.rows.size() == 8);
    CHECK(format_word_sum(w.rows[0].words) == "1 00001\n");
    CHECK(format_word_sum(w.rows[1].words) == "1 00011\n");
    CHECK(format_word_sum(w.rows[2].words) == "4 00011\n2 00101\n");
    CHECK(format_word_sum(w.rows[3].words) == "6 00011\n3 00101\n1 01001\n");
    CHECK(format_word_sum(w.rows[4].words) == "1 01111\n");
    CHECK(format_word_sum(w.rows[5].words) == "1 00111\n");
    CHECK(format_word_sum(w.rows[6].words) == "4 00111\n2 01011\n");
    CHECK(format_word_sum(w.rows[7].words) == "6 00111\n3 01011\n1 01101\n");

    const std::array<std::array<int, 2>, 4> mod2 = {{{0, 0}, {1, 1}, {0, 0}, {1, 1}}};
    CHECK(w.matrix_mod2 == mod2);
    CHECK(w.rank_mod2 == 1);
    for (double r : w.residuals) CHECK(r < 1e-6);
    for (double r : w.duality_residuals) CHECK(r < 1e-6);

    CHECK(rank_mod2({{1, 0}, {0, 1}}) == 2);
    CHECK(rank_mod2({{2, 4}, {6, 8}}) == 0);
    CHECK(rank_mod2({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}) == 2);
}
