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

#include "mzvgraph/words.hpp"

#include <map>
#include <random>
#include <stdexcept>
#include <string>

using namespace mzvgraph;

namespace {

// Enumerates every interleaving explicitly, one string at a time.
void interleavings(const std::string& u, const std::string& v, std::string prefix, std::map<std::string, long>& out) {
    if (u.empty() && v.empty()) {
        ++out[prefix];
        return;
    }
    if (!u.empty()) interleavings(u.substr(1), v, prefix + u[0], out);
    if (!v.empty()) interleavings(u, v.substr(1), prefix + v[0], out);
}

WordSum brute_shuffle(const std::string& u, const std::string& v) {
    std::map<std::string, long> counts;
    interleavings(u, v, "", counts);
    WordSum s;
    for (const auto& [w, n] : counts) s.add(Word(w), Rational(n));
    return s;
}

std::string random_word(std::mt19937& rng, std::size_t n) {
    std::string s;
    for (std::size_t i = 0; i < n; ++i) s += static_cast<char>('0' + rng() % 2);
    return s;
}

}  // namespace

TEST_CASE("word construction and accessors") {
    Word w("01011");
    CHECK(w.size() == 5);
    CHECK(w.depth() == 3);
    CHECK(w.front() == 0);
    CHECK(w.back() == 1);
    CHECK(w[1] == 1);
    CHECK(w.admissible());
    CHECK(w.str() == "01011");
    CHECK(w.reversed().str() == "11010");
    CHECK(w.substr(1, 3).str() == "101");
    CHECK(w.with_prefix(0).str() == "001011");
    CHECK(w.with_suffix(1).str() == "010111");
    CHECK((Word("01") + Word("001")).str() == "01001");
    CHECK(Word().empty());

    CHECK_FALSE(Word("0").admissible());
    CHECK_FALSE(Word("10").admissible());
    CHECK_FALSE(Word("0110").admissible());
    CHECK_THROWS_AS(Word("012"), std::invalid_argument);
    CHECK_THROWS_AS(Word(std::string(65, '0')), std::length_error);
}

TEST_CASE("word order is lexicographic with prefixes first") {
    CHECK(Word("0") < Word("01"));
    CHECK(Word("01") < Word("1"));
    CHECK(Word("0011") < Word("01"));
    CHECK(Word("011") > Word("0101"));
    CHECK(Word("") < Word("0"));
}

TEST_CASE("composition codec") {
    CHECK(word_from_composition(Composition::parse("1,2,2")).str() == "01011");
    CHECK(word_from_composition(Composition::parse("2")).str() == "01");
    CHECK(word_from_composition(Composition::parse("3")).str() == "001");
    CHECK(word_from_composition(Composition::parse("2,3")).str() == "00101");
    CHECK(composition_from_word(Word("01011")).str() == "1,2,2");
    CHECK(composition_from_word(Word("0011")).str() == "1,3");

    CHECK_THROWS_AS(Composition::parse("1,1"), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("0,2"), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("2,,3"), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("a"), std::invalid_argument);
    CHECK_THROWS_AS(composition_from_word(Word("0110")), std::invalid_argument);

    for (std::size_t n = 2; n <= 10; ++n)
        for (const Word& w : admissible_words(n)) {
            const Composition c = composition_from_word(w);
            CHECK(c.weight() == n);
            CHECK(c.depth() == w.depth());
            CHECK(word_from_composition(c) == w);
        }
}

TEST_CASE("admissible word counts") {
    for (std::size_t n = 2; n <= 12; ++n) CHECK(admissible_words(n).size() == (std::size_t{1} << (n - 2)));
    CHECK(all_words(4).size() == 16);
    CHECK(admissible_words(1).empty());
}

TEST_CASE("shuffle worked example") {
    WordSum expected;
    expected.add(Word("000111"), 9);
    expected.add(Word("001011"), 5);
    expected.add(Word("001101"), 2);
    expected.add(Word("010011"), 2);
    expected.add(Word("010101"), 1);
    expected.add(Word("011001"), 1);
    CHECK(shuffle(Word("011"), Word("001")) == expected);

    WordSum square;
    square.add(Word("0011"), 4);
    square.add(Word("0101"), 2);
    CHECK(shuffle(Word("01"), Word("01")) == square);
}

TEST_CASE("shuffle matches brute-force interleavings") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 150; ++trial) {
        const std::string u = random_word(rng, 1 + rng() % 5);
        const std::string v = random_word(rng, 1 + rng() % 5);
        CAPTURE(u);
        CAPTURE(v);
        CHECK(shuffle(Word(u), Word(v)) == brute_shuffle(u, v));
    }
    CHECK(shuffle(Word(), Word("01")) == WordSum(Word("01")));
}

TEST_CASE("shuffle coefficient mass is a binomial") {
    for (std::size_t a = 1; a <= 5; ++a)
        for (std::size_t b = 1; b <= 5; ++b)
            for (const Word& u : all_words(a))
                for (const Word& v : {Word::from_bits(0b0110 & ((1u << b) - 1), b), Word::from_bits((1u << b) - 1, b)}) {
                    Rational mass = 0;
                    for (const auto& term : shuffle(u, v)) mass += term.second;
                    CHECK(mass == Rational(binomial(a + b, a)));
                }
}

TEST_CASE("word sum arithmetic and serialization") {
    WordSum s;
    s.add(Word("01"), Rational(1, 2));
    s.add(Word("0011"), -2);
    CHECK_FALSE(s.homogeneous());
    s.add(Word("01"), Rational(-1, 2));
    CHECK(s.size() == 1);
    CHECK(s.homogeneous());
    CHECK(s.weight() == 4u);

    WordSum t = parse_word_sum("1/2 0101\n-3 0011\n");
    CHECK(t.coefficient(Word("0101")) == Rational(1, 2));
    CHECK(format_word_sum(t) == "-3 0011\n1/2 0101\n");
    CHECK(parse_word_sum(format_word_sum(t)) == t);
    CHECK((t - t).empty());
    CHECK(((t * Rational(2)) + t).coefficient(Word("0011")) == -9);
    CHECK_THROWS_AS(parse_word_sum("x 01\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word_sum("1/0 01\n"), std::invalid_argument);
}

TEST_CASE("prepend and append on sums") {
    const WordSum s = shuffle(Word("01"), Word("01"));
    const WordSum p = prepend_word(s);
    const WordSum q = append_word(s);
    CHECK(p.coefficient(Word("00011")) == 4);
    CHECK(q.coefficient(Word("01011")) == 2);
    CHECK(p.all_admissible());
    CHECK(q.all_admissible());
}

TEST_CASE("dual word") {
    CHECK(dual_word(Word("01")).str() == "01");
    CHECK(dual_word(Word("001")).str() == "011");
    CHECK(dual_word(Word("0001")).str() == "0111");
    CHECK(dual_word(Word("00101")).str() == "01011");
    CHECK_THROWS_AS(dual_word(Word("10")), std::invalid_argument);
    for (std::size_t n = 2; n <= 9; ++n)
        for (const Word& w : admissible_words(n)) {
            const Word d = dual_word(w);
            CHECK(d.admissible());
            CHECK(dual_word(d) == w);
            CHECK(w.depth() + d.depth() == n);
        }
}
