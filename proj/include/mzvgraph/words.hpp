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

#ifndef MZVGRAPH_WORDS_HPP
#define MZVGRAPH_WORDS_HPP

#include "mzvgraph/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace mzvgraph {

/* A finite word over {0,1}, packed most-significant-letter first into a
 * single 64-bit field. Letter i (counted from the left) lives at bit
 * position size()-1-i, so words of equal length compare like integers.
 *
 * Ordering is the usual lexicographic order with 0 < 1 and a proper prefix
 * sorting before its extensions.
 */
class Word {
public:
    static constexpr std::size_t max_length = 64;

    Word() = default;

    /// From ASCII "0"/"1" text. Throws std::invalid_argument or std::length_error.
    explicit Word(std::string_view letters);

    static Word from_bits(std::uint64_t bits, std::size_t length);

    std::size_t size() const { return length_; }
    std::size_t weight() const { return length_; }
    bool empty() const { return length_ == 0; }
    std::uint64_t bits() const { return bits_; }

    /// Letter at position i (0 or 1), counted from the left.
    int operator[](std::size_t i) const {
        return static_cast<int>((bits_ >> (length_ - 1 - i)) & 1U);
    }
    int front() const { return (*this)[0]; }
    int back() const { return static_cast<int>(bits_ & 1U); }

    /// Starts with 0 and ends with 1.
    bool admissible() const { return length_ >= 2 && front() == 0 && back() == 1; }

    /// Number of 1 letters.
    std::size_t depth() const;

    Word with_prefix(int letter) const;
    Word with_suffix(int letter) const;
    Word substr(std::size_t pos, std::size_t count) const;
    Word reversed() const;

    std::string str() const;

    friend Word operator+(const Word& lhs, const Word& rhs);
    friend bool operator==(const Word& lhs, const Word& rhs) = default;
    friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs);

private:
    Word(std::uint64_t bits, std::size_t length) : bits_(bits), length_(length) {}

    std::uint64_t bits_ = 0;
    std::size_t length_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// Formal Q-linear combination of words; zero coefficients are never stored.
class WordSum {
public:
    using Terms = std::map<Word, Rational>;

    WordSum() = default;
    explicit WordSum(const Word& w, const Rational& coefficient = 1);

    void add(const Word& w, const Rational& coefficient);
    Rational coefficient(const Word& w) const;

    const Terms& terms() const { return terms_; }
    Terms::const_iterator begin() const { return terms_.begin(); }
    Terms::const_iterator end() const { return terms_.end(); }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    /// Common weight of all words, or nullopt if empty or mixed.
    std::optional<std::size_t> weight() const;
    bool homogeneous() const { return empty() || weight().has_value(); }
    bool all_admissible() const;

    WordSum& operator+=(const WordSum& other);
    WordSum& operator-=(const WordSum& other);
    WordSum& operator*=(const Rational& scale);

    friend WordSum operator+(WordSum lhs, const WordSum& rhs) { return lhs += rhs; }
    friend WordSum operator-(WordSum lhs, const WordSum& rhs) { return lhs -= rhs; }
    friend WordSum operator*(WordSum lhs, const Rational& s) { return lhs *= s; }
    friend WordSum operator*(const Rational& s, WordSum rhs) { return rhs *= s; }
    friend WordSum operator-(WordSum s) { return s *= -1; }
    friend bool operator==(const WordSum& lhs, const WordSum& rhs) = default;

private:
    Terms terms_;
};

/// "<rational> <word>" per line, in word order.
std::string format_word_sum(const WordSum& sum);
WordSum parse_word_sum(std::string_view text);

/// MZV index (n_1, ..., n_d) with all parts >= 1 and n_d >= 2.
class Composition {
public:
    /// Throws std::invalid_argument on an empty, non-positive or divergent index.
    explicit Composition(std::vector<int> parts);

    /// Comma-separated positive integers, e.g. "1,2,2".
    static Composition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t depth() const { return parts_.size(); }
    std::size_t weight() const;
    std::string str() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
};

/// (n_1..n_d) -> 0^{n_d-1}1 0^{n_{d-1}-1}1 ... 0^{n_1-1}1.
Word word_from_composition(const Composition& c);
Composition composition_from_word(const Word& w);

/// Shuffle product of two words; total length must not exceed Word::max_length.
WordSum shuffle(const Word& u, const Word& v);
/// Bilinear extension of shuffle.
WordSum shuffle(const WordSum& a, const WordSum& b);

WordSum prepend_word(const WordSum& s);
WordSum append_word(const WordSum& s);

/// Reverse, then complement every letter.
Word dual_word(const Word& w);

/// All admissible words of the given weight, in increasing order.
std::vector<Word> admissible_words(std::size_t weight);
/// All 2^n words of length n, in increasing order.
std::vector<Word> all_words(std::size_t length);

}  // namespace mzvgraph

template <>
struct std::hash<mzvgraph::Word> {
    std::size_t operator()(const mzvgraph::Word& w) const noexcept {
        return std::hash<std::uint64_t>{}(w.bits() * 0x9E3779B97F4A7C15ULL ^ w.size());
    }
};

#endif  // MZVGRAPH_WORDS_HPP
