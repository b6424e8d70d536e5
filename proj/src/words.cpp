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

#include "mzvgraph/words.hpp"

#include <bit>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace mzvgraph {

namespace {

std::uint64_t low_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

void check_length(std::size_t n) {
    if (n > Word::max_length)
        throw std::length_error("word length " + std::to_string(n) + " exceeds " +
                                std::to_string(Word::max_length));
}

}  // namespace

Word::Word(std::string_view letters) {
    check_length(letters.size());
    for (char c : letters) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("word must contain only 0 and 1, got '" + std::string(letters) + "'");
        bits_ = (bits_ << 1) | static_cast<std::uint64_t>(c - '0');
    }
    length_ = letters.size();
}

Word Word::from_bits(std::uint64_t bits, std::size_t length) {
    check_length(length);
    return Word(bits & low_mask(length), length);
}

std::size_t Word::depth() const { return static_cast<std::size_t>(std::popcount(bits_)); }

Word Word::with_prefix(int letter) const {
    check_length(length_ + 1);
    return Word(bits_ | (static_cast<std::uint64_t>(letter & 1) << length_), length_ + 1);
}

Word Word::with_suffix(int letter) const {
    check_length(length_ + 1);
    return Word((bits_ << 1) | static_cast<std::uint64_t>(letter & 1), length_ + 1);
}

Word Word::substr(std::size_t pos, std::size_t count) const {
    if (pos > length_) throw std::out_of_range("Word::substr position out of range");
    count = std::min(count, length_ - pos);
    if (count == 0) return Word{};
    return Word((bits_ >> (length_ - pos - count)) & low_mask(count), count);
}

Word Word::reversed() const {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < length_; ++i) r |= ((bits_ >> i) & 1U) << (length_ - 1 - i);
    return Word(r, length_);
}

std::string Word::str() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i) s[i] = static_cast<char>('0' + (*this)[i]);
    return s;
}

Word operator+(const Word& lhs, const Word& rhs) {
    check_length(lhs.length_ + rhs.length_);
    if (lhs.length_ == 0) return rhs;
    if (rhs.length_ == 0) return lhs;
    return Word((lhs.bits_ << rhs.length_) | rhs.bits_, lhs.length_ + rhs.length_);
}

std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) {
    std::size_t m = std::min(lhs.length_, rhs.length_);
    if (m > 0) {
        std::uint64_t a = lhs.bits_ >> (lhs.length_ - m);
        std::uint64_t b = rhs.bits_ >> (rhs.length_ - m);
        if (a != b) return a <=> b;
    }
    return lhs.length_ <=> rhs.length_;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

// ---------------------------------------------------------------------------

WordSum::WordSum(const Word& w, const Rational& coefficient) { add(w, coefficient); }

void WordSum::add(const Word& w, const Rational& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational WordSum::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<std::size_t> WordSum::weight() const {
    if (terms_.empty()) return std::nullopt;
    std::size_t n = terms_.begin()->first.size();
    for (const auto& [w, c] : terms_)
        if (w.size() != n) return std::nullopt;
    return n;
}

bool WordSum::all_admissible() const {
    for (const auto& [w, c] : terms_)
        if (!w.admissible()) return false;
    return true;
}

WordSum& WordSum::operator+=(const WordSum& other) {
    for (const auto& [w, c] : other.terms_) add(w, c);
    return *this;
}

WordSum& WordSum::operator-=(const WordSum& other) {
    for (const auto& [w, c] : other.terms_) add(w, -c);
    return *this;
}

WordSum& WordSum::operator*=(const Rational& scale) {
    if (scale == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= scale;
    return *this;
}

std::string format_word_sum(const WordSum& sum) {
    std::string out;
    for (const auto& [w, c] : sum) {
        out += format_rational(c);
        out += ' ';
        out += w.str();
        out += '\n';
    }
    return out;
}

WordSum parse_word_sum(std::string_view text) {
    WordSum sum;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string coeff, word, extra;
        if (!(fields >> coeff)) continue;
        if (!(fields >> word) || (fields >> extra))
            throw std::invalid_argument("expected '<rational> <word>', got '" + line + "'");
        sum.add(Word(word), parse_rational(coeff));
    }
    return sum;
}

// ---------------------------------------------------------------------------

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("composition must have at least one part");
    for (int n : parts_)
        if (n < 1) throw std::invalid_argument("composition parts must be positive");
    if (parts_.back() < 2) throw std::invalid_argument("divergent MZV: last part must be at least 2");
}

Composition Composition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        auto field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int value = 0;
        auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc{} || end != field.data() + field.size())
            throw std::invalid_argument("malformed composition '" + std::string(text) + "' at position " +
                                        std::to_string(pos));
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Composition(std::move(parts));
}

std::size_t Composition::weight() const {
    std::size_t total = 0;
    for (int n : parts_) total += static_cast<std::size_t>(n);
    return total;
}

std::string Composition::str() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Word word_from_composition(const Composition& c) {
    check_length(c.weight());
    Word w;
    for (auto it = c.parts().rbegin(); it != c.parts().rend(); ++it) {
        for (int k = 1; k < *it; ++k) w = w.with_suffix(0);
        w = w.with_suffix(1);
    }
    return w;
}

Composition composition_from_word(const Word& w) {
    if (!w.admissible())
        throw std::invalid_argument("word '" + w.str() + "' is not admissible (must start with 0 and end with 1)");
    std::vector<int> reversed_parts;
    int run = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 1) {
            reversed_parts.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    return Composition(std::vector<int>(reversed_parts.rbegin(), reversed_parts.rend()));
}

// ---------------------------------------------------------------------------

WordSum shuffle(const Word& u, const Word& v) {
    check_length(u.size() + v.size());
    // Counts are bounded by binomial(64, 32) < 2^63, so 64-bit integers are exact.
    using Counts = std::unordered_map<Word, std::uint64_t>;
    const std::size_t a = u.size(), b = v.size();

    auto prefixed = [](int letter, const Counts& src, Counts& dst) {
        for (const auto& [w, n] : src) dst[w.with_prefix(letter)] += n;
    };

    // row[j] holds the shuffle of u[i:] with v[j:]; rows are built from i = a down to 0.
    std::vector<Counts> row(b + 1), next(b + 1);
    for (std::size_t j = 0; j <= b; ++j) row[j] = Counts{{v.substr(j, b - j), 1}};
    for (std::size_t i = a; i-- > 0;) {
        next[b] = Counts{{u.substr(i, a - i), 1}};
        for (std::size_t j = b; j-- > 0;) {
            Counts cell;
            prefixed(u[i], row[j], cell);
            prefixed(v[j], next[j + 1], cell);
            next[j] = std::move(cell);
        }
        std::swap(row, next);
    }

    WordSum result;
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    for (const auto& [w, n] : row[0]) result.add(w, Rational(static_cast<unsigned long>(n)));
    return result;
}

WordSum shuffle(const WordSum& a, const WordSum& b) {
    WordSum result;
    for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b) {
            Rational scale = cu * cv;
            for (const auto& [w, c] : shuffle(u, v)) result.add(w, scale * c);
        }
    return result;
}

WordSum prepend_word(const WordSum& s) {
    WordSum result;
    for (const auto& [w, c] : s) result.add(w.with_prefix(0), c);
    return result;
}

WordSum append_word(const WordSum& s) {
    WordSum result;
    for (const auto& [w, c] : s) result.add(w.with_suffix(1), c);
    return result;
}

Word dual_word(const Word& w) {
    if (!w.admissible()) throw std::invalid_argument("dual of non-admissible word '" + w.str() + "'");
    Word r = w.reversed();
    return Word::from_bits(~r.bits(), r.size());
}

std::vector<Word> all_words(std::size_t length) {
    if (length >= 32) throw std::length_error("refusing to enumerate 2^" + std::to_string(length) + " words");
    std::vector<Word> words;
    words.reserve(std::size_t{1} << length);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << length); ++bits)
        words.push_back(Word::from_bits(bits, length));
    return words;
}

std::vector<Word> admissible_words(std::size_t weight) {
    std::vector<Word> words;
    if (weight < 2) return words;
    for (const Word& middle : all_words(weight - 2)) words.push_back(Word("0") + middle + Word("1"));
    return words;
}

}  // namespace mzvgraph
