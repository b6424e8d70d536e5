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

#include "mzvgraph/trees.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace mzvgraph {

SyntaxTree::SyntaxTree(Kind kind, std::vector<SyntaxTree> children)
    : kind_(kind), children_(std::move(children)), weight_(0) {
    switch (kind_) {
        case Kind::leaf: weight_ = 2; break;
        case Kind::prepend:
        case Kind::append: weight_ = 1; break;
        case Kind::join: break;
    }
    for (const auto& c : children_) weight_ += c.weight_;
}

SyntaxTree SyntaxTree::leaf() { return SyntaxTree(Kind::leaf, {}); }

SyntaxTree SyntaxTree::prepend(SyntaxTree child) { return SyntaxTree(Kind::prepend, {std::move(child)}); }

SyntaxTree SyntaxTree::append(SyntaxTree child) { return SyntaxTree(Kind::append, {std::move(child)}); }

SyntaxTree SyntaxTree::join(SyntaxTree lhs, SyntaxTree rhs) {
    std::vector<SyntaxTree> children;
    children.push_back(std::move(lhs));
    children.push_back(std::move(rhs));
    return join(std::move(children));
}

SyntaxTree SyntaxTree::join(std::vector<SyntaxTree> children) {
    if (children.size() < 2) throw std::invalid_argument("join needs at least two children");
    std::vector<SyntaxTree> flat;
    for (auto& c : children) {
        if (c.kind_ == Kind::join) {
            for (auto& g : c.children_) flat.push_back(std::move(g));
        } else {
            flat.push_back(std::move(c));
        }
    }
    std::sort(flat.begin(), flat.end());
    return SyntaxTree(Kind::join, std::move(flat));
}

SyntaxTree SyntaxTree::make(Kind kind, std::vector<SyntaxTree> children) {
    return SyntaxTree(kind, std::move(children));
}

bool SyntaxTree::is_canonical() const {
    switch (kind_) {
        case Kind::leaf: return children_.empty();
        case Kind::prepend:
        case Kind::append: return children_.size() == 1 && children_.front().is_canonical();
        case Kind::join:
            if (children_.size() < 2 || !std::is_sorted(children_.begin(), children_.end())) return false;
            return std::all_of(children_.begin(), children_.end(),
                               [](const SyntaxTree& c) { return c.kind_ != Kind::join && c.is_canonical(); });
    }
    return false;
}

std::string SyntaxTree::str() const {
    switch (kind_) {
        case Kind::leaf: return "e";
        case Kind::prepend: return "p(" + child().str() + ")";
        case Kind::append: return "q(" + child().str() + ")";
        case Kind::join: {
            std::string s;
            for (std::size_t i = 0; i < children_.size(); ++i) {
                if (i) s += '*';
                // A non-canonical nested join needs parentheses to reparse to the same shape.
                bool wrap = children_[i].kind_ == Kind::join;
                s += wrap ? "(" + children_[i].str() + ")" : children_[i].str();
            }
            return s;
        }
    }
    return {};
}

std::strong_ordering operator<=>(const SyntaxTree& lhs, const SyntaxTree& rhs) {
    if (lhs.kind_ != rhs.kind_) return lhs.kind_ <=> rhs.kind_;
    return std::lexicographical_compare_three_way(lhs.children_.begin(), lhs.children_.end(),
                                                  rhs.children_.begin(), rhs.children_.end());
}

SyntaxTree canonicalize(const SyntaxTree& t) {
    using Kind = SyntaxTree::Kind;
    switch (t.kind()) {
        case Kind::leaf:
            if (!t.children().empty()) throw std::invalid_argument("leaf with children");
            return SyntaxTree::leaf();
        case Kind::prepend:
        case Kind::append: {
            if (t.children().size() != 1) throw std::invalid_argument("p/q node must have exactly one child");
            SyntaxTree c = canonicalize(t.child());
            return t.kind() == Kind::prepend ? SyntaxTree::prepend(std::move(c)) : SyntaxTree::append(std::move(c));
        }
        case Kind::join: {
            if (t.children().size() < 2) throw std::invalid_argument("join node with fewer than two children");
            std::vector<SyntaxTree> children;
            for (const auto& c : t.children()) children.push_back(canonicalize(c));
            return SyntaxTree::join(std::move(children));
        }
    }
    throw std::logic_error("unreachable tree kind");
}

SyntaxTree prepend_power(SyntaxTree t, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) t = SyntaxTree::prepend(std::move(t));
    return t;
}

SyntaxTree append_power(SyntaxTree t, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) t = SyntaxTree::append(std::move(t));
    return t;
}

// ---------------------------------------------------------------------------

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

class TreeParser {
public:
    explicit TreeParser(std::string_view text) : text_(text) {}

    SyntaxTree parse() {
        SyntaxTree t = expression();
        skip_space();
        if (pos_ < text_.size()) {
            if (text_[pos_] == ')') throw ParseError("unbalanced ')'", pos_);
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        }
        return t;
    }

private:
    SyntaxTree expression() {
        SyntaxTree lhs = term();
        while (accept('*')) lhs = SyntaxTree::join(std::move(lhs), term());
        return lhs;
    }

    SyntaxTree term() {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError("expected a tree expression", pos_);
        const std::size_t start = pos_;
        const char c = text_[pos_];
        if (c == 'e') {
            ++pos_;
            return SyntaxTree::leaf();
        }
        if (c == 'p' || c == 'q') {
            ++pos_;
            expect_open();
            SyntaxTree inner = expression();
            expect_close(start);
            return c == 'p' ? SyntaxTree::prepend(std::move(inner)) : SyntaxTree::append(std::move(inner));
        }
        if (c == '(') {
            ++pos_;
            SyntaxTree inner = expression();
            expect_close(start);
            return inner;
        }
        throw ParseError(std::string("unknown token '") + c + "'", pos_);
    }

    void expect_open() {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != '(') throw ParseError("expected '('", pos_);
        ++pos_;
    }

    void expect_close(std::size_t opened_at) {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError("unbalanced '(' opened at " + std::to_string(opened_at), pos_);
        if (text_[pos_] != ')') throw ParseError(std::string("expected ')' but found '") + text_[pos_] + "'", pos_);
        ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

SyntaxTree parse_tree(std::string_view text) { return TreeParser(text).parse(); }

// ---------------------------------------------------------------------------

TreeSum::TreeSum(const SyntaxTree& t, const Rational& coefficient) { add(t, coefficient); }

void TreeSum::add(const SyntaxTree& t, const Rational& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(t.is_canonical() ? t : canonicalize(t), coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational TreeSum::coefficient(const SyntaxTree& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<std::size_t> TreeSum::weight() const {
    if (terms_.empty()) return std::nullopt;
    std::size_t n = terms_.begin()->first.weight();
    for (const auto& [t, c] : terms_)
        if (t.weight() != n) return std::nullopt;
    return n;
}

TreeSum& TreeSum::operator+=(const TreeSum& other) {
    for (const auto& [t, c] : other.terms_) add(t, c);
    return *this;
}

TreeSum& TreeSum::operator-=(const TreeSum& other) {
    for (const auto& [t, c] : other.terms_) add(t, -c);
    return *this;
}

TreeSum& TreeSum::operator*=(const Rational& scale) {
    if (scale == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [t, c] : terms_) c *= scale;
    return *this;
}

TreeSum prepend(const TreeSum& s) {
    TreeSum result;
    for (const auto& [t, c] : s) result.add(SyntaxTree::prepend(t), c);
    return result;
}

TreeSum append(const TreeSum& s) {
    TreeSum result;
    for (const auto& [t, c] : s) result.add(SyntaxTree::append(t), c);
    return result;
}

TreeSum join(const TreeSum& a, const TreeSum& b) {
    TreeSum result;
    for (const auto& [ta, ca] : a)
        for (const auto& [tb, cb] : b) result.add(SyntaxTree::join(ta, tb), ca * cb);
    return result;
}

std::string format_tree_sum(const TreeSum& s) {
    std::string out;
    for (const auto& [t, c] : s) out += format_rational(c) + ' ' + t.str() + '\n';
    return out;
}

TreeSum parse_tree_sum(std::string_view text) {
    TreeSum sum;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto space = line.find_first_of(" \t", first);
        if (space == std::string::npos)
            throw std::invalid_argument("expected '<rational> <tree-expr>', got '" + line + "'");
        sum.add(parse_tree(line.substr(space + 1)), parse_rational(line.substr(first, space - first)));
    }
    return sum;
}

// ---------------------------------------------------------------------------

namespace {

class WordImageCache {
public:
    std::optional<WordSum> find(const SyntaxTree& t) const {
        std::shared_lock lock(mutex_);
        auto it = cache_.find(t);
        if (it == cache_.end()) return std::nullopt;
        return it->second;
    }

    void store(const SyntaxTree& t, const WordSum& s) {
        std::unique_lock lock(mutex_);
        cache_.emplace(t, s);
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<SyntaxTree, WordSum> cache_;
};

WordImageCache& word_image_cache() {
    static WordImageCache cache;
    return cache;
}

WordSum compute_tree_words(const SyntaxTree& t) {
    using Kind = SyntaxTree::Kind;
    switch (t.kind()) {
        case Kind::leaf: return WordSum(Word("01"));
        case Kind::prepend: return prepend_word(tree_words(t.child()));
        case Kind::append: return append_word(tree_words(t.child()));
        case Kind::join: {
            WordSum product = tree_words(t.children().front());
            for (std::size_t i = 1; i < t.children().size(); ++i)
                product = shuffle(product, tree_words(t.children()[i]));
            return product;
        }
    }
    throw std::logic_error("unreachable tree kind");
}

}  // namespace

WordSum tree_words(const SyntaxTree& t) {
    if (!t.is_canonical()) return tree_words(canonicalize(t));
    auto& cache = word_image_cache();
    if (auto hit = cache.find(t)) return *hit;
    WordSum result = compute_tree_words(t);
    cache.store(t, result);
    return result;
}

WordSum tree_words(const TreeSum& s) {
    WordSum total;
    for (const auto& [t, c] : s) total += tree_words(t) * c;
    return total;
}

}  // namespace mzvgraph
