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

#ifndef MZVGRAPH_TREES_HPP
#define MZVGRAPH_TREES_HPP

#include "mzvgraph/words.hpp"

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mzvgraph {

/* Element of the syntax-tree algebra: the leaf e (one ladder rung), the
 * unary operations p (prepend a wedge) and q (append a wedge), and the
 * commutative, associative join *.
 *
 * Trees built through leaf/prepend/append/join are always canonical: joins
 * are flattened and their children sorted. make() builds an arbitrary tree
 * without normalizing it, for input that canonicalize() then cleans up.
 */
class SyntaxTree {
public:
    enum class Kind { leaf, prepend, append, join };  // declaration order is the sort order

    static SyntaxTree leaf();
    static SyntaxTree prepend(SyntaxTree child);
    static SyntaxTree append(SyntaxTree child);
    static SyntaxTree join(SyntaxTree lhs, SyntaxTree rhs);
    /// Canonical join of two or more trees; throws std::invalid_argument on fewer.
    static SyntaxTree join(std::vector<SyntaxTree> children);
    /// Unnormalized node.
    static SyntaxTree make(Kind kind, std::vector<SyntaxTree> children);

    Kind kind() const { return kind_; }
    const std::vector<SyntaxTree>& children() const { return children_; }
    /// Only child of a prepend/append node.
    const SyntaxTree& child() const { return children_.front(); }

    /// 2 per leaf plus 1 per prepend/append node.
    std::size_t weight() const { return weight_; }
    bool is_canonical() const;

    /// Minimal-parenthesis expression, e.g. "p(e*e)*q(e)".
    std::string str() const;

    friend std::strong_ordering operator<=>(const SyntaxTree& lhs, const SyntaxTree& rhs);
    friend bool operator==(const SyntaxTree& lhs, const SyntaxTree& rhs) { return (lhs <=> rhs) == 0; }

private:
    SyntaxTree(Kind kind, std::vector<SyntaxTree> children);

    Kind kind_ = Kind::leaf;
    std::vector<SyntaxTree> children_;
    std::size_t weight_ = 2;
};

/// Flattens nested joins and sorts join children. Idempotent.
/// Throws std::invalid_argument for a join with fewer than two children
/// or a prepend/append node without exactly one child.
SyntaxTree canonicalize(const SyntaxTree& t);

/// Apply p or q n times.
SyntaxTree prepend_power(SyntaxTree t, std::size_t n);
SyntaxTree append_power(SyntaxTree t, std::size_t n);

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t position);
    /// 0-based offset into the parsed text.
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Grammar: t ::= e | p(t) | q(t) | t * t | (t), '*' left-associative,
/// whitespace ignored. Returns the canonical tree; throws ParseError.
SyntaxTree parse_tree(std::string_view text);

/// Q-linear combination of canonical trees.
class TreeSum {
public:
    using Terms = std::map<SyntaxTree, Rational>;

    TreeSum() = default;
    explicit TreeSum(const SyntaxTree& t, const Rational& coefficient = 1);

    void add(const SyntaxTree& t, const Rational& coefficient);
    Rational coefficient(const SyntaxTree& t) const;

    const Terms& terms() const { return terms_; }
    Terms::const_iterator begin() const { return terms_.begin(); }
    Terms::const_iterator end() const { return terms_.end(); }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    std::optional<std::size_t> weight() const;
    bool homogeneous() const { return empty() || weight().has_value(); }

    TreeSum& operator+=(const TreeSum& other);
    TreeSum& operator-=(const TreeSum& other);
    TreeSum& operator*=(const Rational& scale);
    friend TreeSum operator+(TreeSum lhs, const TreeSum& rhs) { return lhs += rhs; }
    friend TreeSum operator-(TreeSum lhs, const TreeSum& rhs) { return lhs -= rhs; }
    friend TreeSum operator*(TreeSum lhs, const Rational& s) { return lhs *= s; }
    friend TreeSum operator*(const Rational& s, TreeSum rhs) { return rhs *= s; }
    friend bool operator==(const TreeSum&, const TreeSum&) = default;

private:
    Terms terms_;
};

TreeSum prepend(const TreeSum& s);
TreeSum append(const TreeSum& s);
/// Bilinear join.
TreeSum join(const TreeSum& a, const TreeSum& b);

/// "<rational> <tree-expr>" per line.
std::string format_tree_sum(const TreeSum& s);
TreeSum parse_tree_sum(std::string_view text);

/* The ring and module homomorphism from trees to words:
 *   e -> 01, p(t) -> 0.I(t), q(t) -> I(t).1, t1*t2 -> I(t1) sh I(t2).
 * Results for canonical subtrees are cached process-wide.
 */
WordSum tree_words(const SyntaxTree& t);
WordSum tree_words(const TreeSum& s);

}  // namespace mzvgraph

#endif  // MZVGRAPH_TREES_HPP
