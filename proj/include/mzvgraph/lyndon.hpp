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

#ifndef MZVGRAPH_LYNDON_HPP
#define MZVGRAPH_LYNDON_HPP

#include "mzvgraph/words.hpp"

#include <map>
#include <string>
#include <vector>

namespace mzvgraph {

struct LyndonFactor {
    Word word;
    std::size_t multiplicity = 1;

    friend bool operator==(const LyndonFactor&, const LyndonFactor&) = default;
};

/* Chen-Fox-Lyndon factorization l_1^{k_1} ... l_m^{k_m} with l_1 > ... > l_m. */
struct LyndonFactorization {
    std::vector<LyndonFactor> factors;

    /// Concatenation of the factors with multiplicity.
    Word word() const;
    /// True iff every factor is Lyndon, factors strictly decrease, multiplicities >= 1.
    bool valid() const;
    std::string str() const;

    friend bool operator==(const LyndonFactorization&, const LyndonFactorization&) = default;
};

/// Multiset of Lyndon words, stored sorted in decreasing order.
using LyndonMultiset = std::vector<Word>;

/* Q-linear combination of shuffle products of admissible Lyndon words. */
struct LyndonBasisDecomposition {
    std::map<LyndonMultiset, Rational> terms;

    /// Sum of coefficient * (shuffle of the multiset members).
    WordSum expand() const;
};

/// Throws std::invalid_argument on the empty word.
bool is_lyndon(const Word& w);

/// Duval's algorithm. Throws std::invalid_argument on the empty word.
LyndonFactorization chen_fox_lyndon(const Word& w);

/// (1 / k_1! ... k_m!) l_1^{sh k_1} sh ... sh l_m^{sh k_m}.
WordSum radford_expand(const LyndonFactorization& fact);

/// Throws std::invalid_argument on a non-admissible word.
LyndonBasisDecomposition lyndon_basis_decompose(const Word& w);

/// "<rational> [w1 ⧢ w2 ⧢ ...]" per line.
std::string format_decomposition(const LyndonBasisDecomposition& d);

}  // namespace mzvgraph

#endif  // MZVGRAPH_LYNDON_HPP
