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

#include "mzvgraph/lyndon.hpp"

#include <stdexcept>

namespace mzvgraph {

Word LyndonFactorization::word() const {
    Word w;
    for (const auto& f : factors)
        for (std::size_t k = 0; k < f.multiplicity; ++k) w = w + f.word;
    return w;
}

bool LyndonFactorization::valid() const {
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].multiplicity == 0 || factors[i].word.empty() || !is_lyndon(factors[i].word)) return false;
        if (i > 0 && !(factors[i].word < factors[i - 1].word)) return false;
    }
    return true;
}

std::string LyndonFactorization::str() const {
    std::string s;
    for (const auto& f : factors) {
        s += '(' + f.word.str() + ')';
        if (f.multiplicity != 1) s += '^' + std::to_string(f.multiplicity);
    }
    return s;
}

WordSum LyndonBasisDecomposition::expand() const {
    WordSum total;
    for (const auto& [multiset, coefficient] : terms) {
        WordSum product(Word{}, 1);
        for (const Word& l : multiset) product = shuffle(product, WordSum(l));
        total += product * coefficient;
    }
    return total;
}

bool is_lyndon(const Word& w) {
    if (w.empty()) throw std::invalid_argument("is_lyndon: empty word");
    for (std::size_t cut = 1; cut < w.size(); ++cut)
        if (!(w.substr(0, cut) < w.substr(cut, w.size() - cut))) return false;
    return true;
}

LyndonFactorization chen_fox_lyndon(const Word& w) {
    if (w.empty()) throw std::invalid_argument("chen_fox_lyndon: empty word");
    LyndonFactorization result;
    const std::size_t n = w.size();
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1, k = i;
        while (j < n && w[k] <= w[j]) {
            k = w[k] < w[j] ? i : k + 1;
            ++j;
        }
        const std::size_t period = j - k;
        while (i <= k) {
            Word factor = w.substr(i, period);
            if (!result.factors.empty() && result.factors.back().word == factor)
                ++result.factors.back().multiplicity;
            else
                result.factors.push_back({factor, 1});
            i += period;
        }
    }
    return result;
}

WordSum radford_expand(const LyndonFactorization& fact) {
    WordSum product(Word{}, 1);
    Integer denominator = 1;
    for (const auto& f : fact.factors) {
        for (std::size_t k = 0; k < f.multiplicity; ++k) product = shuffle(product, WordSum(f.word));
        denominator *= factorial(f.multiplicity);
    }
    return product * Rational(1, denominator);
}

LyndonBasisDecomposition lyndon_basis_decompose(const Word& w) {
    if (!w.admissible())
        throw std::invalid_argument("lyndon_basis_decompose: word '" + w.str() + "' is not admissible");
    LyndonBasisDecomposition result;
    WordSum pending(w);
    // Eliminate the greatest outstanding word; its Radford expansion only
    // introduces strictly smaller words of the same length.
    while (!pending.empty()) {
        const auto [top, coefficient] = *pending.terms().rbegin();
        const LyndonFactorization fact = chen_fox_lyndon(top);
        LyndonMultiset multiset;
        for (const auto& f : fact.factors) multiset.insert(multiset.end(), f.multiplicity, f.word);
        Rational& slot = result.terms[multiset];
        slot += coefficient;
        if (slot == 0) result.terms.erase(multiset);

        // top = radford(top) - lower, and radford(top) is the multiset term above.
        WordSum lower = radford_expand(fact);
        lower.add(top, -1);
        pending.add(top, -coefficient);
        pending -= lower * coefficient;
    }
    // Store coefficients against the plain shuffle product (no 1/k! factor).
    for (auto& [multiset, c] : result.terms) {
        Integer denominator = 1;
        std::size_t run = 1;
        for (std::size_t i = 1; i <= multiset.size(); ++i) {
            if (i < multiset.size() && multiset[i] == multiset[i - 1]) {
                ++run;
            } else {
                denominator *= factorial(run);
                run = 1;
            }
        }
        c /= denominator;
    }
    return result;
}

std::string format_decomposition(const LyndonBasisDecomposition& d) {
    std::string out;
    // Greatest multiset first, matching the factor order inside each term.
    for (auto it = d.terms.rbegin(); it != d.terms.rend(); ++it) {
        out += format_rational(it->second) + " [";
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            if (i) out += " ⧢ ";
            out += it->first[i].str();
        }
        out += "]\n";
    }
    return out;
}

}  // namespace mzvgraph
