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

#include "mzvgraph/decompose.hpp"

#include "mzvgraph/lyndon.hpp"
#include "mzvgraph/numerics.hpp"

#include "json.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace mzvgraph {

namespace {

class Decomposer {
public:
    TreeSum word(const Word& w) {
        if (auto it = memo_.find(w); it != memo_.end()) return it->second;
        TreeSum result;
        for (const auto& [multiset, coefficient] : lyndon_basis_decompose(w).terms) {
            TreeSum product = lyndon(multiset.front());
            for (std::size_t i = 1; i < multiset.size(); ++i) product = join(product, lyndon(multiset[i]));
            result += product * coefficient;
        }
        memo_.emplace(w, result);
        return result;
    }

private:
    TreeSum lyndon(const Word& l) {
        const std::size_t n = l.size();
        if (n == 2) return TreeSum(SyntaxTree::leaf());  // the only admissible length-2 word is 01
        if (l[0] == 0 && l[1] == 0) return prepend(word(l.substr(1, n - 1)));
        if (l[n - 2] == 1 && l[n - 1] == 1) return append(word(l.substr(0, n - 1)));
        throw std::logic_error("Lyndon word " + l.str() + " neither starts with 00 nor ends with 11");
    }

    std::map<Word, TreeSum> memo_;
};

std::string zeta_text(const Composition& c) { return "zeta(" + c.str() + ")"; }

}  // namespace

TreeSum decompose_word(const Word& w) {
    if (!w.admissible()) throw std::invalid_argument("decompose_word: word '" + w.str() + "' is not admissible");
    return Decomposer{}.word(w);
}

std::string MzvDecomposition::identity() const {
    std::string lhs;
    for (const auto& [t, c] : trees) {
        std::string coeff = format_rational(c);
        if (lhs.empty())
            lhs += coeff;
        else if (coeff.front() == '-')
            lhs += " - " + coeff.substr(1);
        else
            lhs += " + " + coeff;
        lhs += "*c(G(" + t.str() + "))";
    }
    return lhs + " = " + (sign < 0 ? "-" : "") + zeta_text(composition) + "/(2*pi*i)^" +
           std::to_string(composition.weight());
}

MzvDecomposition decompose_mzv(const Composition& c) {
    Word w = word_from_composition(c);
    TreeSum trees = decompose_word(w);
    return MzvDecomposition{c, w, std::move(trees), c.depth() % 2 == 0 ? 1 : -1};
}

std::optional<Rational> even_zeta_value(const WordSum& s) {
    Rational total = 0;
    for (const auto& [w, c] : s) {
        const std::size_t n = w.size();
        const bool even_zeta = n % 2 == 0 && w.admissible() && w.depth() == 1;
        if (!even_zeta) return std::nullopt;
        total += c * bernoulli(static_cast<unsigned>(n)) / (Rational(2) * Rational(factorial(n)));
    }
    return total;
}

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

using GeneratorMap = std::map<std::optional<SyntaxTree>, Rational>;

void add_scaled(GeneratorMap& into, const GeneratorMap& from, const Rational& scale) {
    for (const auto& [gen, c] : from) {
        Rational& slot = into[gen];
        slot += scale * c;
        if (slot == 0) into.erase(gen);
    }
}

const GeneratorMap& unit_fraction_terms(unsigned long p, std::map<unsigned long, GeneratorMap>& memo) {
    if (auto it = memo.find(p); it != memo.end()) return it->second;
    GeneratorMap terms;
    if (p == 2) {
        terms[std::nullopt] = -1;
    } else {
        const unsigned long index = p - 1;
        Rational m = bernoulli(static_cast<unsigned>(index));
        std::vector<unsigned long> smaller;
        for (unsigned long q = 2; q <= p; ++q) {
            if (!is_prime(q) || index % (q - 1) != 0) continue;
            m += Rational(1, q);
            if (q < p) smaller.push_back(q);
        }
        if (!is_integer(m)) throw std::logic_error("Von Staudt-Clausen sum is not an integer for p = " + std::to_string(p));

        terms[std::nullopt] = -2 * m;
        terms[prepend_power(SyntaxTree::leaf(), index - 2)] = -2 * Rational(factorial(index));
        for (unsigned long q : smaller) add_scaled(terms, unit_fraction_terms(q, memo), -1);
        std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
    }
    return memo.emplace(p, std::move(terms)).first->second;
}

}  // namespace

Certificate unit_fraction_certificate(unsigned long p) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    std::map<unsigned long, GeneratorMap> memo;
    Certificate cert;
    for (const auto& [gen, c] : unit_fraction_terms(p, memo)) cert.terms.push_back({c, gen});
    cert.target = Rational(1, p);
    cert.kind = CertificateKind::z_span_unit_fraction;
    return cert;
}

Rational certificate_value(const Certificate& cert) {
    Rational total = 0;
    for (const auto& term : cert.terms) {
        if (!term.tree) {
            total += term.coefficient * wedge_value();
            continue;
        }
        auto value = even_zeta_value(tree_words(*term.tree));
        if (!value) throw std::domain_error("no exact value for tree " + term.tree->str());
        total += term.coefficient * *value;
    }
    return total;
}

bool check_certificate(const Certificate& cert) {
    if (cert.kind == CertificateKind::z_span_unit_fraction) {
        if (cert.target.get_num() != 1 || !cert.target.get_den().fits_ulong_p() ||
            !is_prime(cert.target.get_den().get_ui()))
            return false;
        for (const auto& term : cert.terms)
            if (!is_integer(term.coefficient)) return false;
    }
    try {
        return certificate_value(cert) == cert.target;
    } catch (const std::domain_error&) {
        return false;
    }
}

std::string certificate_json(const Certificate& cert) {
    nlohmann::ordered_json j;
    j["target"] = format_rational(cert.target);
    j["kind"] = cert.kind == CertificateKind::z_span_unit_fraction ? "Z" : "Q";
    auto terms = nlohmann::ordered_json::array();
    for (const auto& term : cert.terms) {
        nlohmann::ordered_json t;
        t["coeff"] = format_rational(term.coefficient);
        t["gen"] = term.tree ? term.tree->str() : "wedge";
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j.dump();
}

// ---------------------------------------------------------------------------

int rank_mod2(const std::vector<std::vector<int>>& matrix) {
    std::vector<std::vector<int>> m = matrix;
    for (auto& row : m)
        for (int& x : row) x = ((x % 2) + 2) % 2;
    int rank = 0;
    const std::size_t cols = m.empty() ? 0 : m.front().size();
    for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < m.size(); ++col) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[static_cast<std::size_t>(rank)]);
        for (std::size_t r = 0; r < m.size(); ++r)
            if (r != static_cast<std::size_t>(rank) && m[r][col])
                for (std::size_t c = 0; c < cols; ++c) m[r][c] ^= m[static_cast<std::size_t>(rank)][c];
        ++rank;
    }
    return rank;
}

Weight5Obstruction weight5_obstruction(double tol) {
    const SyntaxTree e = SyntaxTree::leaf();
    const std::vector<SyntaxTree> trees = {
        prepend_power(e, 3),
        prepend_power(SyntaxTree::append(e), 2),
        SyntaxTree::prepend(SyntaxTree::join(e, e)),
        SyntaxTree::join(SyntaxTree::prepend(e), e),
        append_power(e, 3),
        SyntaxTree::prepend(append_power(e, 2)),
        SyntaxTree::append(SyntaxTree::join(e, e)),
        SyntaxTree::join(SyntaxTree::append(e), e),
    };

    Weight5Obstruction result;
    for (const auto& t : trees) result.rows.push_back({t, tree_words(t)});

    // Expressing the first four rows in the conjectured basis {zeta(2,3), zeta(3,2)}
    // is a conjecture-level statement; the integer matrix is fixed and checked numerically.
    result.matrix = {{{4, 6}, {-1, 1}, {6, 4}, {9, 11}}};
    std::vector<std::vector<int>> mod2;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 2; ++j)
            result.matrix_mod2[i][j] = static_cast<int>(((result.matrix[i][j] % 2) + 2) % 2);
        mod2.push_back({result.matrix_mod2[i][0], result.matrix_mod2[i][1]});
    }
    result.rank_mod2 = rank_mod2(mod2);

    auto zeta_sum = [tol](const WordSum& s, bool dual) {
        double total = 0.0;
        for (const auto& [w, c] : s)
            total += c.get_d() * eval_mzv(composition_from_word(dual ? dual_word(w) : w), tol);
        return total;
    };
    const double z23 = eval_mzv(Composition({2, 3}), tol);
    const double z32 = eval_mzv(Composition({3, 2}), tol);
    for (std::size_t i = 0; i < 4; ++i) {
        const double lhs = zeta_sum(result.rows[i].words, false);
        const double rhs = (static_cast<double>(result.matrix[i][0]) * z23 + static_cast<double>(result.matrix[i][1]) * z32) / 5.0;
        result.residuals[i] = std::fabs(lhs - rhs);
        result.duality_residuals[i] =
            std::fabs(zeta_sum(result.rows[i].words, false) - zeta_sum(result.rows[i + 4].words, true));
    }
    return result;
}

}  // namespace mzvgraph
