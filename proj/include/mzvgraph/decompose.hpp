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

#ifndef MZVGRAPH_DECOMPOSE_HPP
#define MZVGRAPH_DECOMPOSE_HPP

#include "mzvgraph/graphs.hpp"
#include "mzvgraph/trees.hpp"
#include "mzvgraph/words.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace mzvgraph {

/* Writes an admissible word as a Q-linear combination of trees whose word
 * image is exactly that word.
 *
 * The word is first split into shuffles of admissible Lyndon words. A Lyndon
 * word of length three or more starts with 00 or ends with 11, so it is p(.)
 * of a shorter admissible word or q(.) of one; 01 is the leaf. When both
 * apply the leading 0 is stripped. The shorter word goes through the whole
 * procedure again, since it need not be Lyndon.
 */
TreeSum decompose_word(const Word& w);

struct MzvDecomposition {
    Composition composition;
    Word word;
    TreeSum trees;
    /// (-1)^depth: the sign in front of zeta in the certified identity.
    int sign = 1;

    /// e.g. "sum_i a_i c(G(t_i)) = -zeta(1,2,2)/(2 pi i)^5".
    std::string identity() const;
};

MzvDecomposition decompose_mzv(const Composition& c);

/// Exact value of a word combination supported on words 0^{2k-1}1, via
/// L(0^{2k-1}1) = B_{2k} / (2 (2k)!). nullopt if another word occurs.
std::optional<Rational> even_zeta_value(const WordSum& s);

enum class CertificateKind { q_span, z_span_unit_fraction };

struct CertificateTerm {
    Rational coefficient;
    /// nullopt denotes the wedge graph.
    std::optional<SyntaxTree> tree;
};

struct Certificate {
    std::vector<CertificateTerm> terms;
    Rational target;
    CertificateKind kind = CertificateKind::z_span_unit_fraction;
};

/* Integer combination of the wedge graph and ladder towers G(p^{2k-2}(e))
 * with weight sum exactly 1/p, built from the Von Staudt-Clausen relation
 *   1/p = m - B_{p-1} - sum_{q < p prime, (q-1) | (p-1)} 1/q
 * with m = -2m * wedge and B_{p-1} = 2 (p-1)! c(G(p^{p-3}(e))).
 * Throws std::invalid_argument if p is not prime.
 */
Certificate unit_fraction_certificate(unsigned long p);

/// Exact weight sum of a certificate. Throws std::domain_error if a tree is
/// not supported on even-zeta words.
Rational certificate_value(const Certificate& cert);

/// certificate_value == target, plus the integrality rule for the Z kind.
bool check_certificate(const Certificate& cert);

/// {"target":"1/p","kind":"Z"|"Q","terms":[{"coeff":"-1","gen":"wedge"},{"coeff":..,"gen":"<tree>"},..]}
std::string certificate_json(const Certificate& cert);

bool is_prime(unsigned long n);

struct Weight5Row {
    SyntaxTree tree;
    WordSum words;
};

struct Weight5Obstruction {
    /// p^3(e), p^2(q(e)), p(e*e), p(e)*e, then q^3(e), p(q^2(e)), q(e*e), q(e)*e.
    std::vector<Weight5Row> rows;
    /// 5 M, where rows of M express the first four values in {zeta(2,3), zeta(3,2)}.
    std::array<std::array<long, 2>, 4> matrix;
    std::array<std::array<int, 2>, 4> matrix_mod2;
    int rank_mod2 = 0;
    /// |lhs - rhs| for each matrix row, with zeta values computed numerically.
    std::array<double, 4> residuals;
    /// |zeta(w) - zeta(dual w)| for the four dual row pairs.
    std::array<double, 4> duality_residuals;
};

Weight5Obstruction weight5_obstruction(double tol = 1e-9);

/// Rank over GF(2).
int rank_mod2(const std::vector<std::vector<int>>& matrix);

}  // namespace mzvgraph

#endif  // MZVGRAPH_DECOMPOSE_HPP
