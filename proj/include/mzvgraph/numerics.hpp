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

#ifndef MZVGRAPH_NUMERICS_HPP
#define MZVGRAPH_NUMERICS_HPP

#include "mzvgraph/words.hpp"

#include <complex>
#include <map>
#include <stdexcept>

namespace mzvgraph {

/// Smallest accepted tolerance.
inline constexpr double min_tolerance = 1e-12;

/// Raised when the requested tolerance cannot be met within the term budget.
class ToleranceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct MzvValue {
    std::complex<double> value;
    double abs_error_bound = 0.0;
};

/// 1e-8 up to weight 6, 1e-6 above.
double default_tolerance(std::size_t weight);

/* zeta(n_1, ..., n_d) = sum over 0 < k_1 < ... < k_d of 1 / (k_1^n_1 ... k_d^n_d).
 *
 * Evaluated as the iterated integral of the composition's word, split at
 * t = 1/2. Each half is a multiple polylogarithm series at x = 1/2, which
 * converges geometrically; an admissible word needs no regularization.
 * Throws std::invalid_argument if tol < min_tolerance, ToleranceError if the
 * truncation bound cannot be brought under tol.
 */
double eval_mzv(const Composition& c, double tol = 1e-8);

/// Same, also returning the error bound actually achieved.
MzvValue eval_mzv_bounded(const Composition& c, double tol = 1e-8);

/// (-1)^depth zeta(composition(w)) / (2 pi i)^weight.
MzvValue eval_word(const Word& w, double tol = 1e-8);

/// Linear extension of eval_word; error bounds accumulate with |coefficient|.
MzvValue eval_word_sum(const WordSum& s, double tol = 1e-8);

/// B_n from sum_{j=0}^{m} binom(m+1, j) B_j = 0, B_0 = 1, B_1 = -1/2.
Rational bernoulli(unsigned n);

/// Even-index Bernoulli numbers B_2 .. B_{2k}.
std::map<unsigned, Rational> bernoulli_table(unsigned max_index);

}  // namespace mzvgraph

#endif  // MZVGRAPH_NUMERICS_HPP
