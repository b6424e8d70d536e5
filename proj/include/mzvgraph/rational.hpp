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

#ifndef MZVGRAPH_RATIONAL_HPP
#define MZVGRAPH_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mzvgraph {

/// Arbitrary-precision exact rational; always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "a/b" or "a" (optional leading sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical text form: "a/b", or "a" when the denominator is 1.
std::string format_rational(const Rational& value);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace mzvgraph

#endif  // MZVGRAPH_RATIONAL_HPP
