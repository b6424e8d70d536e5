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

#include "mzvgraph/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace mzvgraph {

namespace {

bool valid_integer_text(std::string_view text) {
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
    if (text.empty()) return false;
    for (char c : text)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    auto num = text.substr(0, slash);
    auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    std::string num_str(num.front() == '+' ? num.substr(1) : num);
    Integer d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(Integer(num_str), d);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& value) { return value.get_str(); }

Integer factorial(unsigned long n) {
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

}  // namespace mzvgraph
