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

#ifndef MZVGRAPH_VERIFY_HPP
#define MZVGRAPH_VERIFY_HPP

#include <string>
#include <string_view>
#include <vector>

namespace mzvgraph {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Invariant sweeps behind `verify --suite <name>`.
/// Suites: codec, shuffle, lyndon, pipeline, weight5, certificates, numeric.
std::vector<std::string> verify_suite_names();

/// Throws std::invalid_argument on an unknown suite name.
std::vector<CheckResult> run_verify_suite(std::string_view name, double tol = 1e-8);

}  // namespace mzvgraph

#endif  // MZVGRAPH_VERIFY_HPP
