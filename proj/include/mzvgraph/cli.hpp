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

#ifndef MZVGRAPH_CLI_HPP
#define MZVGRAPH_CLI_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mzvgraph::cli {

enum class OutputFormat { text, json };
enum class ArgumentKind { composition, word };

struct CliConfig {
    std::string subcommand;
    OutputFormat output = OutputFormat::text;
    /// Overrides the per-weight default when set; must be >= 1e-12.
    double tolerance = 0.0;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_usage = 2;

/// A comma or any digit other than 0/1 means a composition; otherwise a word.
ArgumentKind classify_argument(std::string_view text);

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mzvgraph::cli

#endif  // MZVGRAPH_CLI_HPP
