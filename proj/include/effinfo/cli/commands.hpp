/*
 * Copyright 2026 The effinfo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef EFFINFO_CLI_COMMANDS_HPP
#define EFFINFO_CLI_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace effinfo::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailure = 1,
    kInputError = 2,
    kUndefinedQuantity = 3,
    kResourceCap = 4,
};

/// Runs the command line \p args (without the program name). Reports go to
/// \p out, diagnostics to \p err, and documents named "-" are read from \p in.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace effinfo::cli

#endif  // EFFINFO_CLI_COMMANDS_HPP
