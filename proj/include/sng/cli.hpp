// Copyright 2026 The sngames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SNG_CLI_HPP_
#define SNG_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace sng {

// Exit codes of the sng tool.
enum ExitCode : int {
  kExitOk = 0,          // success, or the queried property holds
  kExitNegative = 1,    // property fails or no equilibrium of the asked kind
  kExitUsage = 2,       // bad arguments or a method that does not apply
  kExitInvalid = 3,     // parse or validation error in an input document
  kExitBudget = 4,      // state guard or step budget exceeded
};

// Runs the tool on `args` (without the program name), writing reports to
// `out` and diagnostics to `err`. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sng

#endif  // SNG_CLI_HPP_
