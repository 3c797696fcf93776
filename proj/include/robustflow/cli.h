// Copyright 2026 The robustflow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The robustflow command line: generate | solve | compare | evaluate | suite.
//
// Exit codes:
//   0  success
//   1  an evaluated flow is infeasible
//   2  bad parameters, malformed input or an instance outside its domain
//   3  an enumeration guard was exceeded
//   4  an invariant was violated (suite failure or internal check)

#ifndef ROBUSTFLOW_CLI_H_
#define ROBUSTFLOW_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace robustflow {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasibleFlow = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitGuard = 3;
inline constexpr int kExitInvariant = 4;

// `args` excludes the program name. Results go to `out` unless written to a
// file with --out; diagnostics go to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace robustflow

#endif  // ROBUSTFLOW_CLI_H_
