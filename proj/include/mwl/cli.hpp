// Copyright 2026 The Authors.
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

// Command-line front end. Exit codes:
//   0 success, 1 internal error, 2 invalid arguments or input,
//   3 corrupt checkpoint, 4 resource-bound refusal, 5 verification failure.

#ifndef MWL_CLI_HPP_
#define MWL_CLI_HPP_

#include <exception>
#include <ostream>
#include <string>
#include <vector>

namespace mwl {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,
  kExitCorruptCheckpoint = 3,
  kExitResourceBound = 4,
  kExitVerification = 5,
};

// Largest --max-r accepted without --force-full.
inline constexpr int kMaxUnforcedLevel = 20;

// Prints the error and returns its exit code.
int ReportException(std::exception_ptr error, std::ostream& err);

// args excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mwl

#endif  // MWL_CLI_HPP_
