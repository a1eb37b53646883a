/*
 * Copyright 2026 The polydot-cmpc Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end. Kept as a library so tests can drive it in-process.

#ifndef POLYDOT_TOOLS_CLI_H_
#define POLYDOT_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace polydot::cli {

// Process exit codes. Each failure path has its own.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,
  kExitUnwritable = 3,
  kExitSelfCheck = 4,
  kExitAuditFailed = 5,
  kExitVerifyDiscrepancy = 6,
  kExitSetupExhausted = 7,
};

// `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace polydot::cli

#endif  // POLYDOT_TOOLS_CLI_H_
