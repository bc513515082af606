/*
   Copyright 2026 The blowup authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BLOWUP_CLI_HPP
#define BLOWUP_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace blowup::cli {

/// Exit codes: 0 success or verified, 1 mathematical mismatch, 2 usage error.
enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

/// Runs the command line (without the program name) and returns the exit code.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace blowup::cli

#endif
