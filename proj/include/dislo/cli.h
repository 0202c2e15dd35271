// Copyright 2026 The Dislo Authors
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

#ifndef DISLO_CLI_H
#define DISLO_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace dislo {

enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitUsage = 2,
    kExitInvalidInput = 3,
    kExitResource = 4,
    kExitVerification = 5,
    kExitIo = 6,
};

/// Runs one command line. `args` excludes the program name. Machine-readable
/// results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace dislo

#endif
