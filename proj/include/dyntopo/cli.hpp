// Copyright 2026 The dyntopo Authors
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

#ifndef DYNTOPO_CLI_HPP
#define DYNTOPO_CLI_HPP

#include <ostream>

namespace dyntopo {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCycle = 2;
inline constexpr int kExitVerifyFailed = 3;

/// Entry point for the `insert`, `verify` and `bench` subcommands.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace dyntopo

#endif  // DYNTOPO_CLI_HPP
