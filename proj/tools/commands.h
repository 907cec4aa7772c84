// Copyright 2026 The revcover Authors.
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

#ifndef REVCOVER_TOOLS_COMMANDS_H_
#define REVCOVER_TOOLS_COMMANDS_H_

#include <string>
#include <vector>

namespace revcover::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitSchema = 3;
inline constexpr int kExitConfig = 4;

// Parses and runs one command line; returns the process exit code.
int RunCli(const std::vector<std::string>& args);

}  // namespace revcover::cli

#endif  // REVCOVER_TOOLS_COMMANDS_H_
