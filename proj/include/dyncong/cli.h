// Copyright 2026 The Dyncong Authors
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

#ifndef DYNCONG_CLI_H_
#define DYNCONG_CLI_H_

#include <ostream>
#include <span>
#include <string>

namespace dyncong {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUnsatisfied = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitAborted = 3;

// Runs one command; args[0] is the program name. Results go to `out` as
// JSON, diagnostics to `err`.
int Run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace dyncong

#endif  // DYNCONG_CLI_H_
