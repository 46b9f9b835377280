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

#ifndef MATROIDLAB_CLI_H_
#define MATROIDLAB_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace matroidlab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidMatroid = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCheckFailed = 3;

// Runs one command line (without the program name). Output is buffered and
// written to `out` only once the command has finished.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace matroidlab

#endif  // MATROIDLAB_CLI_H_
