// Copyright 2026 The qdepth Authors
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

#ifndef QDEPTH_CLI_HPP_
#define QDEPTH_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace qdepth {

// sysexits-style statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIncomplete = 2;  // solver budget ran out
inline constexpr int kExitUsage = 64;
inline constexpr int kExitData = 65;
inline constexpr int kExitSoftware = 70;
inline constexpr int kExitIo = 74;

// Runs `qdepth <args...>`; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace qdepth

#endif  // QDEPTH_CLI_HPP_
