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

#ifndef QDEPTH_ERROR_HPP_
#define QDEPTH_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace qdepth {

enum class ErrorCode {
  kMissingVariable,
  kUnknownVertex,
  kSyntaxError,
  kClauseArity,
  kVariableOutOfRange,
  kTautology,
  kRepeatedVariable,
  kIsolatedVariable,
  kInvalidPenalty,
  kInvalidCover,
  kInconsistentOverlapData,
  kNotSimpleGraph,
  kImproperColoring,
  kIo,
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// CLI can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures additionally remember the 1-based input line.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, int line, const std::string& what)
      : Error(code, "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace qdepth

#endif  // QDEPTH_ERROR_HPP_
