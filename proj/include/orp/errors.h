// Copyright 2026 The ORP Authors
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

#ifndef ORP_ERRORS_H_
#define ORP_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orp {

// Malformed input: graph files, table files, out-of-range arguments.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A parse failure tied to a line of a text file (1-based).
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError(what + " at line " + std::to_string(line)), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// The instance is well formed but the request has no answer, e.g. a source
// with no robust path or an infeasible robustness bound.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation refused to run because it would exceed a configured limit
// (failure parameter cap, scenario enumeration budget, oracle size guard).
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace orp

#endif  // ORP_ERRORS_H_
