// Copyright 2026 The kepf Authors.
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

#ifndef KEPF_ERROR_H_
#define KEPF_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kepf {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed edge-list or graph6 input. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A graph construction precondition failed (self-loop, index out of range,
// vertex cap exceeded).
class GraphError : public Error {
 public:
  using Error::Error;
};

// A matching argument is invalid for its graph: not a matching, not maximum,
// or paired with a matching on a different vertex count.
class MatchingError : public Error {
 public:
  using Error::Error;
};

// An exhaustive routine would exceed its configured size or count cap. Never
// a silent truncation: callers shrink the instance or raise the cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// The configuration search expanded more states than its budget allows.
class BudgetExceeded : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

}  // namespace kepf

#endif  // KEPF_ERROR_H_
