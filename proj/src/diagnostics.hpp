// Copyright 2026 the penplan authors
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

#ifndef PENPLAN_DIAGNOSTICS_HPP
#define PENPLAN_DIAGNOSTICS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace penplan {

// A problem tied to an input file. line/col are 1-based; 0 means the
// diagnostic is not attached to a specific position.
struct Diagnostic {
  std::string file;
  int line = 0;
  int col = 0;
  std::string message;

  std::string to_string() const {
    std::string out = file;
    if (line > 0) {
      out += ':' + std::to_string(line) + ':' + std::to_string(col);
    }
    if (!out.empty()) {
      out += ": ";
    }
    return out + message;
  }
};

// Bad input: syntax errors, validation failures, impossible transitions,
// policy conflicts. Commands report these with exit code 1.
class InputError : public std::runtime_error {
 public:
  explicit InputError(Diagnostic d)
      : std::runtime_error(d.to_string()), diag(std::move(d)) {}
  InputError(std::string file, int line, int col, std::string message)
      : InputError(Diagnostic{std::move(file), line, col, std::move(message)}) {}
  explicit InputError(std::string message)
      : InputError(Diagnostic{"", 0, 0, std::move(message)}) {}

  Diagnostic diag;
};

// A configurable resource limit was hit (grounding instances, search nodes,
// exhaustive state enumeration). Commands report these with exit code 4.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace penplan

#endif  // PENPLAN_DIAGNOSTICS_HPP
