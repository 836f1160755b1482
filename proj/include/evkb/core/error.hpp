// Copyright 2026 The evkb Authors.
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

#ifndef EVKB_CORE_ERROR_HPP_
#define EVKB_CORE_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace evkb {

// Base for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input data is malformed or inconsistent (CLI exit code 2).
class DataError : public Error {
 public:
  using Error::Error;
};

// Invalid invocation or configuration (CLI exit code 1).
class UsageError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

class ConflictError : public Error {
 public:
  using Error::Error;
};

// A predicate label that is not registered in the ontology.
class UnknownPredicateError : public Error {
 public:
  explicit UnknownPredicateError(const std::string& label)
      : Error("unregistered predicate: " + label), label_(label) {}
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

// Feature vector layout does not match the layout a model was trained on.
class SchemaMismatchError : public Error {
 public:
  using Error::Error;
};

// Non-fatal problem found while reading input. `line` is 1-based, 0 when
// not tied to a line.
struct Diagnostic {
  std::string source;
  std::size_t line = 0;
  std::string message;

  std::string to_string() const {
    std::string out = source;
    if (line > 0) out += ":" + std::to_string(line);
    if (!out.empty()) out += ": ";
    return out + message;
  }
};

using Diagnostics = std::vector<Diagnostic>;

inline void report(Diagnostics* sink, Diagnostic diagnostic) {
  if (sink != nullptr) sink->push_back(std::move(diagnostic));
}

}  // namespace evkb

#endif  // EVKB_CORE_ERROR_HPP_
