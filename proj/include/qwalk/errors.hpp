// Copyright 2026 The qwalk Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

/** A caller broke a documented precondition (size mismatch, asymmetric matrix, ...). */
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/** A value supplied by the user is out of range or otherwise unusable. */
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/** A Graph or Schedule would violate its invariants. */
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/** The gate has no legacy (all-looped) construction. */
class UnsupportedGate : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/** The walk engine lost unitarity beyond tolerance. Always a bug. */
class EngineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Malformed input text; line() is 1-based. */
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace qwalk
