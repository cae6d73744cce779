// Copyright 2026 The dks1d Authors
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

#ifndef DKS1D_ERRORS_HPP_
#define DKS1D_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dks1d {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violated by the caller (bad sizes, out-of-range queries, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An internal identity that must hold mathematically did not. Indicates a
// bug or, in the float backend, a numerical breakdown.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace dks1d

#endif  // DKS1D_ERRORS_HPP_
