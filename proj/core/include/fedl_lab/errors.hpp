// Copyright 2026 The fedl-lab Authors
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

namespace fedl_lab {

// Bad arguments or malformed inputs. Maps to CLI exit code 2.
class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of a function.
class DomainError : public InvalidInputError {
 public:
  using InvalidInputError::InvalidInputError;
};

// A data file could not be parsed. Carries the file and 1-based line.
class ParseError : public InvalidInputError {
 public:
  ParseError(std::string file, std::size_t line, const std::string& what)
      : InvalidInputError(file + ":" + std::to_string(line) + ": " + what),
        file_(std::move(file)),
        line_(line) {}

  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

// Files parse but disagree with each other (column counts, dimensions).
class SchemaError : public InvalidInputError {
 public:
  using InvalidInputError::InvalidInputError;
};

// Numerical failure: divergence, no feasible point. Maps to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InfeasibleError : public NumericalError {
 public:
  InfeasibleError(const std::string& what, double best_value)
      : NumericalError(what), best_value_(best_value) {}

  // Largest value of the feasibility measure found during the search.
  double best_value() const { return best_value_; }

 private:
  double best_value_;
};

}  // namespace fedl_lab
