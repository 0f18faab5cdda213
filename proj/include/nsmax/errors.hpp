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

#pragma once

#include <stdexcept>
#include <string>

namespace nsmax {

// Invalid arguments or malformed inputs. CLI exit code 1.
class ArgumentError : public std::invalid_argument {
 public:
  explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

// Input file could not be parsed; message carries the line number.
class ParseError : public ArgumentError {
 public:
  explicit ParseError(const std::string& what) : ArgumentError(what) {}
};

// Requested enumeration exceeds the configured caps. CLI exit code 2.
class ScaleError : public std::runtime_error {
 public:
  explicit ScaleError(const std::string& what) : std::runtime_error(what) {}
};

// A set-function evaluation failed (e.g. singular matrix, unbounded LP).
class EvaluationError : public std::runtime_error {
 public:
  explicit EvaluationError(const std::string& what) : std::runtime_error(what) {}
};

// Matrix not positive definite / pivot below tolerance.
class ConditioningError : public EvaluationError {
 public:
  explicit ConditioningError(const std::string& what) : EvaluationError(what) {}
};

// Restricted LP has no finite optimum.
class UnboundedError : public EvaluationError {
 public:
  explicit UnboundedError(const std::string& what) : EvaluationError(what) {}
};

// Instance is degenerate for the requested quantity (e.g. F(V) = 0).
class DegeneracyError : public EvaluationError {
 public:
  explicit DegeneracyError(const std::string& what) : EvaluationError(what) {}
};

// A theoretical guarantee was falsified at run time. CLI exit code 3.
class GuaranteeFalsified : public std::runtime_error {
 public:
  explicit GuaranteeFalsified(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nsmax
