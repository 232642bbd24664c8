// Copyright 2026 The ontodesc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ontodesc {

enum class ErrorCode {
  InvalidIri,
  KindClash,       // IRI already declared with another kind
  UnknownEntity,
  KindMismatch,    // axiom arguments have the wrong entity kinds
  InvalidExpression,
  StaleClosure,
  Syntax,
  IllegalEntityVariant,
  UnsupportedRestriction,
  GroundMismatch,
  TagMismatch,
  MappingError,
  UndefinedBuild,
  MissingTag,
  Inconsistent,
  Precondition,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Error raised while reading a document; positions are 1-based.
class SourceError : public Error {
 public:
  SourceError(ErrorCode code, std::size_t line, std::size_t column, const std::string& message)
      : Error(code, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class SyntaxError : public SourceError {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& expected)
      : SourceError(ErrorCode::Syntax, line, column, "expected " + expected),
        expected_(expected) {}

  const std::string& expected() const noexcept { return expected_; }

 private:
  std::string expected_;
};

}  // namespace ontodesc
