// Copyright 2026 The pebblegame Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pebble {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or semantically invalid input (bad file, cyclic graph, wrong
/// graph shape for the requested operation, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Parse failure tied to a line of the input stream.
class ParseError : public ValidationError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : ValidationError("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An exact solver refused an instance above its hard size limit.
class SizeGuardError : public Error {
 public:
  SizeGuardError(const std::string& what, std::size_t actual, std::size_t limit)
      : Error(what + " (" + std::to_string(actual) + " > limit " +
              std::to_string(limit) + ")"),
        actual_(actual),
        limit_(limit) {}

  std::size_t actual() const noexcept { return actual_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t actual_;
  std::size_t limit_;
};

/// A move whose preconditions do not hold in the current game state.
class IllegalMoveError : public Error {
 public:
  IllegalMoveError(std::size_t index, const std::string& what)
      : Error("move " + std::to_string(index) + ": " + what), index_(index) {}

  /// Position of the offending move in the strategy (0 for a lone move).
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// A strategy replayed legally but left edges undeleted or results unstored.
class NonTerminalError : public Error {
 public:
  using Error::Error;
};

}  // namespace pebble
