// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace covtrends {

// Base class for all library errors. The CLI maps subclasses to exit
// codes: IoError -> 1, FormatError/ArgumentError -> 2.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Unreadable/unwritable files and streams.
class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

// Malformed file content. Messages name the offending file/line/cell.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& msg) : Error(msg) {}
};

// Violated operation precondition.
class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& msg) : Error(msg) {}
};

// A text produced zero tokens where at least one is required.
class EmptyInputError : public ArgumentError {
 public:
  explicit EmptyInputError(const std::string& msg) : ArgumentError(msg) {}
};

}  // namespace covtrends
