/*
 Copyright 2026 The aptctl Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#ifndef APTCTL_ERRORS_HPP
#define APTCTL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace aptctl {

/// Base class for all aptctl errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A constructor or operation received an argument outside its domain.
class InvalidParameterError : public Error {
 public:
  explicit InvalidParameterError(const std::string& msg) : Error(msg) {}
};

/// Data failed a semantic check (self-loop, out-of-bounds control level, ...).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// Text input could not be parsed. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Two grids or vectors that must share a shape do not.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& msg) : Error(msg) {}
};

/// An Euler step left [0,1] by more than the clip budget; the grid is too coarse.
class StepSizeError : public Error {
 public:
  explicit StepSizeError(const std::string& msg) : Error(msg) {}
};

/// A prevention rate of zero would divide the dynamics by zero.
class DivisionGuardError : public Error {
 public:
  explicit DivisionGuardError(const std::string& msg) : Error(msg) {}
};

/// File could not be read or written.
class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace aptctl

#endif  // APTCTL_ERRORS_HPP
