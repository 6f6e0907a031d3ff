// Copyright 2026 The hofg Authors
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

#ifndef HOFG_ERROR_HPP_
#define HOFG_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hofg {

// Base of every error raised by the library. Computation errors map to exit
// status 1 in the command-line tool.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A Fibonacci rank outside the supported table.
class RankOverflow : public Error {
 public:
  using Error::Error;
};

// A value leaving [0, 2^63).
class ValueOverflow : public Error {
 public:
  using Error::Error;
};

// An argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Tree materialization beyond the supported depth.
class DepthLimit : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// b-file indices that do not increase by exactly one.
class GapError : public Error {
 public:
  GapError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hofg

#endif  // HOFG_ERROR_HPP_
