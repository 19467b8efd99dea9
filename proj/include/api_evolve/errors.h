// Copyright 2026 The api-evolve Authors
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

#ifndef API_EVOLVE_ERRORS_H_
#define API_EVOLVE_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace api_evolve {

// Brace/paren nesting in a source file cannot be recovered, or a string or
// comment is left unterminated. The file cannot be processed at all.
class UnbalancedSource : public std::runtime_error {
 public:
  UnbalancedSource(const std::string& what, std::size_t offset)
      : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Caller handed splice() edits whose spans intersect.
class OverlappingEdits : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class MalformedSignature : public std::runtime_error {
 public:
  explicit MalformedSignature(const std::string& text)
      : std::runtime_error("malformed API signature: '" + text + "'"),
        text_(text) {}
  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

// The after-update example has no if/else pair separating the two APIs.
class ExampleShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An updated-call argument could not be chased to a ground value.
class ResolutionError : public std::runtime_error {
 public:
  ResolutionError(const std::string& what, std::string expression)
      : std::runtime_error(what), expression_(std::move(expression)) {}
  const std::string& expression() const { return expression_; }

 private:
  std::string expression_;
};

class MalformedPatch : public std::runtime_error {
 public:
  MalformedPatch(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A tool-introduced temporary is referenced more than once.
class MultipleUse : public std::runtime_error {
 public:
  explicit MultipleUse(const std::string& temp)
      : std::runtime_error("temporary '" + temp + "' is used more than once"),
        temp_(temp) {}
  const std::string& temp() const { return temp_; }

 private:
  std::string temp_;
};

}  // namespace api_evolve

#endif  // API_EVOLVE_ERRORS_H_
