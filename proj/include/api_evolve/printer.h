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

#ifndef API_EVOLVE_PRINTER_H_
#define API_EVOLVE_PRINTER_H_

#include <string>
#include <string_view>
#include <vector>

#include "api_evolve/ast.h"

namespace api_evolve::jast {

inline constexpr std::string_view kIndentUnit = "    ";

// Reprints a unit. Parsed nodes reproduce their source bytes; statements
// without a span (synthesized) that sit inside a method-body block are
// rendered canonically on their own line, indented four spaces per brace
// nesting level.
std::string print(const CompilationUnit& unit);

struct TextEdit {
  Span span;
  std::string replacement;
};

// Applies edits in ascending span order. Zero-length insertions at the same
// offset are applied in the order given. Throws OverlappingEdits when two
// spans intersect or an edit falls outside the text.
std::string splice(std::string_view source, std::vector<TextEdit> edits);
std::string splice(const CompilationUnit& unit, std::vector<TextEdit> edits);

// Canonical single-line rendering of an expression.
std::string render_expr(const Expr& e);

// Canonical rendering of a statement whose first line starts at `indent`.
// Nested statements get one more indent unit; lines join with `newline`.
std::string render_stmt(const Stmt& s, std::string_view indent = "",
                        std::string_view newline = "\n");

// Whitespace between the start of the line holding `offset` and the first
// non-blank character of that line.
std::string line_indent(std::string_view source, std::size_t offset);

// 1-based line number of `offset`.
int line_of(std::string_view source, std::size_t offset);

}  // namespace api_evolve::jast

#endif  // API_EVOLVE_PRINTER_H_
