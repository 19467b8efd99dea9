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

#ifndef API_EVOLVE_PARSER_H_
#define API_EVOLVE_PARSER_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "api_evolve/ast.h"

namespace api_evolve::jast {

// Parses a Java source file. Constructs outside the subset are kept as
// Opaque statements, expressions or members. Member declarations written at
// file level (no enclosing class) are grouped into a kImplicit TypeDecl.
//
// Throws UnbalancedSource when bracket nesting cannot be recovered.
CompilationUnit parse(std::string source);

// Parses one statement; spans are relative to `text`. Text that is not a
// single subset statement comes back as an Opaque statement.
Stmt parse_statement(std::string_view text);

// Parses one expression; unparseable text comes back as an Opaque expression.
Expr parse_expression(std::string_view text);

struct SourceFile {
  std::filesystem::path path;
  CompilationUnit unit;

  const std::string& text() const { return unit.source; }
};

// Reads and parses a file. Throws std::runtime_error if it cannot be read.
SourceFile load_source_file(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace api_evolve::jast

#endif  // API_EVOLVE_PARSER_H_
