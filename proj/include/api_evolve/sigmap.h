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

#ifndef API_EVOLVE_SIGMAP_H_
#define API_EVOLVE_SIGMAP_H_

#include <string>
#include <string_view>
#include <vector>

#include "api_evolve/ast.h"

namespace api_evolve::sigmap {

// `fully.qualified.Class#method(type, type)`.
struct ApiSignature {
  std::string class_name;
  std::string method_name;
  std::vector<std::string> param_types;

  std::size_t arity() const { return param_types.size(); }
  std::string to_string() const;
  friend bool operator==(const ApiSignature&, const ApiSignature&) = default;
};

struct ApiMapping {
  ApiSignature deprecated;
  ApiSignature replacement;
};

// Throws MalformedSignature with the offending text.
ApiSignature parse_signature(std::string_view text);

// Throws MalformedSignature when both sides are the same API.
ApiMapping make_mapping(std::string_view deprecated,
                        std::string_view replacement);

// One invocation of an API inside a parsed unit. Pointers refer into the
// unit passed to find_invocations and stay valid while it is alive and
// unmodified.
struct CallSite {
  const jast::Expr* call = nullptr;
  // Innermost statement whose own expressions contain the call; null for
  // field initializers.
  const jast::Stmt* enclosing_stmt = nullptr;
  const jast::MethodDecl* enclosing_method = nullptr;
  const jast::TypeDecl* enclosing_type = nullptr;
  const jast::FieldDecl* enclosing_field = nullptr;
  // Statements from the method body block down to enclosing_stmt, exclusive.
  std::vector<const jast::Stmt*> ancestors;

  // True when enclosing_stmt sits directly in a block, so statements can be
  // inserted before it or it can be replaced by a compound statement.
  bool in_block() const {
    return enclosing_stmt != nullptr && !ancestors.empty() &&
           ancestors.back()->kind == jast::StmtKind::kBlock;
  }
};

// Every MethodCall named like `sig` with the same argument count, in source
// order. Receivers are not type-checked; calls inside opaque regions,
// string literals and comments are never reported.
std::vector<CallSite> find_invocations(const jast::CompilationUnit& unit,
                                       const ApiSignature& sig);
std::vector<CallSite> find_invocations(const jast::CompilationUnit& unit,
                                       std::string_view method_name,
                                       std::size_t arity);

}  // namespace api_evolve::sigmap

#endif  // API_EVOLVE_SIGMAP_H_
