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

#ifndef API_EVOLVE_DATAFLOW_H_
#define API_EVOLVE_DATAFLOW_H_

#include <map>
#include <string>
#include <vector>

#include "api_evolve/ast.h"
#include "api_evolve/sigmap.h"

namespace api_evolve::dataflow {

// A helper the resolved expression depends on: either a method of one of
// the context types or a type declared in the unit.
struct Definition {
  const jast::MethodDecl* method = nullptr;
  const jast::TypeDecl* type = nullptr;

  const std::string& name() const { return method ? method->name : type->name; }
  std::size_t begin() const {
    return method ? method->span.begin : type->span.begin;
  }
  friend bool operator==(const Definition&, const Definition&) = default;
};

struct ResolutionContext {
  const jast::CompilationUnit* unit = nullptr;
  const jast::MethodDecl* method = nullptr;  // null inside field initializers
  // Enclosing types, innermost first.
  std::vector<const jast::TypeDecl*> types;
  // Statements from the method body down to the anchor, anchor last.
  std::vector<const jast::Stmt*> path;
  // Names whose value is fixed by the caller instead of being chased.
  std::map<std::string, jast::Expr> pinned;

  const jast::Stmt* anchor() const {
    return path.empty() ? nullptr : path.back();
  }
};

// Context for resolving expressions inside the statement of `site`.
ResolutionContext context_for(const jast::CompilationUnit& unit,
                              const sigmap::CallSite& site);

// Enclosing types of `type`, itself first.
std::vector<const jast::TypeDecl*> type_chain(const jast::CompilationUnit& unit,
                                              const jast::TypeDecl* type);

enum class ValueKind {
  kLiteral,
  kStaticMember,
  kMethodInvocation,
  kObjectCreation,
  kCompound,  // operators, casts and parentheses over ground parts
  kUnresolved,
};

const char* to_string(ValueKind kind);

struct ResolvedValue {
  ValueKind kind = ValueKind::kUnresolved;
  jast::Expr expr;
  std::vector<Definition> needs;  // direct references, in source order
  std::string reason;             // set when unresolved
  // Types enclosing the resolution context; never reported as needs.
  std::vector<const jast::TypeDecl*> context_types;

  bool resolved() const { return kind != ValueKind::kUnresolved; }
};

ResolvedValue resolve_expression(const jast::Expr& e,
                                 const ResolutionContext& ctx);

// Transitive closure of definitions reachable from `v`, in source order.
std::vector<Definition> collect_dependencies(
    const ResolvedValue& v, const jast::CompilationUnit& unit);
std::vector<Definition> collect_dependencies(
    const std::vector<Definition>& roots, const jast::CompilationUnit& unit,
    const std::vector<const jast::TypeDecl*>& excluded = {});

}  // namespace api_evolve::dataflow

#endif  // API_EVOLVE_DATAFLOW_H_
