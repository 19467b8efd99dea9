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

#ifndef API_EVOLVE_PATCHGEN_H_
#define API_EVOLVE_PATCHGEN_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "api_evolve/ast.h"
#include "api_evolve/sigmap.h"

namespace api_evolve::patchgen {

inline constexpr std::string_view kPatchTempPrefix = "newParameterVariable";
inline constexpr std::string_view kReceiverMeta = "classIden";

enum class MetaKind { kExpression, kIdentifier };

struct MetaVar {
  MetaKind kind = MetaKind::kIdentifier;
  std::string name;
  friend bool operator==(const MetaVar&, const MetaVar&) = default;
};

enum class LineKind { kContext, kAdd, kRemove, kEllipsis };

struct PatchLine {
  LineKind kind = LineKind::kAdd;
  // Logical line without its `+ ` prefix. Continuation lines are joined
  // with "\n".
  std::string text;
  // Set when `text` is a complete statement.
  std::optional<jast::Stmt> pattern;
  int line = 0;  // first physical line in the patch file; 0 if generated
};

// Compares kind and token sequence.
bool operator==(const PatchLine& a, const PatchLine& b);

struct SemanticPatch {
  std::string rule_name;
  std::vector<MetaVar> metavars;
  jast::Expr guard_cond;
  std::string guard_text;  // the example's condition bytes, "\n" newlines
  std::vector<PatchLine> hunk;
  // Trailing `@needs@` section.
  std::vector<std::string> imports;      // qualified names
  std::vector<std::string> definitions;  // member declarations, dedented

  const PatchLine* context() const;
  const MetaVar* metavar(std::string_view name) const;
  // Names of the temporaries declared by Add lines.
  std::vector<std::string> temps() const;
};

// Structural equality; guard_text is not compared, guard_cond is.
bool operator==(const SemanticPatch& a, const SemanticPatch& b);

struct GenerateOptions {
  // Keep references to the deprecated call's arguments as metavariables
  // instead of resolving through them to the example's values.
  bool rewire_shared_args = false;
};

// Throws ExampleShapeError or ResolutionError.
SemanticPatch generate_patch(const jast::CompilationUnit& example,
                             const sigmap::ApiMapping& mapping,
                             const GenerateOptions& options = {});

std::string render_patch(const SemanticPatch& patch);

// Throws MalformedPatch.
SemanticPatch parse_patch(std::string_view text);

}  // namespace api_evolve::patchgen

#endif  // API_EVOLVE_PATCHGEN_H_
