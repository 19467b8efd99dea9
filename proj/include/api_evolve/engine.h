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

#ifndef API_EVOLVE_ENGINE_H_
#define API_EVOLVE_ENGINE_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "api_evolve/ast.h"
#include "api_evolve/normal.h"
#include "api_evolve/patchgen.h"
#include "api_evolve/sigmap.h"

namespace api_evolve::engine {

inline constexpr std::string_view kRenameSuffix = "_androevolve";

struct MetaBinding {
  std::map<std::string, jast::Expr> assignments;
};

// Unifies `pattern` with `stmt`. Names declared in `metavars` are pattern
// variables; everything else must match exactly.
std::optional<MetaBinding> match_statement(
    const jast::Stmt& pattern, const jast::Stmt& stmt,
    const std::vector<patchgen::MetaVar>& metavars);

// Replaces metavariables in `pattern` with their bindings.
jast::Expr substitute(const jast::Expr& pattern,
                      const std::map<std::string, jast::Expr>& values);
jast::Stmt substitute(const jast::Stmt& pattern,
                      const std::map<std::string, jast::Expr>& values);

// True when some enclosing if-condition mentions SDK_INT.
bool already_guarded(const sigmap::CallSite& site);

enum class SkipReason { kAlreadyGuarded, kNoMatch, kNonStatementContext };

const char* to_string(SkipReason reason);

struct SkippedSite {
  jast::Span call;
  int line = 0;
  SkipReason reason = SkipReason::kNoMatch;
};

// The deprecated call inside the patch's context line.
struct TargetCall {
  std::string method_name;
  std::size_t arity = 0;
};
std::optional<TargetCall> target_call(const patchgen::SemanticPatch& patch);

struct ApplyOptions {
  // Temporaries introduced by normalize; shared arguments bound to one of
  // them are replaced by the expression it stands for.
  const normal::NormalizationMap* norm = nullptr;
  // Identifier rewrites for Add lines (renamed or qualified definitions).
  std::map<std::string, std::string> renames;
};

struct ApplyResult {
  jast::CompilationUnit unit;
  std::size_t found = 0;
  std::size_t updated = 0;
  std::vector<SkippedSite> skipped;  // in source order
  std::set<std::string> patch_temps;
};

// Throws MalformedPatch when the patch cannot be applied at all.
ApplyResult apply_patch(const patchgen::SemanticPatch& patch,
                        const jast::CompilationUnit& unit,
                        const ApplyOptions& options = {});

enum class DefinitionKind { kMethod, kType, kField };

struct PlannedDefinition {
  DefinitionKind kind = DefinitionKind::kMethod;
  std::string name;       // name in the target after renaming
  std::size_t arity = 0;  // methods only
  std::string text;       // dedented, renames applied
  bool reuse = false;     // the target already has it
};

struct TransplantPlan {
  std::map<std::string, std::string> renames;
  std::vector<PlannedDefinition> definitions;
  std::vector<std::string> imports;  // to add
};

TransplantPlan plan_transplant(const patchgen::SemanticPatch& patch,
                               const jast::CompilationUnit& target);

struct TransplantResult {
  jast::CompilationUnit unit;
  std::vector<std::string> copied;
};

TransplantResult transplant_definitions(const jast::CompilationUnit& unit,
                                        const TransplantPlan& plan);

struct UpdateReport {
  std::string file;
  std::size_t sites_found = 0;
  std::size_t sites_updated = 0;
  struct Skip {
    int line = 0;
    std::string reason;
  };
  std::vector<Skip> skipped;
  std::vector<std::string> copied;
};

struct UpdateOutcome {
  std::string text;
  UpdateReport report;
};

// The whole target-side pipeline for one file: parse, normalize, apply,
// transplant, denormalize. Throws UnbalancedSource, MalformedPatch and
// MultipleUse.
UpdateOutcome update_source(const patchgen::SemanticPatch& patch,
                            const sigmap::ApiMapping& mapping,
                            const std::string& source,
                            const std::string& file = "");

}  // namespace api_evolve::engine

#endif  // API_EVOLVE_ENGINE_H_
