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

#ifndef API_EVOLVE_NORMAL_H_
#define API_EVOLVE_NORMAL_H_

#include <set>
#include <string>
#include <vector>

#include "api_evolve/ast.h"
#include "api_evolve/sigmap.h"

namespace api_evolve::normal {

inline constexpr std::string_view kNormPrefix = "normArg";

struct NormEntry {
  std::string temp;
  jast::Expr original;        // the hoisted argument, spans stripped
  std::string original_text;  // its exact source bytes
};

struct NormalizationMap {
  std::vector<NormEntry> entries;

  const NormEntry* find(std::string_view temp) const;
  std::set<std::string> temps() const;
};

struct SkippedSite {
  jast::Span call;  // span of the call in the input unit
  int line = 0;
  std::string reason;
};

struct NormalizeResult {
  jast::CompilationUnit unit;
  NormalizationMap map;
  std::vector<SkippedSite> skipped;  // NonStatementContext sites
};

// Hoists every non-Name argument of each site into a fresh
// `<paramType> normArg<N> = <arg>;` placed right before the statement.
NormalizeResult normalize(const jast::CompilationUnit& unit,
                          const std::vector<sigmap::CallSite>& sites,
                          const sigmap::ApiMapping& mapping);

// Inlines each declared temporary named in `map` or `patch_temps` into its
// single use and deletes the declaration. Throws MultipleUse.
jast::CompilationUnit denormalize(const jast::CompilationUnit& unit,
                                  const NormalizationMap& map,
                                  const std::set<std::string>& patch_temps);

// First `<prefix><N>` with N >= *next that does not occur in `source`;
// advances *next past it.
std::string fresh_name(std::string_view source, std::string_view prefix,
                       int* next);

}  // namespace api_evolve::normal

#endif  // API_EVOLVE_NORMAL_H_
