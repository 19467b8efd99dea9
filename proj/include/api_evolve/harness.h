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

#ifndef API_EVOLVE_HARNESS_H_
#define API_EVOLVE_HARNESS_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "api_evolve/sigmap.h"

namespace api_evolve::harness {

struct CorpusTarget {
  std::filesystem::path target;
  std::filesystem::path expected;
};

struct CorpusCase {
  std::string name;
  sigmap::ApiMapping mapping;
  std::filesystem::path example;
  std::vector<CorpusTarget> targets;  // sorted by file name
};

// Reads cases/<name>/{mapping.txt, example.java, targets/, expected/}.
// Throws std::runtime_error describing the layout problem.
CorpusCase load_case(const std::filesystem::path& dir);

struct TargetResult {
  std::string name;
  bool passed = false;
  std::string detail;  // empty on pass
};

struct CaseResult {
  std::string name;
  std::string error;  // layout or patch-generation failure
  std::vector<TargetResult> targets;

  std::size_t passed() const;
};

struct CorpusSummary {
  std::vector<CaseResult> cases;  // sorted by name

  std::size_t total_targets() const;
  std::size_t passed_targets() const;
  bool ok() const;
};

// Collapses runs of blanks to one space, strips trailing blanks and maps
// CRLF to LF. Leading indentation is kept as a single space when present.
std::string normalize_for_compare(std::string_view text);

CaseResult run_case(const std::filesystem::path& dir);
CorpusSummary run_corpus(const std::filesystem::path& root);

std::string render_table(const CorpusSummary& summary);
std::string render_json(const CorpusSummary& summary);

}  // namespace api_evolve::harness

#endif  // API_EVOLVE_HARNESS_H_
