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

#include "api_evolve/harness.h"

#include <algorithm>
#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "api_evolve/engine.h"
#include "api_evolve/parser.h"
#include "api_evolve/patchgen.h"

namespace api_evolve::harness {
namespace fs = std::filesystem;
namespace {

constexpr std::string_view kRewireOption = "rewire-shared-args";

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<fs::path> java_files(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const fs::directory_entry& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".java")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  return files;
}

bool wants_rewire(const fs::path& dir) {
  std::vector<std::string> lines =
      lines_of(jast::read_file(dir / "mapping.txt"));
  for (std::size_t i = 2; i < lines.size(); ++i)
    if (trim(lines[i]) == kRewireOption) return true;
  return false;
}

// Line number of the first difference, 1-based.
int first_difference(const std::string& a, const std::string& b) {
  std::vector<std::string> la = lines_of(a);
  std::vector<std::string> lb = lines_of(b);
  std::size_t n = std::min(la.size(), lb.size());
  for (std::size_t i = 0; i < n; ++i)
    if (la[i] != lb[i]) return static_cast<int>(i + 1);
  return static_cast<int>(n + 1);
}

std::string percent(std::size_t passed, std::size_t total) {
  if (total == 0) return "n/a";
  char buf[16];
  std::snprintf(buf, sizeof buf, "%.1f%%", 100.0 * passed / total);
  return buf;
}

}  // namespace

std::size_t CaseResult::passed() const {
  return std::count_if(targets.begin(), targets.end(),
                       [](const TargetResult& t) { return t.passed; });
}

std::size_t CorpusSummary::total_targets() const {
  std::size_t n = 0;
  for (const CaseResult& c : cases) n += c.targets.size();
  return n;
}

std::size_t CorpusSummary::passed_targets() const {
  std::size_t n = 0;
  for (const CaseResult& c : cases) n += c.passed();
  return n;
}

bool CorpusSummary::ok() const {
  for (const CaseResult& c : cases)
    if (!c.error.empty() || c.passed() != c.targets.size()) return false;
  return true;
}

std::string normalize_for_compare(std::string_view text) {
  std::string out;
  for (const std::string& line : lines_of(std::string(text))) {
    std::string norm;
    bool blank = false;
    for (char c : line) {
      if (c == ' ' || c == '\t') {
        blank = true;
        continue;
      }
      if (blank) norm += ' ';
      blank = false;
      norm += c;
    }
    out += norm;
    out += '\n';
  }
  while (out.size() >= 2 && out[out.size() - 1] == '\n' &&
         out[out.size() - 2] == '\n')
    out.pop_back();
  return out;
}

CorpusCase load_case(const fs::path& dir) {
  CorpusCase c;
  c.name = dir.filename().string();
  fs::path mapping = dir / "mapping.txt";
  if (!fs::is_regular_file(mapping))
    throw std::runtime_error("missing mapping.txt");
  std::vector<std::string> lines = lines_of(jast::read_file(mapping));
  if (lines.size() < 2)
    throw std::runtime_error(
        "mapping.txt needs the deprecated and updated signatures on lines 1 "
        "and 2");
  c.mapping = sigmap::make_mapping(trim(lines[0]), trim(lines[1]));

  c.example = dir / "example.java";
  if (!fs::is_regular_file(c.example))
    throw std::runtime_error("missing example.java");
  fs::path targets = dir / "targets";
  fs::path expected = dir / "expected";
  if (!fs::is_directory(targets))
    throw std::runtime_error("missing targets/ directory");
  if (!fs::is_directory(expected))
    throw std::runtime_error("missing expected/ directory");
  for (const fs::path& t : java_files(targets)) {
    fs::path e = expected / t.filename();
    if (!fs::is_regular_file(e))
      throw std::runtime_error("no expected file for targets/" +
                               t.filename().string());
    c.targets.push_back({t, e});
  }
  return c;
}

CaseResult run_case(const fs::path& dir) {
  CaseResult result;
  result.name = dir.filename().string();
  CorpusCase c;
  patchgen::SemanticPatch patch;
  try {
    c = load_case(dir);
    patchgen::GenerateOptions options;
    options.rewire_shared_args = wants_rewire(dir);
    jast::CompilationUnit example = jast::parse(jast::read_file(c.example));
    patch = patchgen::parse_patch(patchgen::render_patch(
        patchgen::generate_patch(example, c.mapping, options)));
  } catch (const std::exception& e) {
    result.error = e.what();
    return result;
  }

  for (const CorpusTarget& t : c.targets) {
    TargetResult r;
    r.name = t.target.filename().string();
    try {
      std::string source = jast::read_file(t.target);
      engine::UpdateOutcome outcome =
          engine::update_source(patch, c.mapping, source, r.name);
      std::string got = normalize_for_compare(outcome.text);
      std::string want = normalize_for_compare(jast::read_file(t.expected));
      r.passed = got == want;
      if (!r.passed)
        r.detail = "output differs from expected at line " +
                   std::to_string(first_difference(got, want));
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    result.targets.push_back(std::move(r));
  }
  return result;
}

CorpusSummary run_corpus(const fs::path& root) {
  CorpusSummary summary;
  fs::path cases = root / "cases";
  if (!fs::is_directory(cases)) return summary;
  std::vector<fs::path> dirs;
  for (const fs::directory_entry& entry : fs::directory_iterator(cases))
    if (entry.is_directory()) dirs.push_back(entry.path());
  std::sort(dirs.begin(), dirs.end());
  for (const fs::path& dir : dirs) summary.cases.push_back(run_case(dir));
  return summary;
}

std::string render_table(const CorpusSummary& summary) {
  std::size_t width = 4;
  for (const CaseResult& c : summary.cases)
    width = std::max(width, c.name.size());
  auto pad = [width](const std::string& s) {
    return s + std::string(width - s.size() + 2, ' ');
  };

  std::ostringstream out;
  out << pad("case") << "passed  total  accuracy\n";
  for (const CaseResult& c : summary.cases) {
    char row[64];
    std::snprintf(row, sizeof row, "%6zu  %5zu  %s", c.passed(),
                  c.targets.size(),
                  c.error.empty() ? percent(c.passed(), c.targets.size()).c_str()
                                  : "error");
    out << pad(c.name) << row << "\n";
  }
  char total[64];
  std::snprintf(total, sizeof total, "%6zu  %5zu  %s", summary.passed_targets(),
                summary.total_targets(),
                percent(summary.passed_targets(), summary.total_targets())
                    .c_str());
  out << pad("all") << total << "\n";

  for (const CaseResult& c : summary.cases) {
    if (!c.error.empty()) out << "\n" << c.name << ": error: " << c.error;
    for (const TargetResult& t : c.targets)
      if (!t.passed)
        out << "\n" << c.name << "/" << t.name << ": FAIL: " << t.detail;
  }
  if (!summary.ok()) out << "\n";
  out << "\n" << summary.cases.size() << " cases, "
      << summary.passed_targets() << "/" << summary.total_targets()
      << " targets passed\n";
  return out.str();
}

std::string render_json(const CorpusSummary& summary) {
  nlohmann::ordered_json cases = nlohmann::ordered_json::array();
  for (const CaseResult& c : summary.cases) {
    nlohmann::ordered_json targets = nlohmann::ordered_json::array();
    for (const TargetResult& t : c.targets) {
      nlohmann::ordered_json row{{"target", t.name}, {"passed", t.passed}};
      if (!t.passed) row["detail"] = t.detail;
      targets.push_back(row);
    }
    nlohmann::ordered_json entry{{"name", c.name},
                                 {"passed", c.passed()},
                                 {"total", c.targets.size()}};
    if (!c.error.empty()) entry["error"] = c.error;
    entry["targets"] = targets;
    cases.push_back(entry);
  }
  nlohmann::ordered_json doc{{"cases", cases},
                             {"passed", summary.passed_targets()},
                             {"total", summary.total_targets()},
                             {"ok", summary.ok()}};
  return doc.dump(2) + "\n";
}

}  // namespace api_evolve::harness
