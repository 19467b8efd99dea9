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

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>

#include "api_evolve/harness.h"

int main(int argc, char** argv) {
  CLI::App app{"Runs the golden corpus and prints per-case accuracy.",
               "api-evolve-corpus"};
  std::filesystem::path root;
  bool json = false;
  app.add_option("root", root, "Corpus root containing cases/")->required();
  app.add_flag("--json", json, "Print the summary as JSON");
  CLI11_PARSE(app, argc, argv);

  if (!std::filesystem::is_directory(root)) {
    std::cerr << "api-evolve-corpus: error: " << root.string()
              << " is not a directory\n";
    return 2;
  }
  api_evolve::harness::CorpusSummary summary =
      api_evolve::harness::run_corpus(root);
  std::cout << (json ? api_evolve::harness::render_json(summary)
                     : api_evolve::harness::render_table(summary));
  return summary.ok() ? 0 : 1;
}
