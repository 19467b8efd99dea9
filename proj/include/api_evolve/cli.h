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

#ifndef API_EVOLVE_CLI_H_
#define API_EVOLVE_CLI_H_

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace api_evolve::cli {

enum ExitCode {
  kExitOk = 0,
  kExitNothingUpdated = 1,
  kExitInputError = 2,
  kExitPatchError = 3,
  kExitUsage = 64,
};

enum class Mode { kGeneratePatch, kApplyPatch };

struct CliConfig {
  Mode mode = Mode::kGeneratePatch;
  std::string deprecated_sig;
  std::string updated_sig;
  std::filesystem::path input;
  std::filesystem::path output;
  std::optional<std::filesystem::path> patch;
  std::optional<std::filesystem::path> report;
  bool rewire_shared_args = false;
};

int run_generate(const CliConfig& cfg, std::ostream& err);
int run_apply(const CliConfig& cfg, std::ostream& err);

// Parses `args` (without the program name) and runs the selected mode.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

// Writes through a temporary file in the same directory and renames it
// into place. Throws std::runtime_error.
void write_file_atomically(const std::filesystem::path& path,
                           const std::string& content);

}  // namespace api_evolve::cli

#endif  // API_EVOLVE_CLI_H_
