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

#include "api_evolve/cli.h"

#include <unistd.h>

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>

#include "api_evolve/engine.h"
#include "api_evolve/errors.h"
#include "api_evolve/parser.h"
#include "api_evolve/patchgen.h"

namespace api_evolve::cli {
namespace {

constexpr const char* kProgram = "api-evolve";

void error(std::ostream& err, const std::string& message) {
  err << kProgram << ": error: " << message << "\n";
}

nlohmann::json report_json(const engine::UpdateReport& report) {
  nlohmann::json skipped = nlohmann::json::array();
  for (const engine::UpdateReport::Skip& s : report.skipped)
    skipped.push_back({{"line", s.line}, {"reason", s.reason}});
  return {{"file", report.file},
          {"sitesFound", report.sites_found},
          {"sitesUpdated", report.sites_updated},
          {"skipped", skipped},
          {"copied", report.copied}};
}

}  // namespace

void write_file_atomically(const std::filesystem::path& path,
                           const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw std::runtime_error("cannot write " + path.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw std::runtime_error("cannot write " + path.string() + ": " +
                             ec.message());
  }
}

int run_generate(const CliConfig& cfg, std::ostream& err) {
  sigmap::ApiMapping mapping;
  try {
    mapping = sigmap::make_mapping(cfg.deprecated_sig, cfg.updated_sig);
  } catch (const MalformedSignature& e) {
    error(err, e.what());
    return kExitUsage;
  }
  jast::CompilationUnit example;
  try {
    example = jast::parse(jast::read_file(cfg.input));
  } catch (const UnbalancedSource& e) {
    error(err, cfg.input.string() + ": cannot parse: " + e.what());
    return kExitInputError;
  } catch (const std::runtime_error& e) {
    error(err, e.what());
    return kExitInputError;
  }
  std::string text;
  try {
    patchgen::GenerateOptions options;
    options.rewire_shared_args = cfg.rewire_shared_args;
    text = patchgen::render_patch(
        patchgen::generate_patch(example, mapping, options));
  } catch (const ExampleShapeError& e) {
    error(err, cfg.input.string() + ": unsupported example: " + e.what());
    return kExitPatchError;
  } catch (const ResolutionError& e) {
    error(err, cfg.input.string() + ": " + e.what());
    return kExitPatchError;
  }
  try {
    write_file_atomically(cfg.output, text);
  } catch (const std::runtime_error& e) {
    error(err, e.what());
    return kExitInputError;
  }
  return kExitOk;
}

int run_apply(const CliConfig& cfg, std::ostream& err) {
  sigmap::ApiMapping mapping;
  try {
    mapping = sigmap::make_mapping(cfg.deprecated_sig, cfg.updated_sig);
  } catch (const MalformedSignature& e) {
    error(err, e.what());
    return kExitUsage;
  }
  std::string source;
  std::string patch_text;
  try {
    source = jast::read_file(cfg.input);
    patch_text = jast::read_file(*cfg.patch);
  } catch (const std::runtime_error& e) {
    error(err, e.what());
    return kExitInputError;
  }

  engine::UpdateOutcome outcome;
  try {
    patchgen::SemanticPatch patch = patchgen::parse_patch(patch_text);
    outcome = engine::update_source(patch, mapping, source, cfg.input.string());
  } catch (const MalformedPatch& e) {
    error(err, cfg.patch->string() + ": " + e.what());
    return kExitPatchError;
  } catch (const UnbalancedSource& e) {
    error(err, cfg.input.string() + ": cannot parse: " + e.what());
    return kExitInputError;
  } catch (const MultipleUse& e) {
    error(err, cfg.input.string() + ": " + e.what());
    return kExitPatchError;
  }

  try {
    write_file_atomically(cfg.output, outcome.text);
    if (cfg.report)
      write_file_atomically(*cfg.report,
                            report_json(outcome.report).dump(2) + "\n");
  } catch (const std::runtime_error& e) {
    error(err, e.what());
    return kExitInputError;
  }
  if (outcome.report.sites_updated == 0) {
    error(err, cfg.input.string() + ": no call site was updated (" +
                   std::to_string(outcome.report.sites_found) + " found)");
    return kExitNothingUpdated;
  }
  return kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Updates deprecated API calls using a semantic patch learned "
               "from one after-update example.",
               kProgram};
  std::vector<std::string> generate;
  std::vector<std::string> apply;
  CliConfig cfg;
  std::string patch;
  std::string report;

  auto* gen_opt =
      app.add_option("--generate-patch", generate,
                     "Create a patch: DEPRECATED_SIG UPDATED_SIG")
          ->expected(2)
          ->type_name("SIG SIG");
  auto* apply_opt =
      app.add_option("--apply-patch", apply,
                     "Apply a patch: DEPRECATED_SIG UPDATED_SIG")
          ->expected(2)
          ->type_name("SIG SIG");
  gen_opt->excludes(apply_opt);
  app.add_option("--input", cfg.input,
                 "Example file (generate) or target file (apply)")
      ->required();
  app.add_option("--output", cfg.output, "Where to write the result")
      ->required();
  auto* patch_opt =
      app.add_option("--patch", patch, "Patch file to apply");
  auto* report_opt =
      app.add_option("--report", report, "Write a JSON update report");
  app.add_flag("--rewire-shared-args", cfg.rewire_shared_args,
               "Keep deprecated-call arguments as metavariables when the "
               "replacement arguments are computed from them");
  patch_opt->needs(apply_opt);
  report_opt->needs(apply_opt);

  std::vector<const char*> argv{kProgram};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    error(err, e.what());
    err << "Run with --help for usage.\n";
    return kExitUsage;
  }

  if (generate.empty() && apply.empty()) {
    error(err, "one of --generate-patch or --apply-patch is required");
    return kExitUsage;
  }
  if (!apply.empty() && patch.empty()) {
    error(err, "--apply-patch requires --patch");
    return kExitUsage;
  }
  const std::vector<std::string>& sigs = generate.empty() ? apply : generate;
  cfg.mode = generate.empty() ? Mode::kApplyPatch : Mode::kGeneratePatch;
  cfg.deprecated_sig = sigs[0];
  cfg.updated_sig = sigs[1];
  if (!patch.empty()) cfg.patch = patch;
  if (!report.empty()) cfg.report = report;
  return cfg.mode == Mode::kGeneratePatch ? run_generate(cfg, err)
                                          : run_apply(cfg, err);
}

}  // namespace api_evolve::cli
