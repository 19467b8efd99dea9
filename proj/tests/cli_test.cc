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

#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "api_evolve/cli.h"
#include "test_util.h"

namespace api_evolve::cli {
namespace {

using testing::fixture;
using testing::read;
using testing::TempDir;
using testing::write;

const char* kOld = "android.os.Vibrator#vibrate(long)";
const char* kNew = "android.os.Vibrator#vibrate(android.os.VibrationEffect)";

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    write(dir_ / "example.java", read(fixture("vibrate_example.java")));
    write(dir_ / "main.java", read(fixture("vibrate_target.java")));
  }

  std::string path(const std::string& name) { return (dir_ / name).string(); }

  Outcome generate() {
    return invoke({"--generate-patch", kOld, kNew, "--input", path("example.java"),
                "--output", path("vibrate_update.cocci")});
  }

  Outcome apply(const std::string& input, const std::string& output,
            const std::vector<std::string>& extra = {}) {
    std::vector<std::string> args = {"--apply-patch", kOld, kNew, "--input",
                                     path(input), "--patch",
                                     path("vibrate_update.cocci"), "--output",
                                     path(output)};
    args.insert(args.end(), extra.begin(), extra.end());
    return invoke(args);
  }

  std::vector<std::string> entries() {
    std::vector<std::string> out;
    for (const auto& e : std::filesystem::directory_iterator(dir_.path()))
      out.push_back(e.path().filename().string());
    std::sort(out.begin(), out.end());
    return out;
  }

  TempDir dir_;
};

TEST_F(CliTest, GenerateWritesPatch) {
  Outcome r = generate();
  EXPECT_EQ(r.code, kExitOk) << r.err;
  std::string patch = read(path("vibrate_update.cocci"));
  EXPECT_NE(patch.find("+ classIden.vibrate(newParameterVariable0);"),
            std::string::npos);
  EXPECT_NE(patch.find("@needs@"), std::string::npos);
}

TEST_F(CliTest, ApplyWritesOutputAndReport) {
  ASSERT_EQ(generate().code, kExitOk);
  Outcome r = apply("main.java", "main_updated.java", {"--report", path("r.json")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  std::string out = read(path("main_updated.java"));
  EXPECT_NE(out.find("MyVibrator.vibrate(VibrationEffect.createOneShot(50, 175));"),
            std::string::npos);
  nlohmann::json report = nlohmann::json::parse(read(path("r.json")));
  EXPECT_EQ(report["file"], path("main.java"));
  EXPECT_EQ(report["sitesFound"], 1);
  EXPECT_EQ(report["sitesUpdated"], 1);
  EXPECT_TRUE(report["skipped"].is_array());
  EXPECT_TRUE(report["copied"].is_array());
  // No temporary files are left behind by the atomic writes.
  EXPECT_EQ(entries(), (std::vector<std::string>{
                           "example.java", "main.java", "main_updated.java",
                           "r.json", "vibrate_update.cocci"}));
}

TEST_F(CliTest, ZeroInvocationsExitsOneWithInputCopied) {
  ASSERT_EQ(generate().code, kExitOk);
  std::string src = "class Q {\n    void f() {\n        g();\n    }\n}\n";
  write(dir_ / "q.java", src);
  Outcome r = apply("q.java", "q_out.java", {"--report", path("q.json")});
  EXPECT_EQ(r.code, kExitNothingUpdated);
  EXPECT_EQ(read(path("q_out.java")), src);
  nlohmann::json report = nlohmann::json::parse(read(path("q.json")));
  EXPECT_EQ(report["sitesFound"], 0);
}

TEST_F(CliTest, AllSitesSkippedExitsOne) {
  ASSERT_EQ(generate().code, kExitOk);
  write(dir_ / "g.java",
        "class G {\n  void f(Vibrator v) {\n    if (Build.VERSION.SDK_INT < 26) {\n"
        "      v.vibrate(1);\n    }\n  }\n}\n");
  Outcome r = apply("g.java", "g_out.java", {"--report", path("g.json")});
  EXPECT_EQ(r.code, kExitNothingUpdated);
  nlohmann::json report = nlohmann::json::parse(read(path("g.json")));
  ASSERT_EQ(report["skipped"].size(), 1u);
  EXPECT_EQ(report["skipped"][0]["line"], 4);
  EXPECT_EQ(report["skipped"][0]["reason"], "AlreadyGuarded");
}

TEST_F(CliTest, CorruptedPatchExitsThreeWithLineNumber) {
  ASSERT_EQ(generate().code, kExitOk);
  std::string patch = read(path("vibrate_update.cocci"));
  write(dir_ / "vibrate_update.cocci",
        patch.substr(0, patch.find("+ classIden.vibrate(newParameterVariable0)") + 10));
  write(dir_ / "main_updated.java", "previous contents");
  Outcome r = apply("main.java", "main_updated.java");
  EXPECT_EQ(r.code, kExitPatchError);
  EXPECT_NE(r.err.find("line "), std::string::npos) << r.err;
  EXPECT_EQ(read(path("main_updated.java")), "previous contents");
}

TEST_F(CliTest, ExampleWithoutIfElseExitsThree) {
  write(dir_ / "example.java",
        "class E { void f() { v.vibrate(VibrationEffect.createOneShot(1, 2)); } }");
  Outcome r = generate();
  EXPECT_EQ(r.code, kExitPatchError);
  EXPECT_NE(r.err.find("if/else"), std::string::npos) << r.err;
  EXPECT_FALSE(std::filesystem::exists(path("vibrate_update.cocci")));
}

TEST_F(CliTest, UnresolvableExampleExitsThree) {
  write(dir_ / "example.java",
        "class E { void f(VibrationEffect e) {\n"
        "  if (Build.VERSION.SDK_INT >= 26) { v.vibrate(e); }\n"
        "  else { v.vibrate(5); } } }");
  Outcome r = generate();
  EXPECT_EQ(r.code, kExitPatchError);
  EXPECT_NE(r.err.find("'e'"), std::string::npos) << r.err;
}

TEST_F(CliTest, InputProblemsExitTwo) {
  EXPECT_EQ(invoke({"--generate-patch", kOld, kNew, "--input", path("missing.java"),
                 "--output", path("p.cocci")})
                .code,
            kExitInputError);
  write(dir_ / "broken.java", "class B { void f() { ");
  Outcome r = invoke({"--generate-patch", kOld, kNew, "--input", path("broken.java"),
               "--output", path("p.cocci")});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("broken.java"), std::string::npos);
  ASSERT_EQ(generate().code, kExitOk);
  EXPECT_EQ(apply("broken.java", "o.java").code, kExitInputError);
  EXPECT_FALSE(std::filesystem::exists(path("o.java")));
}

TEST_F(CliTest, UsageErrorsExitSixtyFour) {
  EXPECT_EQ(invoke({"--generate-patch", kOld, kNew, "--input", path("example.java")})
                .code,
            kExitUsage);
  EXPECT_EQ(invoke({"--input", path("example.java"), "--output", path("x")}).code,
            kExitUsage);
  EXPECT_EQ(invoke({"--generate-patch", kOld, "--input", path("example.java"),
                 "--output", path("x")})
                .code,
            kExitUsage);
  EXPECT_EQ(invoke({"--generate-patch", kOld, kNew, "--apply-patch", kOld, kNew,
                 "--input", path("example.java"), "--output", path("x")})
                .code,
            kExitUsage);
  EXPECT_EQ(invoke({"--generate-patch", kOld, kNew, "--input", path("example.java"),
                 "--output", path("x"), "--patch", path("p")})
                .code,
            kExitUsage);
  EXPECT_EQ(invoke({"--apply-patch", kOld, kNew, "--input", path("main.java"),
                 "--output", path("x")})
                .code,
            kExitUsage);
  EXPECT_EQ(invoke({"--generate-patch", "not-a-signature", kNew, "--input",
                 path("example.java"), "--output", path("x")})
                .code,
            kExitUsage);
  EXPECT_EQ(invoke({"--generate-patch", kOld, kOld, "--input",
                 path("example.java"), "--output", path("x")})
                .code,
            kExitUsage);
}

TEST_F(CliTest, HelpExitsZero) {
  Outcome r = invoke({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("--generate-patch"), std::string::npos);
  EXPECT_NE(r.out.find("--rewire-shared-args"), std::string::npos);
}

TEST_F(CliTest, AtomicWriteReplacesExistingFile) {
  write(dir_ / "f.txt", "old");
  write_file_atomically(dir_ / "f.txt", "new");
  EXPECT_EQ(read(path("f.txt")), "new");
  EXPECT_THROW(write_file_atomically(dir_ / "no/such/dir/f.txt", "x"),
               std::runtime_error);
}

}  // namespace
}  // namespace api_evolve::cli
