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

#include <functional>
#include <random>

#include "api_evolve/engine.h"
#include "api_evolve/errors.h"
#include "api_evolve/parser.h"
#include "api_evolve/patchgen.h"
#include "api_evolve/printer.h"
#include "test_util.h"

namespace api_evolve::engine {
namespace {

using jast::Expr;
using jast::Stmt;
using patchgen::MetaKind;
using patchgen::MetaVar;
using testing::fixture;
using testing::read;

const sigmap::ApiMapping kVibrate = sigmap::make_mapping(
    "android.os.Vibrator#vibrate(long)",
    "android.os.Vibrator#vibrate(android.os.VibrationEffect)");

patchgen::SemanticPatch vibrate_patch() {
  return patchgen::parse_patch(patchgen::render_patch(patchgen::generate_patch(
      jast::parse(read(fixture("vibrate_example.java"))), kVibrate)));
}

patchgen::SemanticPatch case_patch(const testing::CorpusCaseFiles& c) {
  return patchgen::parse_patch(patchgen::render_patch(patchgen::generate_patch(
      jast::parse(read(c.dir / "example.java")), c.mapping)));
}

testing::CorpusCaseFiles corpus_case(const std::string& name) {
  for (const testing::CorpusCaseFiles& c : testing::corpus_cases())
    if (c.dir.filename() == name) return c;
  throw std::runtime_error("no corpus case " + name);
}

Stmt stmt(const std::string& text) { return jast::parse_statement(text); }

TEST(MatchTest, BindsMetavariables) {
  std::vector<MetaVar> metas = {{MetaKind::kExpression, "e"},
                                {MetaKind::kIdentifier, "r"}};
  std::optional<MetaBinding> b =
      match_statement(stmt("e = r.get(1);"), stmt("x.y = p.get(1);"), metas);
  ASSERT_TRUE(b);
  EXPECT_EQ(jast::render_expr(b->assignments.at("e")), "x.y");
  EXPECT_EQ(jast::render_expr(b->assignments.at("r")), "p");
}

TEST(MatchTest, IdentifierMetavariablesOnlyBindNames) {
  std::vector<MetaVar> metas = {{MetaKind::kIdentifier, "r"}};
  EXPECT_FALSE(match_statement(stmt("r.get();"), stmt("a.b().get();"), metas));
  metas[0].kind = MetaKind::kExpression;
  EXPECT_TRUE(match_statement(stmt("r.get();"), stmt("a.b().get();"), metas));
}

TEST(MatchTest, RepeatedMetavariableMustAgree) {
  std::vector<MetaVar> metas = {{MetaKind::kExpression, "e"}};
  EXPECT_TRUE(match_statement(stmt("f(e, e);"), stmt("f(a + 1, a + 1);"), metas));
  EXPECT_FALSE(match_statement(stmt("f(e, e);"), stmt("f(a + 1, a + 2);"), metas));
}

TEST(MatchTest, OpaqueAndShapeMismatches) {
  std::vector<MetaVar> metas = {{MetaKind::kExpression, "e"}};
  EXPECT_FALSE(match_statement(stmt("f(e);"), stmt("assert x;"), metas));
  EXPECT_FALSE(match_statement(stmt("f(e);"), stmt("f(a, b);"), metas));
  EXPECT_FALSE(match_statement(stmt("f(e);"), stmt("g(a);"), metas));
  EXPECT_FALSE(match_statement(stmt("return f(e);"), stmt("f(a);"), metas));
  EXPECT_TRUE(match_statement(stmt("x = (Foo<A, B>) e;"),
                              stmt("x = (Foo<A,B>) y;"), metas));
}

// Random expression trees for the binding oracle.
Expr random_expr(std::mt19937& rng, int depth) {
  static const char* kNames[] = {"a", "b", "c"};
  int pick = depth <= 0 ? rng() % 2 : rng() % 5;
  switch (pick) {
    case 0: return Expr::name(kNames[rng() % 3]);
    case 1: return Expr::literal(jast::LiteralKind::kInteger,
                                 std::to_string(rng() % 3));
    case 2: {
      std::vector<Expr> args;
      for (std::size_t i = rng() % 3; i > 0; --i)
        args.push_back(random_expr(rng, depth - 1));
      std::optional<Expr> receiver;
      if (rng() % 2) receiver = random_expr(rng, depth - 1);
      return Expr::method_call(receiver, rng() % 2 ? "f" : "g", args);
    }
    case 3: return Expr::binary(rng() % 2 ? "+" : "*", random_expr(rng, depth - 1),
                                random_expr(rng, depth - 1));
    default: return Expr::field_access(random_expr(rng, depth - 1),
                                       rng() % 2 ? "x" : "y");
  }
}

void preorder(Expr& e, std::vector<Expr*>& out) {
  out.push_back(&e);
  for (Expr& c : e.operands) preorder(c, out);
}

void subtrees(const Expr& e, std::vector<Expr>& out) {
  out.push_back(e);
  for (const Expr& c : e.operands) subtrees(c, out);
}

void names_in(const Expr& e, std::set<std::string>& out) {
  if (e.is_name()) out.insert(e.text);
  for (const Expr& c : e.operands) names_in(c, out);
}

TEST(MatchTest, AgreesWithBruteForceBindingOracle) {
  std::mt19937 rng(5);
  int matched = 0, rejected = 0;
  for (int round = 0; round < 400; ++round) {
    Expr target = random_expr(rng, 3);
    Expr pattern = target;
    std::vector<MetaVar> metas;
    for (int k = 0, n = 1 + rng() % 3; k < n; ++k)
      metas.push_back({rng() % 3 ? MetaKind::kExpression : MetaKind::kIdentifier,
                       "m" + std::to_string(k)});
    // Holes, sometimes reusing a metavariable.
    for (int h = 0, n = 1 + rng() % 3; h < n; ++h) {
      std::vector<Expr*> nodes;
      preorder(pattern, nodes);
      *nodes[rng() % nodes.size()] = Expr::name(metas[rng() % metas.size()].name);
    }
    // Occasionally perturb a concrete node so nothing can match.
    if (rng() % 4 == 0) {
      std::vector<Expr*> nodes;
      preorder(pattern, nodes);
      Expr* n = nodes[rng() % nodes.size()];
      if (!(n->is_name() && n->text[0] == 'm')) n->text += "_";
    }

    std::set<std::string> used;
    names_in(pattern, used);
    std::vector<const MetaVar*> live;
    for (const MetaVar& m : metas)
      if (used.count(m.name)) live.push_back(&m);
    std::vector<Expr> candidates;
    subtrees(target, candidates);

    // Every assignment of live metavariables to target subtrees.
    std::vector<std::map<std::string, Expr>> valid;
    std::map<std::string, Expr> current;
    std::function<void(std::size_t)> enumerate = [&](std::size_t i) {
      if (i == live.size()) {
        if (jast::same_structure(substitute(pattern, current), target))
          valid.push_back(current);
        return;
      }
      for (const Expr& c : candidates) {
        if (live[i]->kind == MetaKind::kIdentifier && !c.is_name()) continue;
        current[live[i]->name] = c;
        enumerate(i + 1);
      }
      current.erase(live[i]->name);
    };
    enumerate(0);

    std::optional<MetaBinding> got = match_statement(
        Stmt::expression(pattern), Stmt::expression(target), metas);
    ASSERT_EQ(got.has_value(), !valid.empty())
        << jast::render_expr(pattern) << " vs " << jast::render_expr(target);
    if (!got) {
      ++rejected;
      continue;
    }
    ++matched;
    EXPECT_TRUE(jast::same_structure(substitute(pattern, got->assignments),
                                     target));
    bool agrees = std::any_of(valid.begin(), valid.end(), [&](const auto& v) {
      for (const auto& [name, value] : v) {
        auto it = got->assignments.find(name);
        if (it == got->assignments.end() ||
            !jast::same_structure(it->second, value))
          return false;
      }
      return true;
    });
    EXPECT_TRUE(agrees) << jast::render_expr(pattern);
  }
  EXPECT_GT(matched, 100);
  EXPECT_GT(rejected, 30);
}

TEST(SubstituteTest, RenamesLocalDeclarations) {
  Stmt s = substitute(stmt("T t = f(e);"), {{"t", Expr::name("u")},
                                             {"e", jast::parse_expression("a + 1")}});
  EXPECT_EQ(jast::render_stmt(s), "T u = f(a + 1);");
}

TEST(ApplyTest, VibrateTargetGetsGuardedPair) {
  std::string src = read(fixture("vibrate_target.java"));
  UpdateOutcome out = update_source(vibrate_patch(), kVibrate, src);
  EXPECT_EQ(out.text,
            "package com.example.buzz;\n\n"
            "import android.os.Vibrator;\n"
            "import android.os.VibrationEffect;\n\n"
            "public class Buzzer {\n"
            "    private Vibrator MyVibrator;\n\n"
            "    public void Once(long milliseconds) {\n"
            "        if (MyVibrator.hasVibrator()) {\n"
            "            if (android.os.Build.VERSION.SDK_INT >= "
            "android.os.Build.VERSION_CODES.O) {\n"
            "                MyVibrator.vibrate(VibrationEffect.createOneShot(50, 175));\n"
            "            } else {\n"
            "                MyVibrator.vibrate(milliseconds);\n"
            "            }\n"
            "        }\n"
            "    }\n"
            "}\n");
  EXPECT_EQ(out.report.sites_found, 1u);
  EXPECT_EQ(out.report.sites_updated, 1u);
  EXPECT_TRUE(out.report.skipped.empty());
}

TEST(ApplyTest, SkipReasonsAndLines) {
  std::string src =
      "class T {\n"
      "  void f(Vibrator v, boolean quiet) {\n"
      "    v.vibrate(1);\n"
      "    if (quiet) x(); else v.vibrate(2);\n"
      "    if (Build.VERSION.SDK_INT < 26) {\n"
      "      v.vibrate(3);\n"
      "    }\n"
      "    v.vibrate(4);\n"
      "  }\n"
      "}\n";
  UpdateOutcome out = update_source(vibrate_patch(), kVibrate, src, "T.java");
  EXPECT_EQ(out.report.file, "T.java");
  EXPECT_EQ(out.report.sites_found, 4u);
  EXPECT_EQ(out.report.sites_updated, 2u);
  ASSERT_EQ(out.report.skipped.size(), 2u);
  EXPECT_EQ(out.report.skipped[0].line, 4);
  EXPECT_EQ(out.report.skipped[0].reason, "NonStatementContext");
  EXPECT_EQ(out.report.skipped[1].line, 6);
  EXPECT_EQ(out.report.skipped[1].reason, "AlreadyGuarded");
}

TEST(ApplyTest, NothingToUpdateReturnsInput) {
  std::string src = "class T { void f() { g(); } }\n";
  UpdateOutcome out = update_source(vibrate_patch(), kVibrate, src);
  EXPECT_EQ(out.text, src);
  EXPECT_EQ(out.report.sites_found, 0u);
}

TEST(ApplyTest, RemoveLinesAreRejected) {
  patchgen::SemanticPatch p = patchgen::parse_patch(
      "@r@\nidentifier classIden;\n@@\n...\n+ if (SDK_INT >= 1) {\n"
      "- classIden.c();\n+ classIden.b();\n+ } else {\nclassIden.a();\n+ }\n");
  EXPECT_THROW(apply_patch(p, jast::parse("class T { void f() { o.a(); } }")),
               MalformedPatch);
}

TEST(ApplyTest, CrlfFilesGetCrlfInsertions) {
  std::string src = read(fixture("crlf.java"));
  UpdateOutcome out = update_source(vibrate_patch(), kVibrate, src);
  EXPECT_EQ(out.report.sites_updated, 1u);
  std::size_t lf = testing::count_occurrences(out.text, "\n");
  EXPECT_EQ(testing::count_occurrences(out.text, "\r\n"), lf);
}

TEST(ApplyTest, RewiredArgumentKeepsTargetExpression) {
  std::string example =
      "class E {\n  void f(Vibrator v) {\n    long ms = 10;\n"
      "    if (Build.VERSION.SDK_INT >= 26) {\n"
      "      v.vibrate(VibrationEffect.createOneShot(ms, 255));\n"
      "    } else {\n      v.vibrate(ms);\n    }\n  }\n}\n";
  patchgen::GenerateOptions rewire;
  rewire.rewire_shared_args = true;
  patchgen::SemanticPatch p = patchgen::parse_patch(patchgen::render_patch(
      patchgen::generate_patch(jast::parse(example), kVibrate, rewire)));
  std::string target =
      "class T {\n    void f(Vibrator v, long d) {\n        v.vibrate(d * 2);\n"
      "    }\n}\n";
  UpdateOutcome out = update_source(p, kVibrate, target);
  EXPECT_NE(out.text.find("v.vibrate(VibrationEffect.createOneShot(d * 2, 255));"),
            std::string::npos)
      << out.text;
  EXPECT_NE(out.text.find("            v.vibrate(d * 2);\n"), std::string::npos)
      << out.text;
  EXPECT_EQ(out.text.find("normArg"), std::string::npos);
}

TEST(ApplyTest, ThreeSitesGiveThreeGuards) {
  testing::CorpusCaseFiles c = corpus_case("current_hour");
  UpdateOutcome out = update_source(case_patch(c), c.mapping,
                                    read(c.dir / "targets/Timer.java"));
  EXPECT_EQ(out.report.sites_updated, 3u);
  EXPECT_EQ(testing::count_occurrences(
                out.text, "if (Build.VERSION.SDK_INT < Build.VERSION_CODES.M) {"),
            3u);
  EXPECT_EQ(testing::count_occurrences(out.text, "} else {\n"), 3u);
}

TEST(ApplyTest, CorpusOutputsAreFixedPoints) {
  for (const testing::CorpusCaseFiles& c : testing::corpus_cases()) {
    patchgen::SemanticPatch p = case_patch(c);
    for (const auto& path : testing::java_files_under(c.dir / "targets")) {
      UpdateOutcome once = update_source(p, c.mapping, read(path));
      UpdateOutcome twice = update_source(p, c.mapping, once.text);
      EXPECT_EQ(twice.text, once.text) << path;
      EXPECT_EQ(twice.report.sites_updated, 0u) << path;
      EXPECT_EQ(once.text.find("normArg"), std::string::npos) << path;
      EXPECT_EQ(once.text.find("newParameterVariable"), std::string::npos)
          << path;
    }
  }
}

TEST(TransplantTest, ArityClashRenamesAndTypeIsCopied) {
  testing::CorpusCaseFiles c = corpus_case("get_drawable");
  patchgen::SemanticPatch p = case_patch(c);
  jast::CompilationUnit target = jast::parse(read(c.dir / "targets/Badges.java"));
  TransplantPlan plan = plan_transplant(p, target);
  EXPECT_EQ(plan.renames.at("defaultTheme"), "defaultTheme_androevolve");
  ASSERT_EQ(plan.definitions.size(), 2u);
  EXPECT_EQ(plan.definitions[0].kind, DefinitionKind::kType);
  EXPECT_FALSE(plan.definitions[0].reuse);
  EXPECT_EQ(plan.definitions[0].text.rfind("class ThemeHolder {", 0), 0u);
  EXPECT_EQ(plan.definitions[1].name, "defaultTheme_androevolve");
  EXPECT_EQ(plan.imports, std::vector<std::string>{"android.os.Build"});
}

TEST(TransplantTest, ExistingDefinitionsAreReused) {
  testing::CorpusCaseFiles c = corpus_case("get_drawable");
  patchgen::SemanticPatch p = case_patch(c);
  jast::CompilationUnit target = jast::parse(
      "import android.os.*;\nclass K {\n  static class ThemeHolder {}\n"
      "  private static Resources.Theme defaultTheme() { return null; }\n}\n");
  TransplantPlan plan = plan_transplant(p, target);
  EXPECT_TRUE(plan.renames.empty());
  ASSERT_EQ(plan.definitions.size(), 2u);
  EXPECT_TRUE(plan.definitions[0].reuse);
  EXPECT_TRUE(plan.definitions[1].reuse);
  EXPECT_EQ(plan.imports,
            std::vector<std::string>{"android.content.res.Resources"});
  TransplantResult r = transplant_definitions(target, plan);
  EXPECT_TRUE(r.copied.empty());
}

TEST(TransplantTest, ClashingImportIsQualifiedInstead) {
  std::string src =
      "import com.other.VibrationEffect;\nclass T {\n"
      "    void f(Vibrator v) {\n        v.vibrate(9);\n    }\n}\n";
  UpdateOutcome out = update_source(vibrate_patch(), kVibrate, src);
  EXPECT_NE(out.text.find(
                "v.vibrate(android.os.VibrationEffect.createOneShot(50, 175));"),
            std::string::npos)
      << out.text;
  EXPECT_EQ(out.text.find("import android.os.VibrationEffect;"),
            std::string::npos);
}

TEST(TransplantTest, MembersGoIntoPrimaryType) {
  testing::CorpusCaseFiles c = corpus_case("get_drawable");
  UpdateOutcome out = update_source(case_patch(c), c.mapping,
                                    read(c.dir / "targets/Toolbar.java"));
  EXPECT_EQ(out.report.copied,
            (std::vector<std::string>{"ThemeHolder", "defaultTheme"}));
  std::size_t method = out.text.find("    private static Resources.Theme defaultTheme()");
  std::size_t type = out.text.find("\nclass ThemeHolder {");
  ASSERT_NE(method, std::string::npos) << out.text;
  ASSERT_NE(type, std::string::npos) << out.text;
  EXPECT_LT(method, type);
  EXPECT_NO_THROW(jast::parse(out.text));
}

}  // namespace
}  // namespace api_evolve::engine
