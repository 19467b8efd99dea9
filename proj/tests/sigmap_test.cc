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

#include <random>

#include "api_evolve/errors.h"
#include "api_evolve/lexer.h"
#include "api_evolve/parser.h"
#include "api_evolve/sigmap.h"
#include "test_util.h"

namespace api_evolve::sigmap {
namespace {

using testing::fixture;
using testing::read;

TEST(SignatureTest, ParsesQualifiedSignature) {
  ApiSignature s = parse_signature("android.os.Vibrator#vibrate(long)");
  EXPECT_EQ(s.class_name, "android.os.Vibrator");
  EXPECT_EQ(s.method_name, "vibrate");
  EXPECT_EQ(s.param_types, std::vector<std::string>{"long"});
  EXPECT_EQ(s.to_string(), "android.os.Vibrator#vibrate(long)");
}

TEST(SignatureTest, ZeroArgsAndGenerics) {
  EXPECT_EQ(parse_signature("android.widget.TimePicker#getCurrentMinute()")
                .arity(),
            0u);
  ApiSignature g = parse_signature(
      " a.B#put( java.util.Map<String, Integer> , int[] ) ");
  EXPECT_EQ(g.arity(), 2u);
  EXPECT_EQ(g.param_types[0], "java.util.Map<String, Integer>");
  EXPECT_EQ(g.param_types[1], "int[]");
  EXPECT_EQ(parse_signature(g.to_string()), g);
}

TEST(SignatureTest, RejectsMalformedText) {
  for (const char* bad :
       {"vibrate(long)", "a.B#vibrate", "a.B#vibrate(long", "a.B#1x()",
        "a.B##x()", "a.B#x(int,)", "a.B#x(int) extra", "#x()", "a..B#x()",
        "a.B#x((int))", ""}) {
    EXPECT_THROW(parse_signature(bad), MalformedSignature) << bad;
  }
}

TEST(SignatureTest, MalformedSignatureNamesTheText) {
  try {
    parse_signature("nope");
    FAIL();
  } catch (const MalformedSignature& e) {
    EXPECT_EQ(e.text(), "nope");
    EXPECT_NE(std::string(e.what()).find("nope"), std::string::npos);
  }
}

TEST(MappingTest, IdenticalSidesAreRejected) {
  EXPECT_THROW(make_mapping("a.B#c(int)", "a.B#c(int)"), MalformedSignature);
  ApiMapping m = make_mapping("a.B#c(int)", "a.B#c(int, long)");
  EXPECT_EQ(m.deprecated.arity(), 1u);
  EXPECT_EQ(m.replacement.arity(), 2u);
}

TEST(InvocationTest, FindsCallInsideGuard) {
  jast::CompilationUnit unit =
      jast::parse(read(fixture("vibrate_target.java")));
  std::vector<CallSite> sites =
      find_invocations(unit, parse_signature("android.os.Vibrator#vibrate(long)"));
  ASSERT_EQ(sites.size(), 1u);
  const CallSite& s = sites[0];
  EXPECT_EQ(s.call->text, "vibrate");
  EXPECT_EQ(s.enclosing_method->name, "Once");
  EXPECT_EQ(s.enclosing_type->name, "Buzzer");
  ASSERT_NE(s.enclosing_stmt, nullptr);
  EXPECT_EQ(s.enclosing_stmt->kind, jast::StmtKind::kExpr);
  EXPECT_TRUE(s.in_block());
  // body block, if, then block
  ASSERT_EQ(s.ancestors.size(), 3u);
  EXPECT_EQ(s.ancestors[1]->kind, jast::StmtKind::kIf);
}

TEST(InvocationTest, FiltersByArityAndSkipsLiteralsCommentsAndOpaque) {
  jast::CompilationUnit unit = jast::parse(
      "class A {\n"
      "  long f = v.vibrate(3);\n"
      "  void m() {\n"
      "    v.vibrate(1);\n"
      "    v.vibrate(1, 2);\n"
      "    String s = \"v.vibrate(9)\"; // v.vibrate(8)\n"
      "    while (on) { v.vibrate(4); }\n"
      "    if (ok) x(); else v.vibrate(5);\n"
      "  }\n"
      "}\n");
  std::vector<CallSite> sites = find_invocations(unit, "vibrate", 1);
  ASSERT_EQ(sites.size(), 3u);
  EXPECT_EQ(sites[0].call->args()[0].text, "3");
  EXPECT_EQ(sites[0].enclosing_stmt, nullptr);
  ASSERT_NE(sites[0].enclosing_field, nullptr);
  EXPECT_EQ(sites[1].call->args()[0].text, "1");
  EXPECT_TRUE(sites[1].in_block());
  EXPECT_EQ(sites[2].call->args()[0].text, "5");
  EXPECT_FALSE(sites[2].in_block());
}

TEST(InvocationTest, NestedCallsAreFoundInSourceOrder) {
  jast::CompilationUnit unit =
      jast::parse("class A { void m() { f(f(1)); g(f(2)); } }");
  std::vector<CallSite> sites = find_invocations(unit, "f", 1);
  ASSERT_EQ(sites.size(), 3u);
  EXPECT_EQ(sites[0].call->args()[0].kind, jast::ExprKind::kMethodCall);
  EXPECT_EQ(sites[1].call->args()[0].text, "1");
  EXPECT_EQ(sites[2].call->args()[0].text, "2");
  EXPECT_EQ(sites[0].enclosing_stmt, sites[1].enclosing_stmt);
}

// Oracle: a token scan that counts `name (` with the given number of
// top-level arguments.
std::size_t textual_count(std::string_view source, std::string_view name,
                          std::size_t arity) {
  std::vector<jast::Token> tokens = jast::tokenize(source);
  std::size_t n = 0;
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    if (tokens[i].text != name || tokens[i + 1].text != "(") continue;
    if (i > 0 && tokens[i - 1].text == "new") continue;
    int depth = 0;
    std::size_t args = 0;
    bool any = false;
    for (std::size_t j = i + 1; j < tokens.size(); ++j) {
      std::string_view t = tokens[j].text;
      if (t == "(") {
        ++depth;
        continue;
      }
      if (t == ")" && --depth == 0) break;
      if (depth == 1 && t == ",") ++args;
      any = true;
    }
    if ((any ? args + 1 : 0) == arity) ++n;
  }
  return n;
}

std::string random_call(std::mt19937& rng, int depth) {
  static const char* kNames[] = {"foo", "bar", "foo", "baz"};
  std::string name = kNames[rng() % 4];
  std::string receiver = rng() % 2 ? "obj." : "";
  std::size_t arity = rng() % 3;
  std::string out = receiver + name + "(";
  for (std::size_t i = 0; i < arity; ++i) {
    if (i) out += ", ";
    switch (depth > 0 ? rng() % 4 : rng() % 2) {
      case 0: out += std::to_string(rng() % 100); break;
      case 1: out += "x"; break;
      case 2: out += random_call(rng, depth - 1); break;
      default: out += "a + " + random_call(rng, depth - 1); break;
    }
  }
  return out + ")";
}

TEST(InvocationTest, CountMatchesTextualScanOnRandomPrograms) {
  std::mt19937 rng(11);
  for (int round = 0; round < 200; ++round) {
    std::string body;
    int statements = 1 + rng() % 6;
    for (int i = 0; i < statements; ++i) {
      std::string call = random_call(rng, 2);
      switch (rng() % 4) {
        case 0: body += "    " + call + ";\n"; break;
        case 1: body += "    int y" + std::to_string(i) + " = " + call + ";\n"; break;
        case 2: body += "    if (c) {\n      " + call + ";\n    }\n"; break;
        default: body += "    return " + call + ";\n"; break;
      }
    }
    std::string src = "class R {\n  void m() {\n" + body + "  }\n}\n";
    jast::CompilationUnit unit = jast::parse(src);
    for (std::size_t arity = 0; arity < 3; ++arity)
      EXPECT_EQ(find_invocations(unit, "foo", arity).size(),
                textual_count(src, "foo", arity))
          << "arity " << arity << "\n" << src;
  }
}

}  // namespace
}  // namespace api_evolve::sigmap
