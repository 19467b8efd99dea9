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

#include "api_evolve/ast.h"
#include "api_evolve/errors.h"
#include "api_evolve/lexer.h"
#include "api_evolve/parser.h"
#include "api_evolve/printer.h"
#include "test_util.h"

namespace api_evolve::jast {
namespace {

using testing::all_java_files;
using testing::fixture;
using testing::read;

std::vector<std::string> token_texts(std::string_view source) {
  std::vector<std::string> out;
  for (const Token& t : tokenize(source)) out.emplace_back(t.text);
  return out;
}

TEST(LexerTest, DropsWhitespaceAndComments) {
  EXPECT_EQ(token_texts("a /* x */ += // y\n 0x1F;"),
            (std::vector<std::string>{"a", "+=", "0x1F", ";"}));
}

TEST(LexerTest, SplitsClosingAngleBrackets) {
  EXPECT_EQ(token_texts("List<List<T>> x"),
            (std::vector<std::string>{"List", "<", "List", "<", "T", ">", ">",
                                      "x"}));
}

TEST(LexerTest, KeepsLiteralLexemes) {
  std::vector<Token> tokens = tokenize(R"(1_000L 2.5e3f 'c' "s\"q" '\n')");
  ASSERT_EQ(tokens.size(), 5u);
  EXPECT_EQ(tokens[0].kind, TokenKind::kInteger);
  EXPECT_EQ(tokens[0].text, "1_000L");
  EXPECT_EQ(tokens[1].kind, TokenKind::kFloating);
  EXPECT_EQ(tokens[2].kind, TokenKind::kChar);
  EXPECT_EQ(tokens[3].kind, TokenKind::kString);
  EXPECT_EQ(tokens[3].text, R"("s\"q")");
}

TEST(LexerTest, UnterminatedConstructsThrow) {
  EXPECT_THROW(tokenize("a = \"open"), UnbalancedSource);
  EXPECT_THROW(tokenize("a /* never closed"), UnbalancedSource);
}

TEST(LexerTest, IdentifierUtilitiesSkipStringsAndComments) {
  std::string src = "foo(1); // foo\n String s = \"foo\"; a.foo = foo;";
  EXPECT_EQ(count_identifier(src, "foo"), 3u);
  EXPECT_TRUE(contains_identifier(src, "s"));
  EXPECT_FALSE(contains_identifier(src, "fo"));
  EXPECT_EQ(rewrite_identifiers(src, {{"foo", "bar"}}),
            "bar(1); // foo\n String s = \"foo\"; a.foo = bar;");
}

TEST(ParserTest, MinimalClass) {
  CompilationUnit unit = parse("class A { void m() { v.vibrate(5); } }");
  ASSERT_EQ(unit.types.size(), 1u);
  const TypeDecl& a = unit.types[0];
  EXPECT_EQ(a.name, "A");
  ASSERT_EQ(a.methods.size(), 1u);
  const Stmt& body = *a.methods[0].body;
  ASSERT_EQ(body.kind, StmtKind::kBlock);
  ASSERT_EQ(body.children.size(), 1u);
  const Stmt& s = body.children[0];
  ASSERT_EQ(s.kind, StmtKind::kExpr);
  const Expr& call = *s.expr;
  EXPECT_EQ(call.kind, ExprKind::kMethodCall);
  EXPECT_EQ(call.text, "vibrate");
  ASSERT_NE(call.receiver(), nullptr);
  EXPECT_TRUE(call.receiver()->is_name("v"));
  ASSERT_EQ(call.args().size(), 1u);
  EXPECT_EQ(call.args()[0].kind, ExprKind::kLiteral);
  EXPECT_EQ(call.args()[0].text, "5");
}

TEST(ParserTest, ClasslessSnippetGetsImplicitType) {
  CompilationUnit unit = parse(read(fixture("vibrate_example.java")));
  ASSERT_EQ(unit.types.size(), 1u);
  const TypeDecl& t = unit.types[0];
  EXPECT_EQ(t.kind, TypeKind::kImplicit);
  ASSERT_EQ(t.fields.size(), 2u);
  EXPECT_EQ(t.fields[0].name, "DURATION");
  EXPECT_EQ(t.fields[0].initializer->text, "50");
  EXPECT_EQ(t.fields[1].name, "AMPLITUDE");
  EXPECT_EQ(t.fields[1].initializer->text, "175");
  EXPECT_TRUE(t.fields[0].modifiers.has(Modifier::kStatic));
  EXPECT_TRUE(t.fields[0].modifiers.has(Modifier::kFinal));
  ASSERT_EQ(t.methods.size(), 1u);
  EXPECT_EQ(t.methods[0].name, "itemActivated");
  const std::vector<Stmt>& body = t.methods[0].body->children;
  ASSERT_EQ(body.size(), 2u);
  EXPECT_EQ(body[0].kind, StmtKind::kLocalVar);
  EXPECT_EQ(body[0].name, "milliseconds");
  EXPECT_EQ(body[1].kind, StmtKind::kIf);
  ASSERT_NE(body[1].else_branch(), nullptr);
}

TEST(ParserTest, UnsupportedStatementIsOpaqueAndVerbatim) {
  std::string src = "class A { synchronized void weird() { assert x; } }";
  CompilationUnit unit = parse(src);
  const std::vector<Stmt>& body = unit.types[0].methods[0].body->children;
  ASSERT_EQ(body.size(), 1u);
  EXPECT_EQ(body[0].kind, StmtKind::kOpaque);
  EXPECT_EQ(body[0].raw, "assert x;");
  EXPECT_EQ(print(unit), src);
}

TEST(ParserTest, PackageAndImports) {
  CompilationUnit unit = parse(
      "package a.b;\nimport java.util.List;\nimport static a.C.x;\n"
      "import a.d.*;\nclass X {}\n");
  EXPECT_EQ(unit.package_name, "a.b");
  ASSERT_EQ(unit.imports.size(), 3u);
  EXPECT_EQ(unit.imports[0].name, "java.util.List");
  EXPECT_TRUE(unit.imports[1].is_static);
  EXPECT_TRUE(unit.imports[2].wildcard);
  EXPECT_EQ(unit.imports[2].name, "a.d");
}

TEST(ParserTest, NestedTypesAndOverloads) {
  CompilationUnit unit = parse(
      "public class O {\n  static class I { int f = 1; }\n"
      "  void m() {}\n  void m(int a) {}\n}\n");
  const TypeDecl& o = unit.types[0];
  ASSERT_EQ(o.nested.size(), 1u);
  EXPECT_EQ(o.nested[0].name, "I");
  ASSERT_NE(o.nested[0].find_field("f"), nullptr);
  ASSERT_EQ(o.methods.size(), 2u);
  EXPECT_EQ(o.methods[1].arity(), 1u);
  EXPECT_EQ(all_types(unit).size(), 2u);
}

TEST(ParserTest, UnbalancedBracesThrow) {
  EXPECT_THROW(parse("class A { void m() { "), UnbalancedSource);
  EXPECT_THROW(parse("class A { void m() ) }"), UnbalancedSource);
}

TEST(ExpressionTest, Precedence) {
  Expr e = parse_expression("a + b * c");
  ASSERT_EQ(e.kind, ExprKind::kBinary);
  EXPECT_EQ(e.text, "+");
  EXPECT_EQ(e.operands[1].kind, ExprKind::kBinary);
  EXPECT_EQ(e.operands[1].text, "*");
}

TEST(ExpressionTest, FieldAccessChainsAreLeftNested) {
  Expr e = parse_expression("a.b.c");
  ASSERT_EQ(e.kind, ExprKind::kFieldAccess);
  EXPECT_EQ(e.text, "c");
  ASSERT_EQ(e.operands[0].kind, ExprKind::kFieldAccess);
  EXPECT_EQ(e.operands[0].text, "b");
  EXPECT_TRUE(e.operands[0].operands[0].is_name("a"));
}

TEST(ExpressionTest, CreationCastAndAssignment) {
  Expr n = parse_expression("new java.util.ArrayList<String>(4)");
  EXPECT_EQ(n.kind, ExprKind::kObjectCreation);
  EXPECT_EQ(n.args().size(), 1u);
  Expr c = parse_expression("(Vibrator) ctx.get(k)");
  EXPECT_EQ(c.kind, ExprKind::kCast);
  EXPECT_EQ(c.text, "Vibrator");
  Expr a = parse_expression("x += 2");
  EXPECT_EQ(a.kind, ExprKind::kAssign);
  EXPECT_EQ(a.text, "+=");
}

TEST(ExpressionTest, UnsupportedExpressionIsOpaque) {
  EXPECT_EQ(parse_expression("x -> x + 1").kind, ExprKind::kOpaque);
}

TEST(ExpressionTest, RenderReparsesToSameStructure) {
  for (const char* text :
       {"a", "a.b(c, 1)", "new T(x, \"s\")", "(int) (a + b) * c", "-a",
        "x++", "a = b = c", "f(g(h()))", "a.b.c.d()", "!(a && b) || c",
        "x >= 3 ? a : b", "android.os.Build.VERSION.SDK_INT >= 26"}) {
    Expr e = parse_expression(text);
    EXPECT_TRUE(same_structure(e, parse_expression(render_expr(e)))) << text;
  }
}

TEST(RoundTripTest, EveryShippedJavaFileReprintsByteForByte) {
  std::vector<std::filesystem::path> files = all_java_files();
  ASSERT_GE(files.size(), 40u);
  for (const auto& path : files) {
    std::string text = read(path);
    EXPECT_EQ(print(parse(text)), text) << path;
  }
}

TEST(RoundTripTest, MutatedFilesEitherRoundTripOrAreRejected) {
  std::mt19937 rng(17);
  const std::string inserts = "{}();,.=<>+\"'/*\n x";
  std::size_t accepted = 0;
  for (const auto& path : all_java_files()) {
    std::string original = read(path);
    for (int round = 0; round < 20; ++round) {
      std::string text = original;
      for (int edits = 1 + rng() % 3; edits > 0 && !text.empty(); --edits) {
        std::size_t at = rng() % text.size();
        if (rng() % 2)
          text.erase(at, 1 + rng() % 3);
        else
          text.insert(at, 1, inserts[rng() % inserts.size()]);
      }
      try {
        CompilationUnit unit = parse(text);
        ++accepted;
        EXPECT_EQ(print(unit), text) << path;
      } catch (const UnbalancedSource&) {
      } catch (...) {
        ADD_FAILURE() << "unexpected exception for:\n" << text;
      }
    }
  }
  EXPECT_GT(accepted, 100u);
}

TEST(RoundTripTest, OpaqueFixtureHasOpaqueStatements) {
  CompilationUnit unit = parse(read(fixture("opaque_mix.java")));
  std::size_t opaque = 0;
  std::function<void(const Stmt&)> visit = [&](const Stmt& s) {
    if (s.kind == StmtKind::kOpaque) ++opaque;
    for (const Stmt& c : s.children) visit(c);
  };
  for (const TypeDecl* t : all_types(unit))
    for (const MethodDecl& m : t->methods)
      if (m.body) visit(*m.body);
  EXPECT_GE(opaque, 3u);
}

TEST(RoundTripTest, CrlfIsDetectedAndKept) {
  std::string text = read(fixture("crlf.java"));
  CompilationUnit unit = parse(text);
  EXPECT_EQ(unit.newline, "\r\n");
  EXPECT_EQ(print(unit), text);
}

TEST(PrinterTest, SynthesizedStatementUsesCanonicalIndent) {
  std::string src = "class A {\n    void m() {\n        a();\n    }\n}\n";
  CompilationUnit unit = parse(src);
  Stmt& body = *unit.types[0].methods[0].body;
  body.children.push_back(
      Stmt::expression(Expr::method_call(std::nullopt, "b", {})));
  std::string out = print(unit);
  EXPECT_NE(out.find("        a();\n"), std::string::npos) << out;
  EXPECT_NE(out.find("        b();\n"), std::string::npos) << out;
  EXPECT_EQ(parse(out).types[0].methods[0].body->children.size(), 2u);
}

TEST(PrinterTest, RenderStmtIfElse) {
  Stmt s = Stmt::if_else(
      parse_expression("c"), Stmt::block({Stmt::expression(parse_expression("a()"))}),
      Stmt::block({Stmt::expression(parse_expression("b()"))}));
  EXPECT_EQ(render_stmt(s, "  "),
            "if (c) {\n      a();\n  } else {\n      b();\n  }");
}

TEST(PrinterTest, LineHelpers) {
  std::string src = "a\n  \tb c\n";
  EXPECT_EQ(line_of(src, 0), 1);
  EXPECT_EQ(line_of(src, 5), 2);
  EXPECT_EQ(line_indent(src, 7), "  \t");
  EXPECT_EQ(detect_newline("x\r\ny\n"), "\r\n");
}

TEST(SpliceTest, NoEditsIsIdentity) {
  EXPECT_EQ(splice("abc", {}), "abc");
}

TEST(SpliceTest, OverlapThrows) {
  EXPECT_THROW(splice("abcdef", {{{1, 3}, "x"}, {{2, 4}, "y"}}),
               OverlappingEdits);
  EXPECT_THROW(splice("abc", {{{2, 9}, "x"}}), OverlappingEdits);
}

TEST(SpliceTest, InsertionsAtSameOffsetKeepOrder) {
  EXPECT_EQ(splice("ab", {{{1, 1}, "x"}, {{1, 1}, "y"}}), "axyb");
}

// Oracle: replacing spans one at a time from the back of the text leaves
// earlier offsets valid.
std::string sequential_replace(std::string text,
                               std::vector<TextEdit> edits) {
  std::stable_sort(edits.begin(), edits.end(),
                   [](const TextEdit& a, const TextEdit& b) {
                     return a.span.begin > b.span.begin;
                   });
  for (const TextEdit& e : edits)
    text.replace(e.span.begin, e.span.size(), e.replacement);
  return text;
}

TEST(SpliceTest, MatchesSequentialReplacementOracle) {
  std::mt19937 rng(7);
  std::string alphabet = "abcdefghij;{} \n";
  for (int round = 0; round < 500; ++round) {
    std::string text;
    std::size_t length = std::uniform_int_distribution<std::size_t>(0, 60)(rng);
    for (std::size_t i = 0; i < length; ++i)
      text += alphabet[rng() % alphabet.size()];
    // Disjoint, non-empty spans over sorted cut points.
    std::vector<std::size_t> cuts;
    std::size_t count = std::uniform_int_distribution<std::size_t>(0, 8)(rng);
    for (std::size_t i = 0; i < count; ++i)
      cuts.push_back(length == 0 ? 0 : rng() % (length + 1));
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<TextEdit> edits;
    for (std::size_t i = 0; i + 1 < cuts.size(); i += 2)
      edits.push_back({{cuts[i], cuts[i + 1]},
                       std::string(rng() % 4, 'X' + (i % 3))});
    std::vector<TextEdit> shuffled = edits;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::string want = sequential_replace(text, edits);
    EXPECT_EQ(splice(text, edits), want);
    EXPECT_EQ(splice(text, shuffled), want);
  }
}

TEST(SpliceTest, StatementReplacementTouchesOnlyThatStatement) {
  std::string src = read(fixture("vibrate_target.java"));
  CompilationUnit unit = parse(src);
  const Stmt& guard = unit.types[0].methods[0].body->children[0];
  const Stmt& call = guard.then_branch().children[0];
  std::string out = splice(unit, {{*call.span, "go();"}});
  std::string want = src;
  want.replace(call.span->begin, call.span->size(), "go();");
  EXPECT_EQ(out, want);
}

}  // namespace
}  // namespace api_evolve::jast
