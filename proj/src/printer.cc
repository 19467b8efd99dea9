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

#include "api_evolve/printer.h"

#include <algorithm>
#include <functional>
#include <optional>

#include "api_evolve/errors.h"
#include "api_evolve/parser.h"

namespace api_evolve::jast {
namespace {

bool has_synthesized(const Stmt& s) {
  if (!s.span) return true;
  return std::any_of(s.children.begin(), s.children.end(), has_synthesized);
}

std::string repeat_indent(int depth) {
  std::string out;
  for (int i = 0; i < depth; ++i) out += kIndentUnit;
  return out;
}

class UnitPrinter {
 public:
  explicit UnitPrinter(const CompilationUnit& unit) : unit_(unit) {
    toks_ = tokenize(unit.source);
  }

  std::string run() {
    std::vector<const MethodDecl*> bodies;
    for (const TypeDecl* t : all_types(unit_))
      for (const MethodDecl& m : t->methods)
        if (m.body && has_synthesized(*m.body)) bodies.push_back(&m);
    std::sort(bodies.begin(), bodies.end(),
              [](const MethodDecl* a, const MethodDecl* b) {
                return a->body->span->begin < b->body->span->begin;
              });
    std::string out;
    std::size_t copied = 0;
    for (const MethodDecl* m : bodies) {
      const Stmt& body = *m->body;
      out.append(unit_.source, copied, body.leading - copied);
      print_stmt(body, depth_at(body.span->begin), out);
      copied = body.span->end;
    }
    out.append(unit_.source, copied);
    return out;
  }

 private:
  // Brace depth just before `offset`.
  int depth_at(std::size_t offset) const {
    int depth = 0;
    for (const Token& t : toks_) {
      if (t.span.begin >= offset) break;
      if (t.text == "{") ++depth;
      if (t.text == "}") --depth;
    }
    return depth;
  }

  void emit_source(std::size_t from, std::size_t to, std::string& out) const {
    if (to > from) out.append(unit_.source, from, to - from);
  }

  // `depth` is the brace depth of the statement itself.
  void print_stmt(const Stmt& s, int depth, std::string& out) const {
    if (!s.span) {
      out += unit_.newline;
      out += repeat_indent(depth);
      out += render_stmt(s, repeat_indent(depth), unit_.newline);
      return;
    }
    if (!has_synthesized(s)) {
      emit_source(s.leading, s.span->end, out);
      return;
    }
    std::size_t cursor = s.leading;
    int child_depth = depth;
    if (s.kind == StmtKind::kBlock) {
      emit_source(s.leading, s.span->begin + 1, out);
      cursor = s.span->begin + 1;
      child_depth = depth + 1;
    }
    for (const Stmt& child : s.children) {
      if (child.span) {
        emit_source(cursor, child.leading, out);
        cursor = child.span->end;
      }
      print_stmt(child, child_depth, out);
    }
    emit_source(cursor, s.span->end, out);
  }

  const CompilationUnit& unit_;
  std::vector<Token> toks_;
};

int binary_precedence(std::string_view op) {
  if (op == "||") return 1;
  if (op == "&&") return 2;
  if (op == "|") return 3;
  if (op == "^") return 4;
  if (op == "&") return 5;
  if (op == "==" || op == "!=") return 6;
  if (op == "<" || op == ">" || op == "<=" || op == ">=") return 7;
  if (op == "<<" || op == ">>" || op == ">>>") return 8;
  if (op == "+" || op == "-") return 9;
  return 10;
}

// How tightly an expression binds: 0 assignment-like, 1 binary, 2 prefix,
// 3 primary. Opaque text is classified by its depth-zero tokens.
int binding_strength(const Expr& e) {
  switch (e.kind) {
    case ExprKind::kAssign:
      return 0;
    case ExprKind::kBinary:
      return 1;
    case ExprKind::kCast:
      return 2;
    case ExprKind::kUnary:
      return e.postfix ? 3 : 2;
    case ExprKind::kOpaque: {
      int depth = 0;
      int strength = 3;
      std::vector<Token> toks = tokenize(e.text);
      for (std::size_t i = 0; i < toks.size(); ++i) {
        const Token& t = toks[i];
        if (t.text == "(" || t.text == "[" || t.text == "{") ++depth;
        if (t.text == ")" || t.text == "]" || t.text == "}") --depth;
        if (depth != 0 || t.kind == TokenKind::kString) continue;
        if (t.text == "?" || t.text == "->" || t.text == "=" ||
            t.text == "instanceof")
          return 0;
        if (t.kind == TokenKind::kPunct && t.text != "." && t.text != "," &&
            t.text != "(" && t.text != ")" && t.text != "[" &&
            t.text != "]" && t.text != "{" && t.text != "}" && t.text != "@" &&
            t.text != "::")
          strength = i == 0 ? std::min(strength, 2) : std::min(strength, 1);
      }
      return strength;
    }
    default:
      return 3;
  }
}

// Operator precedence used for parenthesizing binary operands; non-binary
// children never need it.
std::optional<int> precedence_of(const Expr& e) {
  if (e.kind == ExprKind::kBinary) return binary_precedence(e.text);
  if (e.kind == ExprKind::kOpaque && binding_strength(e) == 1) {
    Expr parsed = parse_expression(e.text);
    if (parsed.kind == ExprKind::kBinary) return binary_precedence(parsed.text);
    return 0;
  }
  return std::nullopt;
}

}  // namespace

std::string print(const CompilationUnit& unit) {
  return UnitPrinter(unit).run();
}

std::string splice(std::string_view source, std::vector<TextEdit> edits) {
  std::stable_sort(edits.begin(), edits.end(),
                   [](const TextEdit& a, const TextEdit& b) {
                     if (a.span.begin != b.span.begin)
                       return a.span.begin < b.span.begin;
                     return a.span.end < b.span.end;
                   });
  std::string out;
  std::size_t copied = 0;
  for (std::size_t i = 0; i < edits.size(); ++i) {
    const TextEdit& e = edits[i];
    if (e.span.end < e.span.begin || e.span.end > source.size())
      throw OverlappingEdits("edit span out of range");
    if (e.span.begin < copied)
      throw OverlappingEdits("edits overlap at offset " +
                             std::to_string(e.span.begin));
    out.append(source.substr(copied, e.span.begin - copied));
    out += e.replacement;
    copied = e.span.end;
  }
  out.append(source.substr(copied));
  return out;
}

std::string splice(const CompilationUnit& unit, std::vector<TextEdit> edits) {
  return splice(unit.source, std::move(edits));
}

std::string render_expr(const Expr& e) {
  auto operand = [](const Expr& child, int min_strength) {
    std::string text = render_expr(child);
    if (binding_strength(child) < min_strength) return "(" + text + ")";
    return text;
  };
  auto binary_operand = [&](const Expr& child, bool right) {
    std::string text = render_expr(child);
    int strength = binding_strength(child);
    if (strength == 0) return "(" + text + ")";
    if (auto child_prec = precedence_of(child)) {
      int prec = binary_precedence(e.text);
      if (*child_prec < prec || (right && *child_prec == prec))
        return "(" + text + ")";
    }
    return text;
  };
  switch (e.kind) {
    case ExprKind::kLiteral:
    case ExprKind::kName:
    case ExprKind::kOpaque:
      return e.text;
    case ExprKind::kFieldAccess:
      return operand(e.operands[0], 3) + "." + e.text;
    case ExprKind::kMethodCall: {
      std::string out;
      if (e.has_receiver) out = operand(e.operands[0], 3) + ".";
      out += e.text + "(";
      bool first = true;
      for (const Expr& a : e.args()) {
        if (!first) out += ", ";
        out += render_expr(a);
        first = false;
      }
      return out + ")";
    }
    case ExprKind::kObjectCreation: {
      std::string out = "new " + normalize_whitespace(e.text) + "(";
      bool first = true;
      for (const Expr& a : e.args()) {
        if (!first) out += ", ";
        out += render_expr(a);
        first = false;
      }
      return out + ")";
    }
    case ExprKind::kBinary:
      return binary_operand(e.operands[0], false) + " " + e.text + " " +
             binary_operand(e.operands[1], true);
    case ExprKind::kUnary:
      return e.postfix ? operand(e.operands[0], 3) + e.text
                       : e.text + operand(e.operands[0], 2);
    case ExprKind::kAssign:
      return render_expr(e.operands[0]) + " " + e.text + " " +
             render_expr(e.operands[1]);
    case ExprKind::kCast:
      return "(" + normalize_whitespace(e.text) + ") " +
             operand(e.operands[0], 2);
    case ExprKind::kParen:
      return "(" + render_expr(e.operands[0]) + ")";
  }
  return e.text;
}

std::string render_stmt(const Stmt& s, std::string_view indent,
                        std::string_view newline) {
  std::string inner = std::string(indent) + std::string(kIndentUnit);
  switch (s.kind) {
    case StmtKind::kLocalVar: {
      std::string out = normalize_whitespace(s.type_name) + " " + s.name;
      if (s.expr) out += " = " + render_expr(*s.expr);
      return out + ";";
    }
    case StmtKind::kExpr:
      return render_expr(*s.expr) + ";";
    case StmtKind::kReturn:
      return s.expr ? "return " + render_expr(*s.expr) + ";" : "return;";
    case StmtKind::kOpaque:
      return s.raw;
    case StmtKind::kBlock: {
      std::string out = "{";
      for (const Stmt& c : s.children) {
        out += newline;
        out += inner;
        out += render_stmt(c, inner, newline);
      }
      out += newline;
      out += indent;
      return out + "}";
    }
    case StmtKind::kIf: {
      std::string out = "if (" + render_expr(*s.expr) + ")";
      auto branch = [&](const Stmt& b) {
        if (b.kind == StmtKind::kBlock)
          return " " + render_stmt(b, indent, newline);
        return std::string(newline) + inner + render_stmt(b, inner, newline);
      };
      out += branch(s.then_branch());
      if (const Stmt* e = s.else_branch()) {
        if (s.then_branch().kind == StmtKind::kBlock) {
          out += " else";
        } else {
          out += std::string(newline) + std::string(indent) + "else";
        }
        if (e->kind == StmtKind::kIf) {
          out += " " + render_stmt(*e, indent, newline);
        } else {
          out += branch(*e);
        }
      }
      return out;
    }
  }
  return s.raw;
}

std::string line_indent(std::string_view source, std::size_t offset) {
  std::size_t line_begin = source.rfind('\n', offset == 0 ? 0 : offset - 1);
  line_begin = line_begin == std::string_view::npos ? 0 : line_begin + 1;
  if (offset == 0) line_begin = 0;
  std::size_t p = line_begin;
  while (p < source.size() && (source[p] == ' ' || source[p] == '\t')) ++p;
  return std::string(source.substr(line_begin, p - line_begin));
}

int line_of(std::string_view source, std::size_t offset) {
  offset = std::min(offset, source.size());
  return 1 + static_cast<int>(std::count(source.begin(),
                                         source.begin() + offset, '\n'));
}

}  // namespace api_evolve::jast
