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

#include "api_evolve/ast.h"

#include <functional>

namespace api_evolve::jast {

Expr Expr::literal(LiteralKind kind, std::string lexeme) {
  Expr e;
  e.kind = ExprKind::kLiteral;
  e.literal_kind = kind;
  e.text = std::move(lexeme);
  return e;
}

Expr Expr::name(std::string identifier) {
  Expr e;
  e.kind = ExprKind::kName;
  e.text = std::move(identifier);
  return e;
}

Expr Expr::field_access(Expr receiver, std::string member) {
  Expr e;
  e.kind = ExprKind::kFieldAccess;
  e.text = std::move(member);
  e.operands.push_back(std::move(receiver));
  return e;
}

Expr Expr::method_call(std::optional<Expr> receiver, std::string method,
                       std::vector<Expr> args) {
  Expr e;
  e.kind = ExprKind::kMethodCall;
  e.text = std::move(method);
  if (receiver) {
    e.has_receiver = true;
    e.operands.push_back(std::move(*receiver));
  }
  for (Expr& a : args) e.operands.push_back(std::move(a));
  return e;
}

Expr Expr::object_creation(std::string type, std::vector<Expr> args) {
  Expr e;
  e.kind = ExprKind::kObjectCreation;
  e.text = std::move(type);
  e.operands = std::move(args);
  return e;
}

Expr Expr::binary(std::string op, Expr lhs, Expr rhs) {
  Expr e;
  e.kind = ExprKind::kBinary;
  e.text = std::move(op);
  e.operands.push_back(std::move(lhs));
  e.operands.push_back(std::move(rhs));
  return e;
}

Expr Expr::unary(std::string op, Expr operand, bool postfix) {
  Expr e;
  e.kind = ExprKind::kUnary;
  e.text = std::move(op);
  e.postfix = postfix;
  e.operands.push_back(std::move(operand));
  return e;
}

Expr Expr::assign(std::string op, Expr lhs, Expr rhs) {
  Expr e = binary(std::move(op), std::move(lhs), std::move(rhs));
  e.kind = ExprKind::kAssign;
  return e;
}

Expr Expr::cast(std::string type, Expr operand) {
  Expr e;
  e.kind = ExprKind::kCast;
  e.text = std::move(type);
  e.operands.push_back(std::move(operand));
  return e;
}

Expr Expr::paren(Expr inner) {
  Expr e;
  e.kind = ExprKind::kParen;
  e.operands.push_back(std::move(inner));
  return e;
}

Expr Expr::opaque(std::string raw) {
  Expr e;
  e.kind = ExprKind::kOpaque;
  e.text = std::move(raw);
  return e;
}

std::span<const Expr> Expr::args() const {
  std::span<const Expr> all(operands);
  switch (kind) {
    case ExprKind::kMethodCall:
      return has_receiver ? all.subspan(1) : all;
    case ExprKind::kObjectCreation:
      return all;
    default:
      return {};
  }
}

std::span<Expr> Expr::args() {
  std::span<Expr> all(operands);
  switch (kind) {
    case ExprKind::kMethodCall:
      return has_receiver ? all.subspan(1) : all;
    case ExprKind::kObjectCreation:
      return all;
    default:
      return {};
  }
}

namespace {

bool same_text(ExprKind kind, const std::string& a, const std::string& b) {
  if (a == b) return true;
  switch (kind) {
    case ExprKind::kObjectCreation:
    case ExprKind::kCast:
    case ExprKind::kOpaque:
      return normalize_whitespace(a) == normalize_whitespace(b);
    default:
      return false;
  }
}

}  // namespace

bool same_structure(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.has_receiver != b.has_receiver ||
      a.postfix != b.postfix || a.operands.size() != b.operands.size())
    return false;
  if (!same_text(a.kind, a.text, b.text)) return false;
  for (std::size_t i = 0; i < a.operands.size(); ++i)
    if (!same_structure(a.operands[i], b.operands[i])) return false;
  return true;
}

bool same_structure(const Stmt& a, const Stmt& b) {
  if (a.kind != b.kind || a.name != b.name ||
      a.children.size() != b.children.size() ||
      a.expr.has_value() != b.expr.has_value())
    return false;
  if (normalize_whitespace(a.type_name) != normalize_whitespace(b.type_name))
    return false;
  if (a.kind == StmtKind::kOpaque &&
      normalize_whitespace(a.raw) != normalize_whitespace(b.raw))
    return false;
  if (a.expr && !same_structure(*a.expr, *b.expr)) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!same_structure(a.children[i], b.children[i])) return false;
  return true;
}

Stmt Stmt::local_var(std::string type, std::string name,
                     std::optional<Expr> init) {
  Stmt s;
  s.kind = StmtKind::kLocalVar;
  s.type_name = std::move(type);
  s.name = std::move(name);
  s.expr = std::move(init);
  return s;
}

Stmt Stmt::expression(Expr e) {
  Stmt s;
  s.kind = StmtKind::kExpr;
  s.expr = std::move(e);
  return s;
}

Stmt Stmt::if_else(Expr cond, Stmt then_branch,
                   std::optional<Stmt> else_branch) {
  Stmt s;
  s.kind = StmtKind::kIf;
  s.expr = std::move(cond);
  s.children.push_back(std::move(then_branch));
  if (else_branch) s.children.push_back(std::move(*else_branch));
  return s;
}

Stmt Stmt::return_stmt(std::optional<Expr> value) {
  Stmt s;
  s.kind = StmtKind::kReturn;
  s.expr = std::move(value);
  return s;
}

Stmt Stmt::block(std::vector<Stmt> statements) {
  Stmt s;
  s.kind = StmtKind::kBlock;
  s.children = std::move(statements);
  return s;
}

Stmt Stmt::opaque(std::string raw) {
  Stmt s;
  s.kind = StmtKind::kOpaque;
  s.raw = std::move(raw);
  return s;
}

const FieldDecl* TypeDecl::find_field(std::string_view field_name) const {
  for (const FieldDecl& f : fields)
    if (f.name == field_name) return &f;
  return nullptr;
}

std::vector<const TypeDecl*> all_types(const CompilationUnit& unit) {
  std::vector<const TypeDecl*> out;
  std::function<void(const TypeDecl&)> visit = [&](const TypeDecl& t) {
    out.push_back(&t);
    for (const TypeDecl& n : t.nested) visit(n);
  };
  for (const TypeDecl& t : unit.types) visit(t);
  return out;
}

std::string_view source_text(const CompilationUnit& unit, const Span& span) {
  return std::string_view(unit.source).substr(span.begin, span.size());
}

std::string simple_type_name(std::string_view type) {
  std::size_t angle = type.find('<');
  if (angle != std::string_view::npos) type = type.substr(0, angle);
  std::size_t bracket = type.find('[');
  if (bracket != std::string_view::npos) type = type.substr(0, bracket);
  while (!type.empty() && (type.back() == ' ' || type.back() == '.'))
    type.remove_suffix(1);
  std::size_t dot = type.rfind('.');
  if (dot != std::string_view::npos) type = type.substr(dot + 1);
  while (!type.empty() && type.front() == ' ') type.remove_prefix(1);
  return std::string(type);
}

}  // namespace api_evolve::jast
