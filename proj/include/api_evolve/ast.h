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

// Syntax tree for the supported Java subset.
//
// Nodes produced by the parser carry a token span into the owning
// CompilationUnit's source. Nodes built by the tool (patch substitution,
// resolution results) have no span and are rendered canonically. Anything
// outside the subset becomes an Opaque node whose raw text is kept verbatim.

#ifndef API_EVOLVE_AST_H_
#define API_EVOLVE_AST_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "api_evolve/lexer.h"

namespace api_evolve::jast {

enum class Modifier : std::uint8_t {
  kStatic = 1 << 0,
  kFinal = 1 << 1,
  kPublic = 1 << 2,
  kPrivate = 1 << 3,
  kProtected = 1 << 4,
  kAbstract = 1 << 5,
};

class ModifierSet {
 public:
  bool has(Modifier m) const { return bits_ & static_cast<std::uint8_t>(m); }
  void add(Modifier m) { bits_ |= static_cast<std::uint8_t>(m); }
  friend bool operator==(const ModifierSet&, const ModifierSet&) = default;

 private:
  std::uint8_t bits_ = 0;
};

enum class ExprKind {
  kLiteral,
  kName,
  kFieldAccess,
  kMethodCall,
  kObjectCreation,
  kBinary,
  kUnary,
  kAssign,
  kCast,
  kParen,
  kOpaque,
};

enum class LiteralKind { kInteger, kFloating, kString, kChar, kBoolean, kNull };

// One node of the expression tree. The meaning of `text` and `operands`
// depends on `kind`:
//
//   Literal         text = lexeme
//   Name            text = identifier (also `this` / `super`)
//   FieldAccess     text = member name,  operands = {receiver}
//   MethodCall      text = method name,  operands = {receiver?, args...}
//   ObjectCreation  text = type,         operands = {args...}
//   Binary          text = operator,     operands = {lhs, rhs}
//   Unary           text = operator,     operands = {operand}
//   Assign          text = operator,     operands = {lhs, rhs}
//   Cast            text = type,         operands = {operand}
//   Paren                                operands = {inner}
//   Opaque          text = raw source
struct Expr {
  ExprKind kind = ExprKind::kOpaque;
  std::string text;
  std::vector<Expr> operands;
  LiteralKind literal_kind = LiteralKind::kInteger;
  bool has_receiver = false;  // MethodCall only
  bool postfix = false;       // Unary only
  std::optional<Span> span;

  static Expr literal(LiteralKind kind, std::string lexeme);
  static Expr name(std::string identifier);
  static Expr field_access(Expr receiver, std::string member);
  static Expr method_call(std::optional<Expr> receiver, std::string method,
                          std::vector<Expr> args);
  static Expr object_creation(std::string type, std::vector<Expr> args);
  static Expr binary(std::string op, Expr lhs, Expr rhs);
  static Expr unary(std::string op, Expr operand, bool postfix = false);
  static Expr assign(std::string op, Expr lhs, Expr rhs);
  static Expr cast(std::string type, Expr operand);
  static Expr paren(Expr inner);
  static Expr opaque(std::string raw);

  bool is_name() const { return kind == ExprKind::kName; }
  bool is_name(std::string_view id) const {
    return kind == ExprKind::kName && text == id;
  }

  const Expr* receiver() const {
    if (kind == ExprKind::kFieldAccess) return &operands[0];
    if (kind == ExprKind::kMethodCall && has_receiver) return &operands[0];
    return nullptr;
  }
  std::span<const Expr> args() const;
  std::span<Expr> args();
};

// Structural equality: kinds, texts and children, ignoring spans.
bool same_structure(const Expr& a, const Expr& b);

enum class StmtKind { kLocalVar, kExpr, kIf, kReturn, kBlock, kOpaque };

// Statement node. Layout per kind:
//
//   LocalVar  type_name, name, expr = initializer?
//   Expr      expr
//   If        expr = condition, children = {then, else?}
//   Return    expr = value?
//   Block     children = statements, span covers the braces
//   Opaque    raw = exact source text
//
// `leading` is where the statement's leading trivia (blank lines and
// comments since the previous token) starts; [leading, span.end) of the
// statements in a block tile the block interior.
struct Stmt {
  StmtKind kind = StmtKind::kOpaque;
  std::string type_name;
  std::string name;
  std::optional<Expr> expr;
  std::vector<Stmt> children;
  std::string raw;
  std::optional<Span> span;
  std::size_t leading = 0;

  static Stmt local_var(std::string type, std::string name,
                        std::optional<Expr> init);
  static Stmt expression(Expr e);
  static Stmt if_else(Expr cond, Stmt then_branch,
                      std::optional<Stmt> else_branch);
  static Stmt return_stmt(std::optional<Expr> value);
  static Stmt block(std::vector<Stmt> statements);
  static Stmt opaque(std::string raw);

  const Stmt& then_branch() const { return children.at(0); }
  const Stmt* else_branch() const {
    return children.size() > 1 ? &children[1] : nullptr;
  }
};

bool same_structure(const Stmt& a, const Stmt& b);

struct Param {
  std::string type_name;
  std::string name;
};

struct FieldDecl {
  ModifierSet modifiers;
  std::string type_name;
  std::string name;
  std::optional<Expr> initializer;
  Span span;  // shared by every declarator of one declaration
};

struct MethodDecl {
  ModifierSet modifiers;
  std::string return_type;  // empty for constructors
  std::string name;
  std::vector<Param> params;
  std::optional<Stmt> body;  // Block; absent for abstract/interface methods
  Span span;                 // from first modifier/annotation to body end
  std::size_t leading = 0;

  std::size_t arity() const { return params.size(); }
};

enum class TypeKind { kClass, kInterface, kEnum, kImplicit };

// kImplicit wraps member declarations that appear at file level without an
// enclosing class, which is how after-update snippets are usually written.
struct TypeDecl {
  TypeKind kind = TypeKind::kClass;
  ModifierSet modifiers;
  std::string name;
  std::vector<FieldDecl> fields;
  std::vector<MethodDecl> methods;
  std::vector<TypeDecl> nested;
  std::vector<Span> opaque_members;
  Span span;
  std::size_t leading = 0;
  std::size_t body_begin = 0;  // offset of `{` (implicit: first member)
  std::size_t body_end = 0;    // offset of `}` (implicit: end of members)

  const FieldDecl* find_field(std::string_view name) const;
};

struct ImportDecl {
  std::string name;  // qualified name without `.*`
  bool is_static = false;
  bool wildcard = false;
  Span span;
};

struct CompilationUnit {
  std::string source;
  std::string newline = "\n";
  std::optional<std::string> package_name;
  std::optional<Span> package_span;
  std::vector<ImportDecl> imports;
  std::vector<TypeDecl> types;
};

// Every TypeDecl of the unit, outer types before their nested types.
std::vector<const TypeDecl*> all_types(const CompilationUnit& unit);

// Source text covered by a parsed node.
std::string_view source_text(const CompilationUnit& unit, const Span& span);

// Last segment of a qualified type, with type arguments and array brackets
// stripped: "android.os.VibrationEffect" -> "VibrationEffect".
std::string simple_type_name(std::string_view type);

}  // namespace api_evolve::jast

#endif  // API_EVOLVE_AST_H_
