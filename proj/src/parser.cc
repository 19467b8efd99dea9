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

#include "api_evolve/parser.h"

#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "api_evolve/errors.h"

namespace api_evolve::jast {
namespace {

// Internal backtracking signal; never escapes the parser.
struct ParseFail {};

constexpr std::array<std::string_view, 9> kPrimitiveTypes = {
    "boolean", "byte", "char", "short", "int", "long", "float", "double",
    "void"};

// Statements that are never structured.
constexpr std::array<std::string_view, 14> kOpaqueStatementKeywords = {
    "for",   "while", "do",     "switch", "try",   "synchronized", "throw",
    "break", "continue", "assert", "class", "interface", "enum", "yield"};

constexpr std::array<std::string_view, 12> kAssignOps = {
    "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>="};

template <std::size_t N>
bool one_of(std::string_view s, const std::array<std::string_view, N>& set) {
  for (auto v : set)
    if (v == s) return true;
  return false;
}

bool is_primitive(std::string_view s) { return one_of(s, kPrimitiveTypes); }

bool is_modifier_word(std::string_view s) {
  static constexpr std::array<std::string_view, 13> kWords = {
      "public",   "private",   "protected", "static",   "final",
      "abstract", "native",    "synchronized", "transient", "volatile",
      "strictfp", "default",   "sealed"};
  return one_of(s, kWords);
}

void check_balance(const std::vector<Token>& toks) {
  std::vector<const Token*> stack;
  for (const Token& t : toks) {
    if (t.kind != TokenKind::kPunct) continue;
    if (t.text == "(" || t.text == "[" || t.text == "{") {
      stack.push_back(&t);
    } else if (t.text == ")" || t.text == "]" || t.text == "}") {
      char open = t.text == ")" ? '(' : t.text == "]" ? '[' : '{';
      if (stack.empty() || stack.back()->text[0] != open)
        throw UnbalancedSource(
            "unmatched '" + std::string(t.text) + "'", t.span.begin);
      stack.pop_back();
    }
  }
  if (!stack.empty())
    throw UnbalancedSource(
        "unclosed '" + std::string(stack.back()->text) + "'",
        stack.back()->span.begin);
}

class Parser {
 public:
  Parser(std::string_view src, std::vector<Token> toks)
      : src_(src), toks_(std::move(toks)) {}

  void parse_unit(CompilationUnit& unit) {
    if (is_word("package")) {
      std::size_t save = i_;
      try {
        std::size_t begin = pos();
        ++i_;
        unit.package_name = qualified_name();
        expect(";");
        unit.package_span = Span{begin, last_end()};
      } catch (const ParseFail&) {
        // Left for the member loop, which keeps it as opaque text.
        i_ = save;
        unit.package_name.reset();
      }
    }
    while (is_word("import")) {
      std::size_t save = i_;
      try {
        unit.imports.push_back(import_decl());
      } catch (const ParseFail&) {
        i_ = save;
        break;
      }
    }

    TypeDecl* implicit = nullptr;
    while (!at_end()) {
      if (is(";")) {
        ++i_;
        continue;
      }
      std::size_t save = i_;
      if (starts_type_decl()) {
        try {
          unit.types.push_back(type_decl());
          implicit = nullptr;
          continue;
        } catch (const ParseFail&) {
          i_ = save;
        }
      }
      if (implicit == nullptr) {
        unit.types.emplace_back();
        implicit = &unit.types.back();
        implicit->kind = TypeKind::kImplicit;
        implicit->leading = leading_start();
        implicit->body_begin = pos();
        implicit->span.begin = pos();
      }
      member(*implicit);
      implicit->span.end = last_end();
      implicit->body_end = last_end();
    }
  }

  Stmt single_statement() {
    if (at_end()) return Stmt::opaque("");
    Stmt s = statement();
    if (!at_end()) {
      Stmt o = Stmt::opaque(std::string(src_));
      o.span = Span{0, src_.size()};
      return o;
    }
    return s;
  }

  Expr single_expression() {
    try {
      Expr e = assignment();
      if (at_end()) return e;
    } catch (const ParseFail&) {
    }
    Expr o = Expr::opaque(std::string(src_));
    o.span = Span{0, src_.size()};
    return o;
  }

 private:
  // --- token access -------------------------------------------------------

  bool at_end(std::size_t ahead = 0) const { return i_ + ahead >= toks_.size(); }
  const Token& tok(std::size_t ahead = 0) const {
    if (at_end(ahead)) throw ParseFail{};
    return toks_[i_ + ahead];
  }
  bool is(std::string_view text, std::size_t ahead = 0) const {
    return !at_end(ahead) && toks_[i_ + ahead].kind == TokenKind::kPunct &&
           toks_[i_ + ahead].text == text;
  }
  bool is_word(std::string_view text, std::size_t ahead = 0) const {
    return !at_end(ahead) &&
           toks_[i_ + ahead].kind == TokenKind::kIdentifier &&
           toks_[i_ + ahead].text == text;
  }
  bool is_ident(std::size_t ahead = 0) const {
    return !at_end(ahead) &&
           toks_[i_ + ahead].kind == TokenKind::kIdentifier &&
           !is_keyword(toks_[i_ + ahead].text);
  }
  std::size_t pos() const {
    return at_end() ? src_.size() : toks_[i_].span.begin;
  }
  std::size_t last_end() const { return i_ == 0 ? 0 : toks_[i_ - 1].span.end; }
  std::size_t leading_start() const { return last_end(); }

  void expect(std::string_view text) {
    if (!is(text)) throw ParseFail{};
    ++i_;
  }
  std::string ident() {
    if (!is_ident()) throw ParseFail{};
    return std::string(toks_[i_++].text);
  }
  std::string slice(std::size_t begin, std::size_t end) const {
    return std::string(src_.substr(begin, end - begin));
  }

  std::string qualified_name() {
    std::string name = ident();
    while (is(".") && is_ident(1)) {
      name += '.';
      ++i_;
      name += ident();
    }
    return name;
  }

  // Consumes a balanced group starting at the current opener.
  void skip_group() {
    int depth = 0;
    do {
      const Token& t = tok();
      if (t.text == "(" || t.text == "[" || t.text == "{") ++depth;
      if (t.text == ")" || t.text == "]" || t.text == "}") --depth;
      ++i_;
    } while (depth > 0);
  }

  void skip_annotations() {
    while (is("@") && !is_word("interface", 1)) {
      ++i_;
      qualified_name();
      if (is("(")) skip_group();
    }
  }

  ModifierSet modifiers() {
    ModifierSet mods;
    while (true) {
      skip_annotations();
      if (at_end() || tok().kind != TokenKind::kIdentifier ||
          !is_modifier_word(tok().text))
        break;
      std::string_view w = tok().text;
      // `default` only acts as a modifier on interface methods.
      if (w == "default" && (is(":", 1) || is("->", 1))) break;
      if (w == "static") mods.add(Modifier::kStatic);
      if (w == "final") mods.add(Modifier::kFinal);
      if (w == "public") mods.add(Modifier::kPublic);
      if (w == "private") mods.add(Modifier::kPrivate);
      if (w == "protected") mods.add(Modifier::kProtected);
      if (w == "abstract") mods.add(Modifier::kAbstract);
      ++i_;
    }
    return mods;
  }

  // Type syntax: Name(.Name)* with optional type arguments and array dims.
  // Returns the covered source text.
  std::string type(bool allow_dims = true) {
    std::size_t begin = pos();
    skip_annotations();
    if (at_end() || tok().kind != TokenKind::kIdentifier) throw ParseFail{};
    if (is_keyword(tok().text) && !is_primitive(tok().text)) throw ParseFail{};
    ++i_;
    type_arguments();
    while (is(".") && !at_end(1) &&
           toks_[i_ + 1].kind == TokenKind::kIdentifier &&
           !is_keyword(toks_[i_ + 1].text)) {
      i_ += 2;
      type_arguments();
    }
    if (allow_dims) {
      while (is("[") && is("]", 1)) i_ += 2;
      if (is("...")) ++i_;
    }
    return slice(begin, last_end());
  }

  void type_arguments() {
    if (!is("<")) return;
    int depth = 0;
    do {
      const Token& t = tok();
      if (t.text == "<") {
        ++depth;
      } else if (t.text == ">") {
        --depth;
      } else if (!(t.kind == TokenKind::kIdentifier || t.text == "," ||
                   t.text == "." || t.text == "?" || t.text == "&" ||
                   t.text == "[" || t.text == "]" || t.text == "@")) {
        throw ParseFail{};
      }
      ++i_;
    } while (depth > 0);
  }

  // --- declarations --------------------------------------------------------

  bool starts_type_decl() const {
    std::size_t k = i_;
    while (k < toks_.size()) {
      const Token& t = toks_[k];
      if (t.text == "@" && k + 1 < toks_.size() &&
          toks_[k + 1].text != "interface") {
        k += 2;
        while (k + 1 < toks_.size() && toks_[k].text == ".") k += 2;
        if (k < toks_.size() && toks_[k].text == "(") {
          int depth = 0;
          do {
            if (toks_[k].text == "(") ++depth;
            if (toks_[k].text == ")") --depth;
            ++k;
          } while (depth > 0 && k < toks_.size());
        }
        continue;
      }
      if (t.kind == TokenKind::kIdentifier && is_modifier_word(t.text)) {
        ++k;
        continue;
      }
      return t.kind == TokenKind::kIdentifier &&
             (t.text == "class" || t.text == "interface" || t.text == "enum");
    }
    return false;
  }

  TypeDecl type_decl() {
    TypeDecl td;
    td.leading = leading_start();
    td.span.begin = pos();
    td.modifiers = modifiers();
    std::string_view kw = tok().text;
    td.kind = kw == "interface" ? TypeKind::kInterface
              : kw == "enum"    ? TypeKind::kEnum
                                : TypeKind::kClass;
    ++i_;
    td.name = ident();
    // Header clauses (type parameters, extends, implements, permits).
    while (!is("{")) {
      if (is(";") || is("}")) throw ParseFail{};
      if (is("(") || is("[")) {
        skip_group();
      } else {
        ++i_;
      }
    }
    td.body_begin = pos();
    ++i_;
    if (td.kind == TypeKind::kEnum) enum_constants(td);
    while (!is("}")) {
      if (is(";")) {
        ++i_;
        continue;
      }
      member(td);
    }
    td.body_end = pos();
    ++i_;
    td.span.end = last_end();
    return td;
  }

  void enum_constants(TypeDecl& td) {
    std::size_t begin = pos();
    while (!is(";") && !is("}")) {
      if (is("(") || is("[") || is("{")) {
        skip_group();
      } else {
        ++i_;
      }
    }
    if (is(";")) ++i_;
    if (last_end() > begin) td.opaque_members.push_back(Span{begin, last_end()});
  }

  ImportDecl import_decl() {
    ImportDecl imp;
    std::size_t begin = pos();
    ++i_;
    if (is_word("static")) {
      imp.is_static = true;
      ++i_;
    }
    imp.name = qualified_name();
    if (is(".") && is("*", 1)) {
      imp.wildcard = true;
      i_ += 2;
    }
    expect(";");
    imp.span = Span{begin, last_end()};
    return imp;
  }

  void member(TypeDecl& owner) {
    std::size_t save = i_;
    try {
      member_structured(owner);
    } catch (const ParseFail&) {
      i_ = save;
      std::size_t begin = pos();
      skip_member();
      if (i_ == save) ++i_;
      owner.opaque_members.push_back(Span{begin, last_end()});
    }
  }

  void member_structured(TypeDecl& owner) {
    std::size_t leading = leading_start();
    std::size_t begin = pos();
    if (is("@") && is_word("interface", 1)) throw ParseFail{};
    if (starts_type_decl()) {
      owner.nested.push_back(type_decl());
      return;
    }
    ModifierSet mods = modifiers();
    if (is("{") || is_word("record")) throw ParseFail{};
    if (is("<")) type_arguments();  // generic method type parameters

    MethodDecl m;
    m.modifiers = mods;
    m.leading = leading;
    if (is_ident() && is("(", 1) && tok().text == owner.name) {
      m.name = ident();
    } else {
      m.return_type = type();
      std::string name = ident();
      if (!is("(")) {
        fields(owner, mods, m.return_type, std::move(name), begin);
        return;
      }
      m.name = std::move(name);
    }
    m.params = params();
    while (is("[") && is("]", 1)) i_ += 2;
    if (is_word("throws")) {
      ++i_;
      type();
      while (is(",")) {
        ++i_;
        type();
      }
    }
    if (is("{")) {
      m.body = block();
    } else if (is(";")) {
      ++i_;
    } else if (is_word("default")) {
      while (!is(";")) {
        if (is("(") || is("{") || is("[")) {
          skip_group();
        } else {
          ++i_;
        }
      }
      ++i_;
    } else {
      throw ParseFail{};
    }
    m.span = Span{begin, last_end()};
    owner.methods.push_back(std::move(m));
  }

  std::vector<Param> params() {
    std::vector<Param> out;
    expect("(");
    while (!is(")")) {
      skip_annotations();
      while (is_word("final")) {
        ++i_;
        skip_annotations();
      }
      Param p;
      p.type_name = type();
      p.name = ident();
      while (is("[") && is("]", 1)) i_ += 2;
      for (const Param& other : out)
        if (other.name == p.name) throw ParseFail{};
      out.push_back(std::move(p));
      if (!is(")")) expect(",");
    }
    ++i_;
    return out;
  }

  void fields(TypeDecl& owner, ModifierSet mods, const std::string& type_name,
              std::string first, std::size_t begin) {
    std::vector<FieldDecl> decls;
    std::string name = std::move(first);
    while (true) {
      if (is("[")) throw ParseFail{};
      FieldDecl f;
      f.modifiers = mods;
      f.type_name = type_name;
      f.name = std::move(name);
      if (is("=")) {
        ++i_;
        f.initializer = initializer_expr();
      }
      decls.push_back(std::move(f));
      if (is(";")) break;
      expect(",");
      name = ident();
    }
    ++i_;
    for (FieldDecl& f : decls) {
      f.span = Span{begin, last_end()};
      if (owner.find_field(f.name) != nullptr) throw ParseFail{};
      owner.fields.push_back(std::move(f));
    }
  }

  // Expression up to the next `,` or `;` at nesting depth zero; falls back to
  // an opaque expression when the text is outside the subset.
  Expr initializer_expr() {
    std::size_t save = i_;
    try {
      Expr e = assignment();
      if (is(",") || is(";")) return e;
    } catch (const ParseFail&) {
    }
    i_ = save;
    std::size_t begin = pos();
    while (!is(",") && !is(";")) {
      if (is("(") || is("[") || is("{")) {
        skip_group();
      } else if (is(")") || is("]") || is("}")) {
        throw ParseFail{};
      } else {
        ++i_;
      }
    }
    Expr o = Expr::opaque(slice(begin, last_end()));
    o.span = Span{begin, last_end()};
    return o;
  }

  // Skips one member: ends after `;` at depth zero or after a depth-zero
  // brace group that is not followed by `;` or `,`.
  void skip_member() {
    while (!at_end()) {
      if (is("}")) return;  // enclosing body ends
      if (is(";")) {
        ++i_;
        return;
      }
      if (is("{")) {
        skip_group();
        if (is(";")) {
          ++i_;
          return;
        }
        if (!is(",")) return;
        continue;
      }
      if (is("(") || is("[")) {
        skip_group();
        continue;
      }
      ++i_;
    }
  }

  // --- statements ----------------------------------------------------------

  Stmt block() {
    Stmt b;
    b.kind = StmtKind::kBlock;
    b.leading = leading_start();
    std::size_t begin = pos();
    expect("{");
    while (!is("}")) b.children.push_back(statement());
    ++i_;
    b.span = Span{begin, last_end()};
    return b;
  }

  Stmt statement() {
    std::size_t save = i_;
    std::size_t leading = leading_start();
    std::size_t begin = pos();
    Stmt s;
    try {
      s = statement_structured();
    } catch (const ParseFail&) {
      i_ = save;
      skip_statement();
      s = Stmt::opaque(slice(begin, last_end()));
    }
    s.leading = leading;
    s.span = Span{begin, last_end()};
    return s;
  }

  Stmt statement_structured() {
    if (is("{")) return block();
    if (is(";")) throw ParseFail{};
    if (is_word("if")) {
      ++i_;
      expect("(");
      Expr cond = assignment();
      expect(")");
      Stmt then_branch = statement();
      std::optional<Stmt> else_branch;
      if (is_word("else")) {
        ++i_;
        else_branch = statement();
      }
      return Stmt::if_else(std::move(cond), std::move(then_branch),
                           std::move(else_branch));
    }
    if (is_word("return")) {
      ++i_;
      std::optional<Expr> value;
      if (!is(";")) value = assignment();
      expect(";");
      return Stmt::return_stmt(std::move(value));
    }
    if (!at_end() && tok().kind == TokenKind::kIdentifier &&
        one_of(tok().text, kOpaqueStatementKeywords))
      throw ParseFail{};
    if (is_ident() && is(":", 1)) throw ParseFail{};  // labeled statement

    std::size_t save = i_;
    try {
      return local_var();
    } catch (const ParseFail&) {
      i_ = save;
    }
    Expr e = assignment();
    expect(";");
    return Stmt::expression(std::move(e));
  }

  Stmt local_var() {
    skip_annotations();
    while (is_word("final")) {
      ++i_;
      skip_annotations();
    }
    std::string type_name = type();
    std::string name = ident();
    std::optional<Expr> init;
    if (is("=")) {
      ++i_;
      init = is("{") ? array_initializer() : assignment();
    }
    expect(";");
    return Stmt::local_var(std::move(type_name), std::move(name),
                           std::move(init));
  }

  // Skips one statement outside the subset, keeping trailing clauses such as
  // `else`, `catch`, `finally` and do-while's `while`.
  void skip_statement() {
    while (is_ident() && is(":", 1)) i_ += 2;
    bool is_do = is_word("do");
    while (!at_end()) {
      if (is("}")) return;
      if (is(";")) {
        ++i_;
        return;
      }
      if (is("{")) {
        skip_group();
        if (is(";") || is(",") || is(")") || is(".") || is_word("else") ||
            is_word("catch") || is_word("finally") ||
            (is_do && is_word("while")))
          continue;
        return;
      }
      if (is("(") || is("[")) {
        skip_group();
        continue;
      }
      ++i_;
    }
  }

  // --- expressions ---------------------------------------------------------

  template <typename T>
  T spanned(std::size_t begin, T node) {
    node.span = Span{begin, last_end()};
    return node;
  }

  Expr opaque_from(std::size_t begin) {
    Expr o = Expr::opaque(slice(begin, last_end()));
    o.span = Span{begin, last_end()};
    return o;
  }

  // Reads an assignment operator at the cursor; `>` based operators are
  // assembled from adjacent single-character tokens.
  std::optional<std::pair<std::string, std::size_t>> peek_assign_op() const {
    if (at_end()) return std::nullopt;
    const Token& t = toks_[i_];
    if (t.kind != TokenKind::kPunct) return std::nullopt;
    if (t.text == ">") {
      auto joined = join_gt();
      if (joined.first == ">>=" || joined.first == ">>>=") return joined;
      return std::nullopt;
    }
    if (one_of(t.text, kAssignOps)) return std::make_pair(std::string(t.text), 1);
    return std::nullopt;
  }

  std::pair<std::string, std::size_t> join_gt() const {
    std::string op = ">";
    std::size_t n = 1;
    while (n < 3 && !at_end(n) && adjacent(toks_[i_ + n - 1], toks_[i_ + n]) &&
           toks_[i_ + n].text == ">") {
      op += '>';
      ++n;
    }
    if (!at_end(n) && adjacent(toks_[i_ + n - 1], toks_[i_ + n]) &&
        toks_[i_ + n].text == "=") {
      op += '=';
      ++n;
    }
    return {op, n};
  }

  static int precedence(std::string_view op) {
    if (op == "||") return 1;
    if (op == "&&") return 2;
    if (op == "|") return 3;
    if (op == "^") return 4;
    if (op == "&") return 5;
    if (op == "==" || op == "!=") return 6;
    if (op == "<" || op == ">" || op == "<=" || op == ">=" ||
        op == "instanceof")
      return 7;
    if (op == "<<" || op == ">>" || op == ">>>") return 8;
    if (op == "+" || op == "-") return 9;
    if (op == "*" || op == "/" || op == "%") return 10;
    return 0;
  }

  std::optional<std::pair<std::string, std::size_t>> peek_binary_op() const {
    if (at_end()) return std::nullopt;
    const Token& t = toks_[i_];
    if (t.kind == TokenKind::kIdentifier)
      return t.text == "instanceof"
                 ? std::optional(std::make_pair(std::string(t.text),
                                                std::size_t{1}))
                 : std::nullopt;
    if (t.kind != TokenKind::kPunct) return std::nullopt;
    if (t.text == ">") {
      auto joined = join_gt();
      if (joined.first.back() == '=' && joined.first != ">=")
        return std::nullopt;  // shift-assign
      return joined;
    }
    if (precedence(t.text) > 0) return std::make_pair(std::string(t.text), 1);
    return std::nullopt;
  }

  Expr assignment() {
    std::size_t begin = pos();
    Expr lhs = conditional();
    if (auto op = peek_assign_op()) {
      i_ += op->second;
      Expr rhs = is("{") ? array_initializer() : assignment();
      return spanned(begin, Expr::assign(op->first, std::move(lhs),
                                         std::move(rhs)));
    }
    return lhs;
  }

  Expr conditional() {
    std::size_t begin = pos();
    Expr c = binary(1);
    if (!is("?")) return c;
    ++i_;
    assignment();
    expect(":");
    conditional();
    return opaque_from(begin);
  }

  Expr binary(int min_prec) {
    std::size_t begin = pos();
    Expr lhs = unary();
    while (auto op = peek_binary_op()) {
      int prec = precedence(op->first);
      if (prec < min_prec) break;
      i_ += op->second;
      if (op->first == "instanceof") {
        if (is_word("final")) ++i_;
        type();
        if (is_ident()) ++i_;  // pattern binding
        lhs = opaque_from(begin);
        continue;
      }
      Expr rhs = binary(prec + 1);
      lhs = spanned(begin, Expr::binary(op->first, std::move(lhs),
                                        std::move(rhs)));
    }
    return lhs;
  }

  Expr unary() {
    std::size_t begin = pos();
    if (is("+") || is("-") || is("!") || is("~") || is("++") || is("--")) {
      std::string op(tok().text);
      ++i_;
      Expr operand = unary();
      return spanned(begin, Expr::unary(op, std::move(operand)));
    }
    if (is("(")) {
      if (auto c = try_cast(begin)) return std::move(*c);
    }
    return postfix(primary());
  }

  std::optional<Expr> try_cast(std::size_t begin) {
    std::size_t save = i_;
    try {
      ++i_;
      std::string type_name = type();
      expect(")");
      bool primitive = is_primitive(toks_[save + 1].text) &&
                       !is(".");  // `(int.class)` is not a cast
      bool operand_follows =
          !at_end() &&
          ((tok().kind == TokenKind::kIdentifier &&
            tok().text != "instanceof") ||
           tok().kind == TokenKind::kInteger ||
           tok().kind == TokenKind::kFloating ||
           tok().kind == TokenKind::kString ||
           tok().kind == TokenKind::kChar || is("(") || is("!") || is("~"));
      if (primitive && (operand_follows || is("-") || is("+"))) {
        Expr operand = unary();
        return spanned(begin, Expr::cast(type_name, std::move(operand)));
      }
      if (!primitive && operand_follows) {
        Expr operand = unary();
        return spanned(begin, Expr::cast(type_name, std::move(operand)));
      }
    } catch (const ParseFail&) {
    }
    i_ = save;
    return std::nullopt;
  }

  std::vector<Expr> arguments() {
    std::vector<Expr> args;
    expect("(");
    while (!is(")")) {
      args.push_back(assignment());
      if (!is(")")) expect(",");
    }
    ++i_;
    return args;
  }

  Expr array_initializer() {
    std::size_t begin = pos();
    skip_group();
    return opaque_from(begin);
  }

  Expr primary() {
    std::size_t begin = pos();
    const Token& t = tok();
    switch (t.kind) {
      case TokenKind::kInteger:
        ++i_;
        return spanned(begin,
                       Expr::literal(LiteralKind::kInteger, std::string(t.text)));
      case TokenKind::kFloating:
        ++i_;
        return spanned(
            begin, Expr::literal(LiteralKind::kFloating, std::string(t.text)));
      case TokenKind::kString:
        ++i_;
        return spanned(begin,
                       Expr::literal(LiteralKind::kString, std::string(t.text)));
      case TokenKind::kChar:
        ++i_;
        return spanned(begin,
                       Expr::literal(LiteralKind::kChar, std::string(t.text)));
      case TokenKind::kPunct:
        if (t.text == "(") {
          if (is(")", 1)) throw ParseFail{};  // lambda
          ++i_;
          Expr inner = assignment();
          expect(")");
          if (is("->")) throw ParseFail{};
          return spanned(begin, Expr::paren(std::move(inner)));
        }
        if (t.text == "{") return array_initializer();
        throw ParseFail{};
      case TokenKind::kIdentifier:
        break;
    }
    std::string_view w = t.text;
    if (w == "true" || w == "false") {
      ++i_;
      return spanned(begin,
                     Expr::literal(LiteralKind::kBoolean, std::string(w)));
    }
    if (w == "null") {
      ++i_;
      return spanned(begin, Expr::literal(LiteralKind::kNull, "null"));
    }
    if (w == "new") return creation();
    if (is("->", 1)) throw ParseFail{};
    if (is_keyword(w) && w != "this" && w != "super" && !is_primitive(w))
      throw ParseFail{};
    if (is_primitive(w) && !is(".", 1)) throw ParseFail{};
    ++i_;
    std::string name(w);
    if (is("(")) {
      std::vector<Expr> args = arguments();
      return spanned(begin, Expr::method_call(std::nullopt, std::move(name),
                                              std::move(args)));
    }
    return spanned(begin, Expr::name(std::move(name)));
  }

  Expr creation() {
    std::size_t begin = pos();
    ++i_;  // new
    if (is("<")) throw ParseFail{};
    std::string type_name = type(/*allow_dims=*/false);
    if (is("[")) {
      while (is("[")) skip_group();
      if (is("{")) skip_group();
      return opaque_from(begin);
    }
    std::vector<Expr> args = arguments();
    if (is("{")) {
      skip_group();  // anonymous class body
      return opaque_from(begin);
    }
    return spanned(begin,
                   Expr::object_creation(std::move(type_name), std::move(args)));
  }

  Expr postfix(Expr e) {
    std::size_t begin = e.span ? e.span->begin : pos();
    while (true) {
      if (is(".")) {
        if (is("<", 1) || is_word("new", 1)) throw ParseFail{};
        if (at_end(1) || toks_[i_ + 1].kind != TokenKind::kIdentifier)
          throw ParseFail{};
        ++i_;
        std::string member(tok().text);
        ++i_;
        if (is("(")) {
          std::vector<Expr> args = arguments();
          e = spanned(begin, Expr::method_call(std::move(e), std::move(member),
                                               std::move(args)));
        } else {
          e = spanned(begin, Expr::field_access(std::move(e), std::move(member)));
        }
      } else if (is("[")) {
        ++i_;
        assignment();
        expect("]");
        e = opaque_from(begin);
      } else if (is("++") || is("--")) {
        std::string op(tok().text);
        ++i_;
        e = spanned(begin, Expr::unary(op, std::move(e), /*postfix=*/true));
      } else if (is("::") || is("->")) {
        throw ParseFail{};
      } else {
        return e;
      }
    }
  }

  std::string_view src_;
  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

CompilationUnit parse(std::string source) {
  CompilationUnit unit;
  unit.source = std::move(source);
  unit.newline = detect_newline(unit.source);
  std::vector<Token> toks = tokenize(unit.source);
  check_balance(toks);
  Parser(unit.source, std::move(toks)).parse_unit(unit);
  return unit;
}

Stmt parse_statement(std::string_view text) {
  std::vector<Token> toks = tokenize(text);
  check_balance(toks);
  return Parser(text, std::move(toks)).single_statement();
}

Expr parse_expression(std::string_view text) {
  std::vector<Token> toks = tokenize(text);
  check_balance(toks);
  return Parser(text, std::move(toks)).single_expression();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SourceFile load_source_file(const std::filesystem::path& path) {
  return SourceFile{path, parse(read_file(path))};
}

}  // namespace api_evolve::jast
