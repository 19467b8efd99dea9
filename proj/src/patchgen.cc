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

#include "api_evolve/patchgen.h"

#include <algorithm>
#include <cctype>
#include <set>

#include "api_evolve/dataflow.h"
#include "api_evolve/errors.h"
#include "api_evolve/parser.h"
#include "api_evolve/printer.h"

namespace api_evolve::patchgen {
namespace {

using jast::Expr;
using jast::ExprKind;
using jast::Stmt;
using jast::StmtKind;

constexpr std::string_view kNeedsDirective = "@needs@";
constexpr std::string_view kNeedsWrapper = "__Needs__";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::string_view ltrim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  return s;
}

std::string_view rtrim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::string to_lf(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\r' && i + 1 < s.size() && s[i + 1] == '\n') continue;
    out += s[i];
  }
  return out;
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.emplace_back(text.substr(start));
      break;
    }
    std::string_view line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    start = nl + 1;
  }
  return lines;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0])))
    return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    auto c = static_cast<unsigned char>(ch);
    return std::isalnum(c) || c == '_' || c == '$';
  });
}

// Source bytes of `span` with the first line's indentation removed from
// every following line.
std::string dedent(std::string_view source, jast::Span span) {
  std::string indent = jast::line_indent(source, span.begin);
  std::vector<std::string> lines =
      split_lines(source.substr(span.begin, span.size()));
  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (i > 0) {
      out += '\n';
      if (line.substr(0, indent.size()) == indent)
        line.remove_prefix(indent.size());
    }
    out += line;
  }
  return out;
}

bool contains_ptr(const Expr& e, const Expr* target) {
  if (&e == target) return true;
  return std::any_of(e.operands.begin(), e.operands.end(),
                     [&](const Expr& c) { return contains_ptr(c, target); });
}

bool mentions_sdk(const Expr& e) {
  return jast::contains_identifier(jast::render_expr(e), "SDK_INT");
}

// +1 when the condition holds on newer platforms, -1 on older ones, 0 when
// it cannot be told.
int guard_direction(const Expr& cond) {
  switch (cond.kind) {
    case ExprKind::kParen:
      return guard_direction(cond.operands[0]);
    case ExprKind::kUnary:
      return cond.text == "!" ? -guard_direction(cond.operands[0]) : 0;
    case ExprKind::kBinary: {
      const std::string& op = cond.text;
      if (op == "&&" || op == "||") {
        int d = guard_direction(cond.operands[0]);
        return d != 0 ? d : guard_direction(cond.operands[1]);
      }
      if (op != "<" && op != "<=" && op != ">" && op != ">=") return 0;
      bool left = mentions_sdk(cond.operands[0]);
      bool right = mentions_sdk(cond.operands[1]);
      if (left == right) return 0;
      bool newer = op[0] == '>';
      return newer == left ? 1 : -1;
    }
    default:
      return 0;
  }
}

// The site whose statement sits directly in `branch`.
const sigmap::CallSite* site_in(const std::vector<sigmap::CallSite>& sites,
                                const Stmt& branch) {
  for (const sigmap::CallSite& s : sites) {
    if (s.enclosing_stmt == &branch) return &s;
    if (branch.kind == StmtKind::kBlock && !s.ancestors.empty() &&
        s.ancestors.back() == &branch)
      return &s;
  }
  return nullptr;
}

void collect_ifs(const Stmt& s, std::vector<const Stmt*>& out) {
  if (s.kind == StmtKind::kIf) out.push_back(&s);
  for (const Stmt& c : s.children) collect_ifs(c, out);
}

class Builder {
 public:
  Builder(const jast::CompilationUnit& unit, const sigmap::ApiMapping& mapping,
          const GenerateOptions& options, const sigmap::CallSite& dep,
          const sigmap::CallSite& upd)
      : unit_(unit), mapping_(mapping), dep_(dep), upd_(upd) {
    ctx_ = dataflow::context_for(unit, upd);
    if (options.rewire_shared_args) {
      auto args = dep.call->args();
      for (std::size_t i = 0; i < args.size(); ++i)
        if (args[i].kind == ExprKind::kName && !ctx_.pinned.count(args[i].text))
          ctx_.pinned.emplace(args[i].text, Expr::name(iden(i)));
    }
  }

  Stmt deprecated_pattern() {
    return statement_pattern(*dep_.enclosing_stmt, true);
  }
  Stmt updated_pattern() {
    return statement_pattern(*upd_.enclosing_stmt, false);
  }

  std::vector<MetaVar> metavars() const {
    std::vector<MetaVar> out;
    for (const auto& [frag, name] : exps_)
      out.push_back(MetaVar{MetaKind::kExpression, name});
    for (std::size_t i = 0; i < dep_.call->args().size(); ++i)
      out.push_back(MetaVar{MetaKind::kIdentifier, iden(i)});
    if (dep_.call->has_receiver)
      out.push_back(MetaVar{MetaKind::kIdentifier, std::string(kReceiverMeta)});
    return out;
  }

  const std::vector<std::string>& temp_lines() const { return temp_lines_; }
  const std::vector<std::string>& temp_types() const { return temp_types_; }
  const std::vector<dataflow::Definition>& needs() const { return needs_; }
  const dataflow::ResolutionContext& context() const { return ctx_; }

 private:
  static std::string iden(std::size_t i) { return "iden" + std::to_string(i); }

  Stmt statement_pattern(const Stmt& s, bool deprecated) {
    const char* which = deprecated ? "deprecated" : "replacement";
    switch (s.kind) {
      case StmtKind::kExpr:
        return Stmt::expression(expr_pattern(*s.expr, deprecated));
      case StmtKind::kReturn:
        return Stmt::return_stmt(expr_pattern(*s.expr, deprecated));
      case StmtKind::kLocalVar:
        throw ExampleShapeError(
            std::string("the ") + which +
            " call initializes a local variable declaration; wrapping it "
            "in if/else would change the variable's scope, so the example "
            "must assign to a variable declared before the if/else");
      default:
        throw ExampleShapeError(std::string("the ") + which +
                                " call must be an expression statement, an "
                                "assignment or a return statement");
    }
  }

  Expr expr_pattern(const Expr& e, bool deprecated) {
    const Expr* call = deprecated ? dep_.call : upd_.call;
    if (&e == call) return deprecated ? deprecated_call() : updated_call();
    Expr out = e;
    out.span.reset();
    for (std::size_t i = 0; i < e.operands.size(); ++i) {
      const Expr& child = e.operands[i];
      if (contains_ptr(child, call)) {
        out.operands[i] = expr_pattern(child, deprecated);
      } else if (deprecated) {
        out.operands[i] = Expr::name(exp_for(child));
      } else if (const std::string* exp = find_exp(child)) {
        out.operands[i] = Expr::name(*exp);
      } else {
        out.operands[i] = ground(child, "expression");
      }
    }
    return out;
  }

  Expr deprecated_call() {
    const Expr& c = *dep_.call;
    std::optional<Expr> recv;
    if (c.has_receiver) recv = Expr::name(std::string(kReceiverMeta));
    std::vector<Expr> args;
    for (std::size_t i = 0; i < c.args().size(); ++i)
      args.push_back(Expr::name(iden(i)));
    return Expr::method_call(std::move(recv), c.text, std::move(args));
  }

  Expr updated_call() {
    const Expr& c = *upd_.call;
    const Expr& d = *dep_.call;
    std::optional<Expr> recv;
    if (c.has_receiver) {
      if (d.has_receiver && jast::same_structure(*c.receiver(), *d.receiver()))
        recv = Expr::name(std::string(kReceiverMeta));
      else
        recv = ground(*c.receiver(), "receiver");
    }
    std::vector<Expr> args;
    auto upd_args = c.args();
    auto dep_args = d.args();
    for (std::size_t j = 0; j < upd_args.size(); ++j) {
      const Expr& a = upd_args[j];
      auto shared = std::find_if(dep_args.begin(), dep_args.end(),
                                 [&](const Expr& x) {
                                   return jast::same_structure(x, a);
                                 });
      if (shared != dep_args.end()) {
        args.push_back(Expr::name(iden(shared - dep_args.begin())));
        continue;
      }
      Expr value = ground(a, "argument");
      std::string temp =
          std::string(kPatchTempPrefix) + std::to_string(temp_lines_.size());
      std::string type =
          j < mapping_.replacement.param_types.size()
              ? jast::simple_type_name(mapping_.replacement.param_types[j])
              : "Object";
      temp_lines_.push_back(type + " " + temp + " = " +
                            jast::render_expr(value) + ";");
      temp_types_.push_back(type);
      args.push_back(Expr::name(temp));
    }
    return Expr::method_call(std::move(recv), c.text, std::move(args));
  }

  // Resolves part of the replacement statement to a value that no longer
  // refers to the example's local variables.
  Expr ground(const Expr& e, const char* what) {
    dataflow::ResolvedValue v = dataflow::resolve_expression(e, ctx_);
    if (!v.resolved()) {
      std::string text = e.span ? std::string(jast::source_text(unit_, *e.span))
                                : jast::render_expr(e);
      throw ResolutionError("cannot resolve " + std::string(what) + " '" +
                                text + "' of the replacement call: " +
                                v.reason,
                            text);
    }
    needs_.insert(needs_.end(), v.needs.begin(), v.needs.end());
    return v.expr;
  }

  std::string exp_for(const Expr& fragment) {
    if (const std::string* name = find_exp(fragment)) return *name;
    std::string name = "exp" + std::to_string(exps_.size());
    exps_.emplace_back(fragment, name);
    return name;
  }

  const std::string* find_exp(const Expr& fragment) const {
    for (const auto& [frag, name] : exps_)
      if (jast::same_structure(frag, fragment)) return &name;
    return nullptr;
  }

  const jast::CompilationUnit& unit_;
  const sigmap::ApiMapping& mapping_;
  const sigmap::CallSite& dep_;
  const sigmap::CallSite& upd_;
  dataflow::ResolutionContext ctx_;
  std::vector<std::pair<Expr, std::string>> exps_;
  std::vector<std::string> temp_lines_;
  std::vector<std::string> temp_types_;
  std::vector<dataflow::Definition> needs_;
};

PatchLine make_line(LineKind kind, std::string text) {
  PatchLine line;
  line.kind = kind;
  if (kind == LineKind::kContext || kind == LineKind::kRemove ||
      (kind == LineKind::kAdd && rtrim(text).ends_with(";"))) {
    Stmt s = jast::parse_statement(text);
    if (s.kind != StmtKind::kOpaque) line.pattern = std::move(s);
  }
  line.text = std::move(text);
  return line;
}

std::set<std::string> identifier_tokens(std::string_view text) {
  std::set<std::string> out;
  for (const jast::Token& t : jast::tokenize(text))
    if (t.kind == jast::TokenKind::kIdentifier) out.emplace(t.text);
  return out;
}

// Identifiers that are not member selections; `Outer.Inner` refers to
// Outer only.
std::set<std::string> unqualified_references(std::string_view text) {
  std::set<std::string> out;
  std::vector<jast::Token> tokens = jast::tokenize(text);
  for (std::size_t i = 0; i < tokens.size(); ++i)
    if (tokens[i].kind == jast::TokenKind::kIdentifier &&
        (i == 0 || tokens[i - 1].text != "."))
      out.emplace(tokens[i].text);
  return out;
}

// Qualified names worth importing into targets: the example's own imports
// and the qualified parameter types of the replacement API.
std::vector<std::string> import_candidates(const jast::CompilationUnit& unit,
                                           const sigmap::ApiMapping& mapping) {
  std::vector<std::string> out;
  for (const jast::ImportDecl& imp : unit.imports)
    if (!imp.is_static && !imp.wildcard) out.push_back(imp.name);
  for (const std::string& type : mapping.replacement.param_types) {
    std::string base = type.substr(0, type.find_first_of("<["));
    base = std::string(trim(base));
    if (base.find('.') != std::string::npos) out.push_back(base);
  }
  std::vector<std::string> unique;
  for (const std::string& c : out)
    if (std::find(unique.begin(), unique.end(), c) == unique.end())
      unique.push_back(c);
  return unique;
}

SemanticPatch build_patch(const jast::CompilationUnit& example,
                          const sigmap::ApiMapping& mapping,
                          const GenerateOptions& options, const Stmt& guard_if,
                          bool then_updated, const sigmap::CallSite& dep,
                          const sigmap::CallSite& upd) {
  Builder builder(example, mapping, options, dep, upd);
  Stmt context = builder.deprecated_pattern();
  Stmt updated = builder.updated_pattern();

  SemanticPatch p;
  p.rule_name = "update_" + mapping.deprecated.method_name;
  p.metavars = builder.metavars();
  p.guard_text = to_lf(jast::source_text(example, *guard_if.expr->span));
  p.guard_cond = jast::parse_expression(p.guard_text);

  std::vector<PatchLine> updated_lines;
  for (const std::string& t : builder.temp_lines())
    updated_lines.push_back(make_line(LineKind::kAdd, t));
  updated_lines.push_back(make_line(LineKind::kAdd, jast::render_stmt(updated)));
  PatchLine context_line =
      make_line(LineKind::kContext, jast::render_stmt(context));

  p.hunk.push_back(PatchLine{LineKind::kEllipsis, "...", std::nullopt, 0});
  p.hunk.push_back(make_line(LineKind::kAdd, "if (" + p.guard_text + ") {"));
  if (then_updated) {
    p.hunk.insert(p.hunk.end(), updated_lines.begin(), updated_lines.end());
    p.hunk.push_back(make_line(LineKind::kAdd, "} else {"));
    p.hunk.push_back(context_line);
  } else {
    p.hunk.push_back(context_line);
    p.hunk.push_back(make_line(LineKind::kAdd, "} else {"));
    p.hunk.insert(p.hunk.end(), updated_lines.begin(), updated_lines.end());
  }
  p.hunk.push_back(make_line(LineKind::kAdd, "}"));

  std::vector<dataflow::Definition> defs = dataflow::collect_dependencies(
      builder.needs(), example, builder.context().types);
  for (const dataflow::Definition& d : defs)
    p.definitions.push_back(
        dedent(example.source, d.method ? d.method->span : d.type->span));

  // An import is kept when its simple name shows up in code that ends up
  // in the target. Temporary declarations are inlined away, so their types
  // do not count.
  std::set<std::string> used = unqualified_references(p.guard_text);
  std::string inlined = jast::render_stmt(updated);
  for (std::size_t i = 0; i < builder.temp_lines().size(); ++i) {
    const std::string& line = builder.temp_lines()[i];
    inlined += " " + line.substr(builder.temp_types()[i].size());
  }
  for (const std::string& d : p.definitions) inlined += " " + d;
  for (const std::string& id : unqualified_references(inlined))
    used.insert(id);
  for (const std::string& cand : import_candidates(example, mapping)) {
    std::string simple = cand.substr(cand.rfind('.') + 1);
    if (used.count(simple)) p.imports.push_back(cand);
  }
  return p;
}

void check_metavar_name(std::string_view name, int line) {
  if (!is_identifier(name))
    throw MalformedPatch("invalid metavariable name '" + std::string(name) + "'",
                         line);
}

}  // namespace

bool operator==(const PatchLine& a, const PatchLine& b) {
  return a.kind == b.kind &&
         jast::normalize_whitespace(a.text) == jast::normalize_whitespace(b.text);
}

const PatchLine* SemanticPatch::context() const {
  for (const PatchLine& l : hunk)
    if (l.kind == LineKind::kContext) return &l;
  return nullptr;
}

const MetaVar* SemanticPatch::metavar(std::string_view name) const {
  for (const MetaVar& m : metavars)
    if (m.name == name) return &m;
  return nullptr;
}

std::vector<std::string> SemanticPatch::temps() const {
  std::vector<std::string> out;
  for (const PatchLine& l : hunk)
    if (l.kind == LineKind::kAdd && l.pattern &&
        l.pattern->kind == StmtKind::kLocalVar)
      out.push_back(l.pattern->name);
  return out;
}

bool operator==(const SemanticPatch& a, const SemanticPatch& b) {
  auto same_texts = [](const std::vector<std::string>& x,
                       const std::vector<std::string>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (jast::normalize_whitespace(x[i]) != jast::normalize_whitespace(y[i]))
        return false;
    return true;
  };
  return a.rule_name == b.rule_name && a.metavars == b.metavars &&
         jast::same_structure(a.guard_cond, b.guard_cond) && a.hunk == b.hunk &&
         a.imports == b.imports && same_texts(a.definitions, b.definitions);
}

SemanticPatch generate_patch(const jast::CompilationUnit& example,
                             const sigmap::ApiMapping& mapping,
                             const GenerateOptions& options) {
  std::vector<sigmap::CallSite> dep_sites =
      sigmap::find_invocations(example, mapping.deprecated);
  std::vector<sigmap::CallSite> upd_sites =
      sigmap::find_invocations(example, mapping.replacement);
  bool same_shape =
      mapping.deprecated.method_name == mapping.replacement.method_name &&
      mapping.deprecated.arity() == mapping.replacement.arity();

  std::vector<const Stmt*> ifs;
  for (const jast::TypeDecl* t : jast::all_types(example))
    for (const jast::MethodDecl& m : t->methods)
      if (m.body) collect_ifs(*m.body, ifs);
  std::sort(ifs.begin(), ifs.end(), [](const Stmt* a, const Stmt* b) {
    return a->span->begin < b->span->begin;
  });

  for (const Stmt* s : ifs) {
    const Stmt* else_branch = s->else_branch();
    if (!else_branch || !mentions_sdk(*s->expr)) continue;
    const Stmt& then_branch = s->then_branch();
    const sigmap::CallSite* dep_then = site_in(dep_sites, then_branch);
    const sigmap::CallSite* dep_else = site_in(dep_sites, *else_branch);
    const sigmap::CallSite* upd_then = site_in(upd_sites, then_branch);
    const sigmap::CallSite* upd_else = site_in(upd_sites, *else_branch);
    bool then_updated;
    if (same_shape) {
      // Both branches call a method with the same name and arity; the
      // guard tells which branch runs on newer platforms.
      if (!dep_then || !dep_else) continue;
      then_updated = guard_direction(*s->expr) >= 0;
    } else if (upd_then && dep_else) {
      then_updated = true;
    } else if (dep_then && upd_else) {
      then_updated = false;
    } else {
      continue;
    }
    const sigmap::CallSite& dep = then_updated ? *dep_else : *dep_then;
    const sigmap::CallSite& upd = then_updated ? *upd_then : *upd_else;
    return build_patch(example, mapping, options, *s, then_updated, dep, upd);
  }
  throw ExampleShapeError(
      "no SDK_INT-guarded if/else found with " +
      mapping.deprecated.method_name + " in one branch and " +
      mapping.replacement.method_name + " in the other");
}

std::string render_patch(const SemanticPatch& patch) {
  std::string out = "@" + patch.rule_name + "@\n";
  for (MetaKind kind : {MetaKind::kExpression, MetaKind::kIdentifier}) {
    std::string names;
    for (const MetaVar& m : patch.metavars) {
      if (m.kind != kind) continue;
      if (!names.empty()) names += ", ";
      names += m.name;
    }
    if (names.empty()) continue;
    out += kind == MetaKind::kExpression ? "expression " : "identifier ";
    out += names + ";\n";
  }
  out += "@@\n";
  for (const PatchLine& l : patch.hunk) {
    std::string_view prefix;
    switch (l.kind) {
      case LineKind::kAdd:
        prefix = "+ ";
        break;
      case LineKind::kRemove:
        prefix = "- ";
        break;
      default:
        break;
    }
    for (const std::string& physical : split_lines(l.text))
      out += std::string(prefix) + physical + "\n";
  }
  if (!patch.imports.empty() || !patch.definitions.empty()) {
    out += "\n";
    out += kNeedsDirective;
    out += "\n";
    for (const std::string& imp : patch.imports)
      out += "import " + imp + ";\n";
    for (const std::string& def : patch.definitions) out += "\n" + def + "\n";
  }
  return out;
}

SemanticPatch parse_patch(std::string_view text) {
  std::vector<std::string> lines = split_lines(text);
  SemanticPatch p;
  std::size_t i = 0;
  auto line_no = [&](std::size_t idx) { return static_cast<int>(idx + 1); };
  while (i < lines.size() && trim(lines[i]).empty()) ++i;
  if (i == lines.size()) throw MalformedPatch("empty patch", 1);

  std::string_view header = trim(lines[i]);
  if (header.size() < 3 || header.front() != '@' || header.back() != '@' ||
      !is_identifier(header.substr(1, header.size() - 2)))
    throw MalformedPatch("expected a rule header '@name@'", line_no(i));
  p.rule_name = std::string(header.substr(1, header.size() - 2));
  ++i;

  std::vector<MetaVar> declared;
  bool closed = false;
  for (; i < lines.size(); ++i) {
    std::string_view l = trim(lines[i]);
    if (l.empty()) continue;
    if (l == "@@") {
      closed = true;
      ++i;
      break;
    }
    std::size_t sp = l.find_first_of(" \t");
    std::string_view kind_word = l.substr(0, sp);
    MetaKind kind;
    if (kind_word == "expression") {
      kind = MetaKind::kExpression;
    } else if (kind_word == "identifier") {
      kind = MetaKind::kIdentifier;
    } else {
      throw MalformedPatch(
          "unknown metavariable kind '" + std::string(kind_word) + "'",
          line_no(i));
    }
    if (sp == std::string_view::npos || l.back() != ';')
      throw MalformedPatch("metavariable declaration must end with ';'",
                           line_no(i));
    std::string_view names = l.substr(sp, l.size() - sp - 1);
    std::size_t start = 0;
    while (start <= names.size()) {
      std::size_t comma = names.find(',', start);
      std::string_view name = trim(names.substr(
          start, comma == std::string_view::npos ? names.npos : comma - start));
      check_metavar_name(name, line_no(i));
      declared.push_back(MetaVar{kind, std::string(name)});
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  if (!closed)
    throw MalformedPatch("missing '@@' after metavariable declarations",
                         line_no(lines.size() - 1));
  int hunk_line = line_no(i);

  std::optional<PatchLine> pending;
  auto finish = [&]() {
    if (!pending) return;
    std::string_view t = rtrim(pending->text);
    if (t.ends_with(";") || t.ends_with("{") || t.ends_with("}")) {
      PatchLine done = make_line(pending->kind, std::string(t));
      done.line = pending->line;
      p.hunk.push_back(std::move(done));
      pending.reset();
    }
  };
  std::size_t needs_at = lines.size();
  for (; i < lines.size(); ++i) {
    const std::string& raw = lines[i];
    std::string_view l = trim(raw);
    if (l.empty()) continue;
    if (l.front() == '@') {
      if (l == kNeedsDirective) {
        needs_at = i + 1;
        break;
      }
      throw MalformedPatch("unknown directive '" + std::string(l) + "'",
                           line_no(i));
    }
    LineKind kind = LineKind::kContext;
    std::string_view body = raw;
    if (l == "...") {
      if (pending)
        throw MalformedPatch("unterminated statement", pending->line);
      p.hunk.push_back(PatchLine{LineKind::kEllipsis, "...", std::nullopt,
                                 line_no(i)});
      continue;
    }
    if (raw.front() == '+' || raw.front() == '-') {
      kind = raw.front() == '+' ? LineKind::kAdd : LineKind::kRemove;
      body.remove_prefix(1);
      if (!body.empty() && body.front() == ' ') body.remove_prefix(1);
    }
    if (pending && pending->kind == kind) {
      pending->text += "\n" + std::string(body);
    } else {
      if (pending)
        throw MalformedPatch("unterminated statement", pending->line);
      pending = PatchLine{kind, std::string(ltrim(body)), std::nullopt,
                          line_no(i)};
    }
    finish();
  }
  if (pending) throw MalformedPatch("unterminated statement", pending->line);

  bool has_code = std::any_of(p.hunk.begin(), p.hunk.end(),
                              [](const PatchLine& l) {
                                return l.kind != LineKind::kEllipsis;
                              });
  if (!has_code) throw MalformedPatch("empty hunk", hunk_line);

  const PatchLine* context = nullptr;
  for (const PatchLine& l : p.hunk) {
    if (l.kind != LineKind::kContext) continue;
    if (context)
      throw MalformedPatch("expected exactly one context line", l.line);
    context = &l;
  }
  if (!context) throw MalformedPatch("hunk has no context line", hunk_line);
  if (!context->pattern)
    throw MalformedPatch("context line is not a supported statement",
                         context->line);

  const PatchLine* guard = nullptr;
  for (const PatchLine& l : p.hunk) {
    if (l.kind == LineKind::kAdd && l.text.starts_with("if") &&
        l.text.ends_with("{")) {
      guard = &l;
      break;
    }
  }
  if (!guard)
    throw MalformedPatch("hunk adds no 'if (...) {' guard", hunk_line);
  std::size_t open = guard->text.find('(');
  std::size_t close = guard->text.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw MalformedPatch("malformed guard line", guard->line);
  p.guard_text = guard->text.substr(open + 1, close - open - 1);
  if (!jast::contains_identifier(p.guard_text, "SDK_INT"))
    throw MalformedPatch("guard does not test SDK_INT", guard->line);
  p.guard_cond = jast::parse_expression(p.guard_text);

  std::set<std::string> in_context = identifier_tokens(context->text);
  std::set<std::string> used;
  for (const PatchLine& l : p.hunk) {
    for (const std::string& id : identifier_tokens(l.text)) {
      auto it = std::find_if(declared.begin(), declared.end(),
                             [&](const MetaVar& m) { return m.name == id; });
      if (it == declared.end()) continue;
      if (!in_context.count(id))
        throw MalformedPatch(
            "metavariable '" + id + "' is not bound by the context line",
            l.line);
      used.insert(id);
    }
  }
  for (const MetaVar& m : declared)
    if (used.count(m.name) && !p.metavar(m.name)) p.metavars.push_back(m);

  if (needs_at < lines.size()) {
    std::string body;
    for (std::size_t k = needs_at; k < lines.size(); ++k) {
      std::string_view l = trim(lines[k]);
      if (l.starts_with("import ") && l.ends_with(";")) {
        p.imports.emplace_back(trim(l.substr(7, l.size() - 8)));
        continue;
      }
      if (l.size() >= 2 && l.front() == '@' && l.back() == '@')
        throw MalformedPatch("unexpected directive '" + std::string(l) +
                                 "' after " + std::string(kNeedsDirective),
                             line_no(k));
      body += lines[k] + "\n";
    }
    if (!trim(body).empty()) {
      std::string wrapped =
          "class " + std::string(kNeedsWrapper) + " {\n" + body + "}\n";
      jast::CompilationUnit unit;
      try {
        unit = jast::parse(wrapped);
      } catch (const UnbalancedSource& e) {
        throw MalformedPatch(
            std::string("unbalanced definitions: ") + e.what(),
            line_no(needs_at - 1));
      }
      if (unit.types.size() != 1)
        throw MalformedPatch("definitions must be member declarations",
                             line_no(needs_at - 1));
      const jast::TypeDecl& holder = unit.types[0];
      std::vector<jast::Span> spans;
      for (const jast::MethodDecl& m : holder.methods) spans.push_back(m.span);
      for (const jast::TypeDecl& t : holder.nested) spans.push_back(t.span);
      for (const jast::FieldDecl& f : holder.fields)
        if (std::find(spans.begin(), spans.end(), f.span) == spans.end())
          spans.push_back(f.span);
      for (const jast::Span& s : holder.opaque_members) spans.push_back(s);
      std::sort(spans.begin(), spans.end(),
                [](const jast::Span& a, const jast::Span& b) {
                  return a.begin < b.begin;
                });
      for (const jast::Span& s : spans)
        p.definitions.push_back(dedent(unit.source, s));
    }
  }
  return p;
}

}  // namespace api_evolve::patchgen
