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

#include "api_evolve/dataflow.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "api_evolve/printer.h"

namespace api_evolve::dataflow {
namespace {

using jast::Expr;
using jast::ExprKind;
using jast::Stmt;
using jast::StmtKind;
using jast::Token;
using jast::TokenKind;

struct Unresolvable {
  std::string reason;
};

void strip_spans(Expr& e) {
  e.span.reset();
  for (Expr& c : e.operands) strip_spans(c);
}

bool starts_upper(std::string_view s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s[0]));
}

bool is_assign_op(std::string_view op) {
  static constexpr std::string_view kOps[] = {
      "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", "++", "--"};
  return std::find(std::begin(kOps), std::end(kOps), op) != std::end(kOps);
}

// Whether `text` contains a write to `name`: an assignment, a compound
// assignment or an increment. Declarations count as writes too.
bool writes_name(std::string_view text, std::string_view name) {
  std::vector<Token> toks = jast::tokenize(text);
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (toks[i].kind != TokenKind::kIdentifier || toks[i].text != name)
      continue;
    if (i > 0 && toks[i - 1].text == "." &&
        !(i > 1 && toks[i - 2].text == "this"))
      continue;
    if (i > 0 && (toks[i - 1].text == "++" || toks[i - 1].text == "--"))
      return true;
    if (i + 1 >= toks.size()) continue;
    if (is_assign_op(toks[i + 1].text)) return true;
    // `>>=` and `>>>=` arrive as runs of single `>` followed by `=`.
    std::size_t j = i + 1;
    while (j < toks.size() && toks[j].text == ">" &&
           (j == i + 1 || jast::adjacent(toks[j - 1], toks[j])))
      ++j;
    if (j - (i + 1) >= 2 && j < toks.size() && toks[j].text == "=" &&
        jast::adjacent(toks[j - 1], toks[j]))
      return true;
  }
  return false;
}

struct Lookup {
  enum Kind { kNone, kLocal, kParam, kField, kUninitialized, kAmbiguous };
  Kind kind = kNone;
  const Expr* value = nullptr;
  std::vector<const Stmt*> path;  // definition position for locals
  const jast::FieldDecl* field = nullptr;
  std::vector<const jast::TypeDecl*> field_types;
};

class Resolver {
 public:
  Expr resolve(const Expr& e, const ResolutionContext& ctx) {
    switch (e.kind) {
      case ExprKind::kLiteral:
        return e;
      case ExprKind::kName:
        return resolve_name(e, ctx);
      case ExprKind::kFieldAccess:
        return resolve_field_access(e, ctx);
      case ExprKind::kMethodCall: {
        Expr out = e;
        if (e.has_receiver) out.operands[0] = resolve_root(e.operands[0], ctx);
        for (Expr& a : out.args()) a = resolve(a, ctx);
        return out;
      }
      case ExprKind::kObjectCreation:
      case ExprKind::kBinary:
      case ExprKind::kCast:
      case ExprKind::kParen: {
        Expr out = e;
        for (Expr& c : out.operands) c = resolve(c, ctx);
        return out;
      }
      case ExprKind::kUnary: {
        if (e.text == "++" || e.text == "--")
          throw Unresolvable{"increment of '" + jast::render_expr(e) + "'"};
        Expr out = e;
        out.operands[0] = resolve(e.operands[0], ctx);
        return out;
      }
      case ExprKind::kAssign:
        throw Unresolvable{"assignment used as a value"};
      case ExprKind::kOpaque:
        throw Unresolvable{"expression outside the supported subset: '" +
                           e.text + "'"};
    }
    throw Unresolvable{"unknown expression"};
  }

 private:
  // Receivers may name a type or package instead of a value.
  Expr resolve_root(const Expr& e, const ResolutionContext& ctx) {
    if (e.kind == ExprKind::kName && !is_variable(e.text, ctx)) {
      if (e.text == "this" || e.text == "super")
        throw Unresolvable{"receiver '" + e.text + "'"};
      return e;
    }
    if (e.kind == ExprKind::kFieldAccess) return resolve_field_access(e, ctx);
    return resolve(e, ctx);
  }

  Expr resolve_field_access(const Expr& e, const ResolutionContext& ctx) {
    const Expr& recv = e.operands[0];
    if (recv.is_name("this")) {
      Lookup found = lookup_field(e.text, ctx.types);
      return follow(e.text, found, ctx);
    }
    Expr out = e;
    out.operands[0] = resolve_root(recv, ctx);
    return out;
  }

  bool is_variable(const std::string& name, const ResolutionContext& ctx) {
    if (ctx.pinned.count(name)) return true;
    return lookup(name, ctx).kind != Lookup::kNone;
  }

  Expr resolve_name(const Expr& e, const ResolutionContext& ctx) {
    if (auto it = ctx.pinned.find(e.text); it != ctx.pinned.end())
      return it->second;
    if (e.text == "this" || e.text == "super")
      throw Unresolvable{"'" + e.text + "' has no value outside its object"};
    Lookup found = lookup(e.text, ctx);
    if (found.kind == Lookup::kNone) {
      if (starts_upper(e.text)) return e;  // type or imported constant
      throw Unresolvable{"no definition of '" + e.text + "'"};
    }
    return follow(e.text, found, ctx);
  }

  Expr follow(const std::string& name, const Lookup& found,
              const ResolutionContext& ctx) {
    switch (found.kind) {
      case Lookup::kNone:
        throw Unresolvable{"no definition of '" + name + "'"};
      case Lookup::kParam:
        throw Unresolvable{"'" + name + "' is a method parameter"};
      case Lookup::kUninitialized:
        throw Unresolvable{"'" + name + "' has no initializer"};
      case Lookup::kAmbiguous:
        throw Unresolvable{"'" + name + "' is assigned on a branch"};
      case Lookup::kLocal: {
        ResolutionContext inner = ctx;
        inner.path = found.path;
        return memoized(name, found.path.back(), *found.value, inner);
      }
      case Lookup::kField: {
        ResolutionContext inner = ctx;
        inner.method = nullptr;
        inner.path.clear();
        inner.types = found.field_types;
        return memoized(name, found.field, *found.value, inner);
      }
    }
    throw Unresolvable{"no definition of '" + name + "'"};
  }

  // Each (name, definition) pair is resolved once; meeting it again while
  // it is still being resolved means the definitions form a cycle.
  Expr memoized(const std::string& name, const void* def, const Expr& value,
                const ResolutionContext& ctx) {
    Key key{name, def};
    if (auto it = done_.find(key); it != done_.end()) return it->second;
    if (!active_.insert(key).second)
      throw Unresolvable{"cyclic definition of '" + name + "'"};
    Expr out = resolve(value, ctx);
    active_.erase(key);
    done_.emplace(key, out);
    return out;
  }

  // Nearest definition of `name` visible before the context's anchor.
  Lookup lookup(const std::string& name, const ResolutionContext& ctx) {
    for (std::size_t depth = ctx.path.size(); depth-- > 1;) {
      const Stmt* parent = ctx.path[depth - 1];
      const Stmt* child = ctx.path[depth];
      if (parent->kind != StmtKind::kBlock) continue;
      auto it = std::find_if(parent->children.begin(), parent->children.end(),
                             [&](const Stmt& s) { return &s == child; });
      while (it != parent->children.begin()) {
        --it;
        const Stmt& s = *it;
        if (s.kind == StmtKind::kLocalVar && s.name == name) {
          Lookup out;
          if (!s.expr) {
            out.kind = Lookup::kUninitialized;
            return out;
          }
          out.kind = Lookup::kLocal;
          out.value = &*s.expr;
          out.path.assign(ctx.path.begin(), ctx.path.begin() + depth);
          out.path.push_back(&s);
          return out;
        }
        if (s.kind == StmtKind::kExpr && s.expr->kind == ExprKind::kAssign &&
            s.expr->text == "=" && s.expr->operands[0].is_name(name)) {
          Lookup out;
          out.kind = Lookup::kLocal;
          out.value = &s.expr->operands[1];
          out.path.assign(ctx.path.begin(), ctx.path.begin() + depth);
          out.path.push_back(&s);
          return out;
        }
        if (s.span && writes_name(jast::source_text(*ctx.unit, *s.span),
                                  name)) {
          Lookup out;
          out.kind = Lookup::kAmbiguous;
          return out;
        }
      }
    }
    if (ctx.method) {
      for (const jast::Param& p : ctx.method->params) {
        if (p.name == name) {
          Lookup out;
          out.kind = Lookup::kParam;
          return out;
        }
      }
    }
    return lookup_field(name, ctx.types);
  }

  Lookup lookup_field(const std::string& name,
                      const std::vector<const jast::TypeDecl*>& types) {
    Lookup out;
    for (std::size_t i = 0; i < types.size(); ++i) {
      const jast::FieldDecl* f = types[i]->find_field(name);
      if (!f) continue;
      if (!f->initializer) {
        out.kind = Lookup::kUninitialized;
        return out;
      }
      out.kind = Lookup::kField;
      out.field = f;
      out.value = &*f->initializer;
      out.field_types.assign(types.begin() + i, types.end());
      return out;
    }
    return out;
  }

  using Key = std::pair<std::string, const void*>;
  std::set<Key> active_;
  std::map<Key, Expr> done_;
};

ValueKind classify(const Expr& e) {
  switch (e.kind) {
    case ExprKind::kLiteral:
      return ValueKind::kLiteral;
    case ExprKind::kName:
    case ExprKind::kFieldAccess:
      return ValueKind::kStaticMember;
    case ExprKind::kMethodCall:
      return ValueKind::kMethodInvocation;
    case ExprKind::kObjectCreation:
      return ValueKind::kObjectCreation;
    default:
      return ValueKind::kCompound;
  }
}

// Number of arguments of the call whose `(` is toks[open].
std::size_t call_arity(const std::vector<Token>& toks, std::size_t open) {
  int depth = 0;
  std::size_t commas = 0;
  for (std::size_t i = open; i < toks.size(); ++i) {
    std::string_view t = toks[i].text;
    if (t == "(" || t == "[" || t == "{") ++depth;
    if (t == ")" || t == "]" || t == "}") {
      if (--depth == 0) return i == open + 1 ? 0 : commas + 1;
    }
    if (t == "," && depth == 1) ++commas;
  }
  return commas + 1;
}

bool is_within(const jast::TypeDecl* inner, const jast::TypeDecl* outer) {
  return outer->span.contains(inner->span);
}

class DependencyScanner {
 public:
  DependencyScanner(const jast::CompilationUnit& unit,
                    const std::vector<const jast::TypeDecl*>& excluded)
      : unit_(unit), excluded_(excluded) {
    if (excluded_.empty()) {
      for (const jast::TypeDecl& t : unit.types) owners_.push_back(&t);
    } else {
      owners_ = excluded_;
    }
  }

  // Definitions referenced from `text`; methods only count when called
  // without a receiver, through `this`, or through a type of the unit.
  std::vector<Definition> references(std::string_view text) const {
    std::vector<Definition> out;
    std::vector<Token> toks = jast::tokenize(text);
    for (std::size_t i = 0; i < toks.size(); ++i) {
      if (toks[i].kind != TokenKind::kIdentifier) continue;
      std::string_view word = toks[i].text;
      bool called = i + 1 < toks.size() && toks[i + 1].text == "(";
      bool dotted = i > 0 && toks[i - 1].text == ".";
      if (called && (i == 0 || toks[i - 1].text != "new")) {
        bool local_receiver =
            !dotted || (i > 1 && (toks[i - 2].text == "this" ||
                                  find_type(toks[i - 2].text) != nullptr));
        if (local_receiver) {
          if (const jast::MethodDecl* m =
                  find_method(word, call_arity(toks, i + 1)))
            out.push_back(Definition{m, nullptr});
        }
        continue;
      }
      if (dotted) continue;
      if (const jast::TypeDecl* t = find_type(word)) {
        if (!is_excluded(t)) out.push_back(Definition{nullptr, t});
      }
    }
    return out;
  }

  std::string_view text_of(const Definition& d) const {
    return jast::source_text(unit_, d.method ? d.method->span : d.type->span);
  }

 private:
  const jast::MethodDecl* find_method(std::string_view name,
                                      std::size_t arity) const {
    for (const jast::TypeDecl* t : owners_)
      for (const jast::MethodDecl& m : t->methods)
        if (m.name == name && m.arity() == arity) return &m;
    return nullptr;
  }

  const jast::TypeDecl* find_type(std::string_view name) const {
    for (const jast::TypeDecl* t : jast::all_types(unit_))
      if (t->kind != jast::TypeKind::kImplicit && t->name == name) return t;
    return nullptr;
  }

  bool is_excluded(const jast::TypeDecl* t) const {
    return std::find(excluded_.begin(), excluded_.end(), t) != excluded_.end();
  }

  const jast::CompilationUnit& unit_;
  std::vector<const jast::TypeDecl*> excluded_;
  std::vector<const jast::TypeDecl*> owners_;
};

void sort_unique(std::vector<Definition>& defs) {
  std::stable_sort(defs.begin(), defs.end(),
                   [](const Definition& a, const Definition& b) {
                     return a.begin() < b.begin();
                   });
  defs.erase(std::unique(defs.begin(), defs.end()), defs.end());
}

void find_path(const Stmt& s, const Stmt* target,
               std::vector<const Stmt*>& path, bool& found) {
  if (found) return;
  path.push_back(&s);
  if (&s == target) {
    found = true;
    return;
  }
  for (const Stmt& c : s.children) {
    find_path(c, target, path, found);
    if (found) return;
  }
  path.pop_back();
}

}  // namespace

const char* to_string(ValueKind kind) {
  switch (kind) {
    case ValueKind::kLiteral:
      return "Literal";
    case ValueKind::kStaticMember:
      return "StaticMember";
    case ValueKind::kMethodInvocation:
      return "MethodInvocation";
    case ValueKind::kObjectCreation:
      return "ObjectCreation";
    case ValueKind::kCompound:
      return "Compound";
    case ValueKind::kUnresolved:
      return "Unresolved";
  }
  return "Unresolved";
}

std::vector<const jast::TypeDecl*> type_chain(const jast::CompilationUnit& unit,
                                              const jast::TypeDecl* type) {
  std::vector<const jast::TypeDecl*> chain;
  if (!type) return chain;
  for (const jast::TypeDecl* t : jast::all_types(unit))
    if (t == type || is_within(type, t)) chain.push_back(t);
  // all_types lists outer types before the types they contain.
  std::reverse(chain.begin(), chain.end());
  return chain;
}

ResolutionContext context_for(const jast::CompilationUnit& unit,
                              const sigmap::CallSite& site) {
  ResolutionContext ctx;
  ctx.unit = &unit;
  ctx.method = site.enclosing_method;
  ctx.types = type_chain(unit, site.enclosing_type);
  if (site.enclosing_method && site.enclosing_method->body &&
      site.enclosing_stmt) {
    bool found = false;
    find_path(*site.enclosing_method->body, site.enclosing_stmt, ctx.path,
              found);
    if (!found) ctx.path.clear();
  }
  return ctx;
}

ResolvedValue resolve_expression(const jast::Expr& e,
                                 const ResolutionContext& ctx) {
  ResolvedValue out;
  out.context_types = ctx.types;
  try {
    Resolver resolver;
    out.expr = resolver.resolve(e, ctx);
    strip_spans(out.expr);
    out.kind = classify(out.expr);
    if (ctx.unit) {
      DependencyScanner scanner(*ctx.unit, ctx.types);
      out.needs = scanner.references(jast::render_expr(out.expr));
      sort_unique(out.needs);
    }
  } catch (const Unresolvable& u) {
    out.kind = ValueKind::kUnresolved;
    out.expr = e;
    out.needs.clear();
    out.reason = u.reason;
  }
  return out;
}

std::vector<Definition> collect_dependencies(
    const ResolvedValue& v, const jast::CompilationUnit& unit) {
  if (!v.resolved()) return {};
  return collect_dependencies(v.needs, unit, v.context_types);
}

std::vector<Definition> collect_dependencies(
    const std::vector<Definition>& roots, const jast::CompilationUnit& unit,
    const std::vector<const jast::TypeDecl*>& excluded) {
  DependencyScanner scanner(unit, excluded);
  std::vector<Definition> out;
  std::vector<Definition> work = roots;
  while (!work.empty()) {
    Definition d = work.back();
    work.pop_back();
    if (std::find(out.begin(), out.end(), d) != out.end()) continue;
    out.push_back(d);
    for (const Definition& next : scanner.references(scanner.text_of(d)))
      work.push_back(next);
  }
  // Types nested in a collected type travel with it.
  std::vector<Definition> kept;
  for (const Definition& d : out) {
    bool inside = d.type && std::any_of(out.begin(), out.end(),
                                        [&](const Definition& o) {
                                          return o.type && o.type != d.type &&
                                                 is_within(d.type, o.type);
                                        });
    if (!inside) kept.push_back(d);
  }
  sort_unique(kept);
  return kept;
}

}  // namespace api_evolve::dataflow
