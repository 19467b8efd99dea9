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

#include "api_evolve/engine.h"

#include <algorithm>
#include <cctype>

#include "api_evolve/errors.h"
#include "api_evolve/lexer.h"
#include "api_evolve/parser.h"
#include "api_evolve/printer.h"

namespace api_evolve::engine {
namespace {

using jast::Expr;
using jast::ExprKind;
using jast::Stmt;
using jast::StmtKind;
using patchgen::LineKind;
using patchgen::MetaKind;
using patchgen::MetaVar;

// Type texts compare by tokens, so `Map<K,V>` equals `Map<K, V>`.
bool same_type_text(std::string_view a, std::string_view b) {
  std::vector<jast::Token> ta = jast::tokenize(a);
  std::vector<jast::Token> tb = jast::tokenize(b);
  return std::equal(ta.begin(), ta.end(), tb.begin(), tb.end(),
                    [](const jast::Token& x, const jast::Token& y) {
                      return x.text == y.text;
                    });
}

class Matcher {
 public:
  explicit Matcher(const std::vector<MetaVar>& metavars)
      : metavars_(metavars) {}

  bool stmt(const Stmt& p, const Stmt& t) {
    if (p.kind == StmtKind::kOpaque || t.kind == StmtKind::kOpaque)
      return false;
    if (p.kind != t.kind) return false;
    if (p.kind == StmtKind::kLocalVar) {
      if (!same_type_text(p.type_name, t.type_name)) return false;
      if (!name_or_meta(p.name, t.name)) return false;
    }
    if (p.expr.has_value() != t.expr.has_value()) return false;
    if (p.expr && !expr(*p.expr, *t.expr)) return false;
    if (p.children.size() != t.children.size()) return false;
    for (std::size_t i = 0; i < p.children.size(); ++i)
      if (!stmt(p.children[i], t.children[i])) return false;
    return true;
  }

  bool expr(const Expr& p, const Expr& t) {
    if (p.kind == ExprKind::kName) {
      if (const MetaVar* m = find(p.text)) {
        if (m->kind == MetaKind::kIdentifier && t.kind != ExprKind::kName)
          return false;
        return bind(p.text, t);
      }
    }
    if (p.kind == ExprKind::kOpaque || t.kind == ExprKind::kOpaque)
      return false;
    if (p.kind != t.kind || p.has_receiver != t.has_receiver ||
        p.postfix != t.postfix || p.operands.size() != t.operands.size())
      return false;
    switch (p.kind) {
      case ExprKind::kObjectCreation:
      case ExprKind::kCast:
        if (!same_type_text(p.text, t.text)) return false;
        break;
      case ExprKind::kParen:
        break;
      default:
        if (p.text != t.text) return false;
    }
    for (std::size_t i = 0; i < p.operands.size(); ++i)
      if (!expr(p.operands[i], t.operands[i])) return false;
    return true;
  }

  MetaBinding take() { return std::move(binding_); }

 private:
  const MetaVar* find(std::string_view name) const {
    for (const MetaVar& m : metavars_)
      if (m.name == name) return &m;
    return nullptr;
  }

  bool bind(const std::string& name, const Expr& value) {
    auto [it, fresh] = binding_.assignments.emplace(name, value);
    return fresh || jast::same_structure(it->second, value);
  }

  bool name_or_meta(const std::string& p, const std::string& t) {
    if (find(p)) return bind(p, Expr::name(t));
    return p == t;
  }

  const std::vector<MetaVar>& metavars_;
  MetaBinding binding_;
};

const patchgen::MetaVar* find_meta(const patchgen::SemanticPatch& patch,
                                   std::string_view name) {
  return patch.metavar(name);
}

void collect_calls(const Expr& e, std::vector<const Expr*>& out) {
  if (e.kind == ExprKind::kMethodCall) out.push_back(&e);
  for (const Expr& c : e.operands) collect_calls(c, out);
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

std::string with_newlines(std::string_view text, std::string_view newline,
                          std::string_view indent) {
  std::string out;
  for (char c : text) {
    if (c == '\n') {
      out += newline;
      out += indent;
    } else {
      out += c;
    }
  }
  return out;
}

const jast::TypeDecl* primary_type(const jast::CompilationUnit& unit) {
  for (const jast::TypeDecl& t : unit.types)
    if (t.modifiers.has(jast::Modifier::kPublic)) return &t;
  return unit.types.empty() ? nullptr : &unit.types.front();
}

std::string strip_type_modifiers(std::string text) {
  static constexpr std::string_view kWords[] = {"public", "private",
                                                "protected", "static"};
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::string_view w : kWords) {
      if (text.starts_with(w) && text.size() > w.size() &&
          std::isspace(static_cast<unsigned char>(text[w.size()]))) {
        text = std::string(ltrim(std::string_view(text).substr(w.size())));
        changed = true;
      }
    }
  }
  return text;
}

class Replacer {
 public:
  Replacer(const patchgen::SemanticPatch& patch,
           const jast::CompilationUnit& unit, const ApplyOptions& options)
      : patch_(patch), unit_(unit), options_(options) {}

  std::string render(const Stmt& target,
                     const std::map<std::string, Expr>& values) const {
    std::string base = jast::line_indent(unit_.source, target.span->begin);
    int depth = 0;
    std::string out;
    bool first = true;
    for (const patchgen::PatchLine& line : patch_.hunk) {
      if (line.kind == LineKind::kEllipsis) continue;
      std::string body;
      std::string_view text = line.text;
      if (line.kind == LineKind::kContext) {
        body = std::string(jast::source_text(unit_, *target.span));
      }
      std::string renamed = options_.renames.empty()
                                ? std::string(text)
                                : jast::rewrite_identifiers(text,
                                                            options_.renames);
      bool closes = ltrim(renamed).starts_with("}");
      if (closes) --depth;
      std::string indent = base;
      for (int i = 0; i < std::max(depth, 0); ++i) indent += jast::kIndentUnit;
      if (line.kind == LineKind::kAdd) body = add_line(renamed, values, indent);
      out += first ? body : unit_.newline + indent + body;
      first = false;
      if (rtrim(renamed).ends_with("{")) ++depth;
    }
    return out;
  }

 private:
  std::string add_line(const std::string& text,
                       const std::map<std::string, Expr>& values,
                       const std::string& indent) const {
    std::string_view t = rtrim(ltrim(text));
    if (t.ends_with(";")) {
      Stmt pattern = jast::parse_statement(t);
      if (pattern.kind != StmtKind::kOpaque)
        return jast::render_stmt(substitute(pattern, values), indent,
                                 unit_.newline);
    }
    if (t.starts_with("if") && t.ends_with("{")) {
      std::size_t open = t.find('(');
      std::size_t close = t.rfind(')');
      if (open != std::string_view::npos && close != std::string_view::npos &&
          open < close) {
        Expr cond = jast::parse_expression(t.substr(open + 1, close - open - 1));
        return "if (" + jast::render_expr(substitute(cond, values)) + ") {";
      }
    }
    return with_newlines(jast::normalize_whitespace(t), unit_.newline, indent);
  }

  const patchgen::SemanticPatch& patch_;
  const jast::CompilationUnit& unit_;
  const ApplyOptions& options_;
};

struct ParsedDefinition {
  DefinitionKind kind = DefinitionKind::kMethod;
  std::string name;
  std::size_t arity = 0;
};

ParsedDefinition classify_definition(const std::string& text) {
  jast::CompilationUnit wrapped;
  try {
    wrapped = jast::parse("class __Needs__ {\n" + text + "\n}\n");
  } catch (const UnbalancedSource&) {
    throw MalformedPatch("unbalanced definition in @needs@ section", 0);
  }
  const jast::TypeDecl& holder = wrapped.types.at(0);
  ParsedDefinition out;
  if (!holder.methods.empty()) {
    out.kind = DefinitionKind::kMethod;
    out.name = holder.methods[0].name;
    out.arity = holder.methods[0].arity();
  } else if (!holder.nested.empty()) {
    out.kind = DefinitionKind::kType;
    out.name = holder.nested[0].name;
  } else if (!holder.fields.empty()) {
    out.kind = DefinitionKind::kField;
    out.name = holder.fields[0].name;
  } else {
    throw MalformedPatch("unsupported definition in @needs@ section", 0);
  }
  return out;
}

}  // namespace

std::optional<MetaBinding> match_statement(
    const jast::Stmt& pattern, const jast::Stmt& stmt,
    const std::vector<patchgen::MetaVar>& metavars) {
  Matcher m(metavars);
  if (!m.stmt(pattern, stmt)) return std::nullopt;
  return m.take();
}

jast::Expr substitute(const jast::Expr& pattern,
                      const std::map<std::string, jast::Expr>& values) {
  if (pattern.kind == ExprKind::kName) {
    auto it = values.find(pattern.text);
    if (it != values.end()) return it->second;
  }
  Expr out = pattern;
  for (Expr& c : out.operands) c = substitute(c, values);
  return out;
}

jast::Stmt substitute(const jast::Stmt& pattern,
                      const std::map<std::string, jast::Expr>& values) {
  Stmt out = pattern;
  if (out.kind == StmtKind::kLocalVar) {
    auto it = values.find(out.name);
    if (it != values.end() && it->second.kind == ExprKind::kName)
      out.name = it->second.text;
  }
  if (out.expr) out.expr = substitute(*out.expr, values);
  for (Stmt& c : out.children) c = substitute(c, values);
  return out;
}

bool already_guarded(const sigmap::CallSite& site) {
  return std::any_of(site.ancestors.begin(), site.ancestors.end(),
                     [](const Stmt* s) {
                       return s->kind == StmtKind::kIf && s->expr &&
                              jast::contains_identifier(
                                  jast::render_expr(*s->expr), "SDK_INT");
                     });
}

const char* to_string(SkipReason reason) {
  switch (reason) {
    case SkipReason::kAlreadyGuarded:
      return "AlreadyGuarded";
    case SkipReason::kNoMatch:
      return "NoMatch";
    case SkipReason::kNonStatementContext:
      return "NonStatementContext";
  }
  return "NoMatch";
}

std::optional<TargetCall> target_call(const patchgen::SemanticPatch& patch) {
  const patchgen::PatchLine* ctx = patch.context();
  if (!ctx || !ctx->pattern) return std::nullopt;
  std::vector<const Expr*> calls;
  const Stmt& s = *ctx->pattern;
  if (s.expr) collect_calls(*s.expr, calls);
  if (calls.empty()) return std::nullopt;
  for (const Expr* c : calls) {
    bool meta_receiver = c->has_receiver && c->receiver()->is_name() &&
                         find_meta(patch, c->receiver()->text);
    bool meta_arg = std::any_of(
        c->args().begin(), c->args().end(), [&](const Expr& a) {
          return a.is_name() && find_meta(patch, a.text);
        });
    if (meta_receiver || meta_arg)
      return TargetCall{c->text, c->args().size()};
  }
  return TargetCall{calls.back()->text, calls.back()->args().size()};
}

ApplyResult apply_patch(const patchgen::SemanticPatch& patch,
                        const jast::CompilationUnit& unit,
                        const ApplyOptions& options) {
  const patchgen::PatchLine* ctx = patch.context();
  if (!ctx || !ctx->pattern)
    throw MalformedPatch("patch has no usable context line",
                         ctx ? ctx->line : 0);
  for (const patchgen::PatchLine& l : patch.hunk)
    if (l.kind == LineKind::kRemove)
      throw MalformedPatch("'-' lines are not supported when applying",
                           l.line);
  std::optional<TargetCall> call = target_call(patch);
  if (!call)
    throw MalformedPatch("context line contains no method call", ctx->line);

  ApplyResult result;
  std::vector<sigmap::CallSite> sites =
      sigmap::find_invocations(unit, call->method_name, call->arity);
  result.found = sites.size();
  std::vector<std::string> temps = patch.temps();
  Replacer replacer(patch, unit, options);
  std::vector<jast::TextEdit> edits;
  std::vector<const Stmt*> done;
  int next_temp = 0;

  for (const sigmap::CallSite& site : sites) {
    auto skip = [&](SkipReason why) {
      result.skipped.push_back(SkippedSite{
          *site.call->span, jast::line_of(unit.source, site.call->span->begin),
          why});
    };
    if (!site.in_block()) {
      skip(SkipReason::kNonStatementContext);
      continue;
    }
    if (already_guarded(site)) {
      skip(SkipReason::kAlreadyGuarded);
      continue;
    }
    const Stmt& stmt = *site.enclosing_stmt;
    if (std::find(done.begin(), done.end(), &stmt) != done.end()) {
      skip(SkipReason::kNoMatch);
      continue;
    }
    std::optional<MetaBinding> binding =
        match_statement(*ctx->pattern, stmt, patch.metavars);
    if (!binding) {
      skip(SkipReason::kNoMatch);
      continue;
    }
    std::map<std::string, Expr> values = binding->assignments;
    if (options.norm) {
      // The context line keeps the temporary; Add lines get the original
      // expression so the temporary stays single-use.
      for (auto& [name, value] : values) {
        if (!value.is_name()) continue;
        if (const normal::NormEntry* e = options.norm->find(value.text))
          value = e->original;
      }
    }
    for (const std::string& t : temps) {
      std::string fresh =
          normal::fresh_name(unit.source, patchgen::kPatchTempPrefix,
                             &next_temp);
      values[t] = Expr::name(fresh);
      result.patch_temps.insert(fresh);
    }
    edits.push_back(jast::TextEdit{*stmt.span, replacer.render(stmt, values)});
    done.push_back(&stmt);
    ++result.updated;
  }
  result.unit = edits.empty() ? unit
                              : jast::parse(jast::splice(unit, std::move(edits)));
  return result;
}

TransplantPlan plan_transplant(const patchgen::SemanticPatch& patch,
                               const jast::CompilationUnit& target) {
  TransplantPlan plan;
  std::vector<const jast::TypeDecl*> types = jast::all_types(target);

  for (const std::string& q : patch.imports) {
    std::string simple = q.substr(q.rfind('.') + 1);
    std::string package = q.substr(0, q.rfind('.'));
    bool present = false;
    bool clash = false;
    for (const jast::ImportDecl& imp : target.imports) {
      if (imp.is_static) continue;
      if ((!imp.wildcard && imp.name == q) ||
          (imp.wildcard && imp.name == package))
        present = true;
      else if (!imp.wildcard &&
               imp.name.substr(imp.name.rfind('.') + 1) == simple)
        clash = true;
    }
    for (const jast::TypeDecl* t : types)
      if (t->name == simple) clash = true;
    if (present) continue;
    if (clash) {
      plan.renames[simple] = q;
    } else {
      plan.imports.push_back(q);
    }
  }

  const jast::TypeDecl* primary = primary_type(target);
  std::vector<ParsedDefinition> parsed;
  for (const std::string& text : patch.definitions)
    parsed.push_back(classify_definition(text));

  for (std::size_t i = 0; i < parsed.size(); ++i) {
    const ParsedDefinition& d = parsed[i];
    PlannedDefinition planned;
    planned.kind = d.kind;
    planned.name = d.name;
    planned.arity = d.arity;
    switch (d.kind) {
      case DefinitionKind::kMethod: {
        auto find_method = [&](const std::string& name,
                               std::optional<std::size_t> arity) {
          if (!primary) return false;
          return std::any_of(primary->methods.begin(), primary->methods.end(),
                             [&](const jast::MethodDecl& m) {
                               return m.name == name &&
                                      (!arity || m.arity() == *arity);
                             });
        };
        if (find_method(d.name, d.arity)) {
          planned.reuse = true;
        } else if (find_method(d.name, std::nullopt)) {
          planned.name = d.name + std::string(kRenameSuffix);
          plan.renames[d.name] = planned.name;
          planned.reuse = find_method(planned.name, d.arity);
        }
        break;
      }
      case DefinitionKind::kType:
        planned.reuse = std::any_of(types.begin(), types.end(),
                                    [&](const jast::TypeDecl* t) {
                                      return t->name == d.name;
                                    });
        break;
      case DefinitionKind::kField:
        planned.reuse = primary && primary->find_field(d.name) != nullptr;
        break;
    }
    plan.definitions.push_back(std::move(planned));
  }
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    std::string text = plan.renames.empty()
                           ? patch.definitions[i]
                           : jast::rewrite_identifiers(patch.definitions[i],
                                                       plan.renames);
    if (parsed[i].kind == DefinitionKind::kType)
      text = strip_type_modifiers(std::move(text));
    plan.definitions[i].text = std::move(text);
  }
  return plan;
}

TransplantResult transplant_definitions(const jast::CompilationUnit& unit,
                                        const TransplantPlan& plan) {
  TransplantResult result;
  const std::string& nl = unit.newline;
  std::vector<jast::TextEdit> edits;
  std::vector<jast::Token> toks = jast::tokenize(unit.source);
  const jast::TypeDecl* primary = primary_type(unit);

  std::size_t tail = rtrim(unit.source).size();
  std::string member_text;
  std::string tail_text;
  for (const PlannedDefinition& d : plan.definitions) {
    if (d.reuse) continue;
    result.copied.push_back(d.name);
    bool member = d.kind != DefinitionKind::kType && primary &&
                  primary->kind != jast::TypeKind::kImplicit;
    if (member) {
      std::string indent = jast::line_indent(unit.source, primary->body_end);
      indent += jast::kIndentUnit;
      member_text += nl + nl + indent + with_newlines(d.text, nl, indent);
    } else {
      tail_text += nl + nl + with_newlines(d.text, nl, "");
    }
  }
  if (!member_text.empty()) {
    // Right after the last token before the closing brace.
    std::size_t at = primary->body_begin + 1;
    for (const jast::Token& t : toks) {
      if (t.span.begin >= primary->body_end) break;
      at = std::max(at, t.span.end);
    }
    edits.push_back(jast::TextEdit{jast::Span{at, at}, member_text});
  }
  if (!tail_text.empty())
    edits.push_back(jast::TextEdit{jast::Span{tail, tail}, tail_text});

  if (!plan.imports.empty()) {
    std::string lines;
    for (const std::string& q : plan.imports) {
      if (!lines.empty()) lines += nl;
      lines += "import " + q + ";";
    }
    if (!unit.imports.empty()) {
      std::size_t at = unit.imports.back().span.end;
      edits.push_back(jast::TextEdit{jast::Span{at, at}, nl + lines});
    } else if (unit.package_span) {
      std::size_t at = unit.package_span->end;
      edits.push_back(jast::TextEdit{jast::Span{at, at}, nl + nl + lines});
    } else {
      edits.push_back(jast::TextEdit{jast::Span{0, 0}, lines + nl + nl});
    }
  }
  result.unit = edits.empty() ? unit
                              : jast::parse(jast::splice(unit, std::move(edits)));
  return result;
}

UpdateOutcome update_source(const patchgen::SemanticPatch& patch,
                            const sigmap::ApiMapping& mapping,
                            const std::string& source,
                            const std::string& file) {
  UpdateOutcome out;
  out.report.file = file;
  jast::CompilationUnit unit = jast::parse(source);
  std::vector<sigmap::CallSite> sites =
      sigmap::find_invocations(unit, mapping.deprecated);
  normal::NormalizeResult norm = normal::normalize(unit, sites, mapping);
  TransplantPlan plan = plan_transplant(patch, norm.unit);
  ApplyOptions options;
  options.norm = &norm.map;
  options.renames = plan.renames;
  ApplyResult applied = apply_patch(patch, norm.unit, options);

  // Normalization shifts lines; report positions in the input instead.
  std::vector<sigmap::CallSite> norm_sites =
      sigmap::find_invocations(norm.unit, mapping.deprecated);
  out.report.sites_found = applied.found;
  out.report.sites_updated = applied.updated;
  for (const SkippedSite& s : applied.skipped) {
    int line = s.line;
    for (std::size_t i = 0; i < norm_sites.size() && i < sites.size(); ++i)
      if (*norm_sites[i].call->span == s.call)
        line = jast::line_of(source, sites[i].call->span->begin);
    out.report.skipped.push_back(UpdateReport::Skip{line, to_string(s.reason)});
  }
  if (applied.updated == 0) {
    out.text = source;
    return out;
  }
  jast::CompilationUnit current = std::move(applied.unit);
  if (!plan.definitions.empty() || !plan.imports.empty()) {
    TransplantResult t = transplant_definitions(current, plan);
    current = std::move(t.unit);
    out.report.copied = std::move(t.copied);
  }
  current = normal::denormalize(current, norm.map, applied.patch_temps);
  out.text = std::move(current.source);
  return out;
}

}  // namespace api_evolve::engine
