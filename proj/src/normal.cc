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

#include "api_evolve/normal.h"

#include <algorithm>

#include "api_evolve/errors.h"
#include "api_evolve/parser.h"
#include "api_evolve/printer.h"

namespace api_evolve::normal {
namespace {

using jast::Expr;
using jast::ExprKind;
using jast::Span;
using jast::Stmt;
using jast::StmtKind;
using jast::Token;

void strip_spans(Expr& e) {
  e.span.reset();
  for (Expr& c : e.operands) strip_spans(c);
}

void collect_decls(const Stmt& s, const std::set<std::string>& names,
                   std::vector<const Stmt*>& out) {
  if (s.kind == StmtKind::kLocalVar && names.count(s.name) && s.expr &&
      s.span)
    out.push_back(&s);
  for (const Stmt& c : s.children) collect_decls(c, names, out);
}

std::vector<const Stmt*> temp_decls(const jast::CompilationUnit& unit,
                                    const std::set<std::string>& names) {
  std::vector<const Stmt*> out;
  for (const jast::TypeDecl* t : jast::all_types(unit))
    for (const jast::MethodDecl& m : t->methods)
      if (m.body) collect_decls(*m.body, names, out);
  std::sort(out.begin(), out.end(), [](const Stmt* a, const Stmt* b) {
    return a->span->begin < b->span->begin;
  });
  return out;
}

bool is_primary(const Expr& e) {
  switch (e.kind) {
    case ExprKind::kLiteral:
    case ExprKind::kName:
    case ExprKind::kFieldAccess:
    case ExprKind::kMethodCall:
    case ExprKind::kObjectCreation:
    case ExprKind::kParen:
      return true;
    case ExprKind::kUnary:
      return e.postfix;
    default:
      return false;
  }
}

// A use whose neighbours are list or statement punctuation can take any
// expression without parentheses.
bool bare_context(const std::vector<Token>& toks, std::size_t i) {
  auto open = [](std::string_view t) {
    return t == "(" || t == "," || t == "=" || t == "return" || t == "{";
  };
  auto close = [](std::string_view t) {
    return t == ")" || t == "," || t == ";" || t == "}";
  };
  bool before = i > 0 && open(toks[i - 1].text);
  bool after = i + 1 < toks.size() && close(toks[i + 1].text);
  return before && after;
}

}  // namespace

const NormEntry* NormalizationMap::find(std::string_view temp) const {
  for (const NormEntry& e : entries)
    if (e.temp == temp) return &e;
  return nullptr;
}

std::set<std::string> NormalizationMap::temps() const {
  std::set<std::string> out;
  for (const NormEntry& e : entries) out.insert(e.temp);
  return out;
}

std::string fresh_name(std::string_view source, std::string_view prefix,
                       int* next) {
  while (true) {
    std::string name = std::string(prefix) + std::to_string((*next)++);
    if (!jast::contains_identifier(source, name)) return name;
  }
}

NormalizeResult normalize(const jast::CompilationUnit& unit,
                          const std::vector<sigmap::CallSite>& sites,
                          const sigmap::ApiMapping& mapping) {
  NormalizeResult result;
  std::vector<jast::TextEdit> edits;
  std::vector<Span> replaced;
  int next = 0;
  for (const sigmap::CallSite& site : sites) {
    if (!site.in_block()) {
      result.skipped.push_back(
          SkippedSite{*site.call->span,
                      jast::line_of(unit.source, site.call->span->begin),
                      "NonStatementContext"});
      continue;
    }
    auto args = site.call->args();
    std::string inserted;
    std::string indent =
        jast::line_indent(unit.source, site.enclosing_stmt->span->begin);
    for (std::size_t i = 0; i < args.size(); ++i) {
      const Expr& arg = args[i];
      if (arg.kind == ExprKind::kName || !arg.span) continue;
      // An argument holding another site was already rewritten as a whole.
      bool nested = std::any_of(replaced.begin(), replaced.end(),
                                [&](const Span& s) {
                                  return s.contains(*arg.span) ||
                                         arg.span->contains(s);
                                });
      if (nested) continue;
      std::string temp = fresh_name(unit.source, kNormPrefix, &next);
      std::string text(jast::source_text(unit, *arg.span));
      std::string type = i < mapping.deprecated.param_types.size()
                             ? mapping.deprecated.param_types[i]
                             : "Object";
      inserted += type + " " + temp + " = " + text + ";" + unit.newline +
                  indent;
      edits.push_back(jast::TextEdit{*arg.span, temp});
      replaced.push_back(*arg.span);
      NormEntry entry{temp, arg, text};
      strip_spans(entry.original);
      result.map.entries.push_back(std::move(entry));
    }
    if (!inserted.empty()) {
      std::size_t at = site.enclosing_stmt->span->begin;
      edits.push_back(jast::TextEdit{Span{at, at}, std::move(inserted)});
    }
  }
  if (edits.empty()) {
    result.unit = unit;
    return result;
  }
  result.unit = jast::parse(jast::splice(unit, std::move(edits)));
  return result;
}

jast::CompilationUnit denormalize(const jast::CompilationUnit& unit,
                                  const NormalizationMap& map,
                                  const std::set<std::string>& patch_temps) {
  std::set<std::string> names = map.temps();
  names.insert(patch_temps.begin(), patch_temps.end());
  jast::CompilationUnit current = unit;
  while (true) {
    std::vector<const Stmt*> decls = temp_decls(current, names);
    if (decls.empty()) return current;

    // Innermost first: a temp whose initializer mentions no other temp.
    const Stmt* pick = nullptr;
    for (const Stmt* d : decls) {
      std::string_view init = jast::source_text(current, *d->span);
      bool refers = std::any_of(decls.begin(), decls.end(), [&](const Stmt* o) {
        return o != d && jast::contains_identifier(init, o->name);
      });
      if (!refers) {
        pick = d;
        break;
      }
    }
    if (!pick) pick = decls.front();

    const std::string temp = pick->name;
    const Span decl = *pick->span;
    std::vector<Token> toks = jast::tokenize(current.source);
    std::vector<std::size_t> uses;
    std::size_t after_decl = toks.size();
    std::size_t before_decl = toks.size();
    for (std::size_t i = 0; i < toks.size(); ++i) {
      const Token& t = toks[i];
      if (t.span.begin < decl.begin) before_decl = i;
      if (after_decl == toks.size() && t.span.begin >= decl.end) after_decl = i;
      if (decl.contains(t.span)) continue;
      if (t.kind != jast::TokenKind::kIdentifier || t.text != temp) continue;
      if (i > 0 && toks[i - 1].text == ".") continue;
      uses.push_back(i);
    }
    if (uses.size() > 1) throw MultipleUse(temp);

    std::vector<jast::TextEdit> edits;
    if (uses.size() == 1) {
      const Expr& init = *pick->expr;
      std::string text(jast::source_text(current, *init.span));
      if (!is_primary(init) && !bare_context(toks, uses[0]))
        text = "(" + text + ")";
      edits.push_back(jast::TextEdit{toks[uses[0]].span, std::move(text)});
    }
    if (after_decl < toks.size() && toks[after_decl].text != "}") {
      edits.push_back(
          jast::TextEdit{Span{decl.begin, toks[after_decl].span.begin}, ""});
    } else if (before_decl < toks.size()) {
      edits.push_back(
          jast::TextEdit{Span{toks[before_decl].span.end, decl.end}, ""});
    } else {
      edits.push_back(jast::TextEdit{decl, ""});
    }
    current = jast::parse(jast::splice(current, std::move(edits)));
    names.erase(temp);
  }
}

}  // namespace api_evolve::normal
