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

#include "api_evolve/sigmap.h"

#include <algorithm>
#include <cctype>

#include "api_evolve/errors.h"

namespace api_evolve::sigmap {
namespace {

using jast::Expr;
using jast::ExprKind;
using jast::Stmt;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto c0 = static_cast<unsigned char>(s[0]);
  if (!(std::isalpha(c0) || c0 == '_' || c0 == '$' || c0 >= 0x80))
    return false;
  return std::all_of(s.begin() + 1, s.end(), [](char ch) {
    auto c = static_cast<unsigned char>(ch);
    return std::isalnum(c) || c == '_' || c == '$' || c >= 0x80;
  });
}

bool is_qualified(std::string_view s) {
  while (true) {
    std::size_t dot = s.find('.');
    if (!is_identifier(s.substr(0, dot))) return false;
    if (dot == std::string_view::npos) return true;
    s.remove_prefix(dot + 1);
  }
}

bool is_type_text(std::string_view s) {
  if (s.empty()) return false;
  int angle = 0;
  for (char ch : s) {
    auto c = static_cast<unsigned char>(ch);
    if (ch == '<') ++angle;
    if (ch == '>') --angle;
    if (angle < 0) return false;
    if (!(std::isalnum(c) || c >= 0x80 ||
          std::string_view("_$.<>,?[] &").find(ch) != std::string_view::npos))
      return false;
  }
  auto c0 = static_cast<unsigned char>(s[0]);
  return angle == 0 && (std::isalpha(c0) || c0 == '_' || c0 == '$');
}

class SiteCollector {
 public:
  SiteCollector(std::string_view name, std::size_t arity)
      : name_(name), arity_(arity) {}

  void visit_type(const jast::TypeDecl& type) {
    site_.enclosing_type = &type;
    for (const jast::FieldDecl& f : type.fields) {
      if (!f.initializer) continue;
      site_.enclosing_field = &f;
      site_.enclosing_method = nullptr;
      site_.enclosing_stmt = nullptr;
      site_.ancestors.clear();
      visit_expr(*f.initializer);
    }
    site_.enclosing_field = nullptr;
    for (const jast::MethodDecl& m : type.methods) {
      if (!m.body) continue;
      site_.enclosing_method = &m;
      site_.ancestors.clear();
      visit_stmt(*m.body);
    }
  }

  std::vector<CallSite> take() {
    std::stable_sort(out_.begin(), out_.end(),
                     [](const CallSite& a, const CallSite& b) {
                       return a.call->span->begin < b.call->span->begin;
                     });
    return std::move(out_);
  }

 private:
  void visit_stmt(const Stmt& s) {
    site_.enclosing_stmt = &s;
    if (s.expr) visit_expr(*s.expr);
    site_.ancestors.push_back(&s);
    for (const Stmt& child : s.children) visit_stmt(child);
    site_.ancestors.pop_back();
  }

  void visit_expr(const Expr& e) {
    if (e.kind == ExprKind::kOpaque) return;
    if (e.kind == ExprKind::kMethodCall && e.text == name_ &&
        e.args().size() == arity_ && e.span) {
      CallSite found = site_;
      found.call = &e;
      out_.push_back(std::move(found));
    }
    for (const Expr& child : e.operands) visit_expr(child);
  }

  std::string_view name_;
  std::size_t arity_;
  CallSite site_;
  std::vector<CallSite> out_;
};

}  // namespace

std::string ApiSignature::to_string() const {
  std::string out = class_name + "#" + method_name + "(";
  for (std::size_t i = 0; i < param_types.size(); ++i) {
    if (i > 0) out += ",";
    out += param_types[i];
  }
  return out + ")";
}

ApiSignature parse_signature(std::string_view text) {
  std::string_view s = trim(text);
  std::size_t hash = s.find('#');
  std::size_t open = s.find('(');
  if (hash == std::string_view::npos || open == std::string_view::npos ||
      open < hash || s.back() != ')' ||
      s.find('#', hash + 1) != std::string_view::npos)
    throw MalformedSignature(std::string(text));

  ApiSignature sig;
  std::string_view cls = trim(s.substr(0, hash));
  std::string_view method = trim(s.substr(hash + 1, open - hash - 1));
  if (!is_qualified(cls) || !is_identifier(method))
    throw MalformedSignature(std::string(text));
  sig.class_name = std::string(cls);
  sig.method_name = std::string(method);

  std::string_view params = s.substr(open + 1, s.size() - open - 2);
  if (trim(params).empty()) return sig;
  int angle = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= params.size(); ++i) {
    if (i < params.size()) {
      if (params[i] == '<') ++angle;
      if (params[i] == '>') --angle;
      if (params[i] == '(' || params[i] == ')')
        throw MalformedSignature(std::string(text));
      if (params[i] != ',' || angle != 0) continue;
    }
    std::string_view p = trim(params.substr(start, i - start));
    if (!is_type_text(p)) throw MalformedSignature(std::string(text));
    sig.param_types.emplace_back(p);
    start = i + 1;
  }
  return sig;
}

ApiMapping make_mapping(std::string_view deprecated,
                        std::string_view replacement) {
  ApiMapping m{parse_signature(deprecated), parse_signature(replacement)};
  if (m.deprecated == m.replacement)
    throw MalformedSignature(std::string(replacement));
  return m;
}

std::vector<CallSite> find_invocations(const jast::CompilationUnit& unit,
                                       const ApiSignature& sig) {
  return find_invocations(unit, sig.method_name, sig.arity());
}

std::vector<CallSite> find_invocations(const jast::CompilationUnit& unit,
                                       std::string_view method_name,
                                       std::size_t arity) {
  SiteCollector collector(method_name, arity);
  for (const jast::TypeDecl* t : jast::all_types(unit)) collector.visit_type(*t);
  return collector.take();
}

}  // namespace api_evolve::sigmap
