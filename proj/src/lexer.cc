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

#include "api_evolve/lexer.h"

#include <algorithm>
#include <array>
#include <cctype>

#include "api_evolve/errors.h"

namespace api_evolve::jast {
namespace {

constexpr std::array<std::string_view, 2> kPunct3 = {"<<=", "..."};
constexpr std::array<std::string_view, 18> kPunct2 = {
    "->", "::", "++", "--", "&&", "||", "==", "!=", "<=",
    "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<"};

constexpr std::array<std::string_view, 53> kKeywords = {
    "abstract",   "assert",       "boolean",   "break",      "byte",
    "case",       "catch",        "char",      "class",      "const",
    "continue",   "default",      "do",        "double",     "else",
    "enum",       "extends",      "final",     "finally",    "float",
    "for",        "goto",         "if",        "implements", "import",
    "instanceof", "int",          "interface", "long",       "native",
    "new",        "package",      "private",   "protected",  "public",
    "return",     "short",        "static",    "strictfp",   "super",
    "switch",     "synchronized", "this",      "throw",      "throws",
    "transient",  "try",          "void",      "volatile",   "while",
    "true",       "false",        "null"};

bool is_ident_start(unsigned char c) {
  return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
}

bool is_ident_part(unsigned char c) {
  return is_ident_start(c) || std::isdigit(c);
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_trivia();
      if (pos_ >= src_.size()) break;
      out.push_back(next());
    }
    return out;
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void skip_trivia() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
          c == '\v') {
        ++pos_;
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (c == '/' && peek(1) == '*') {
        std::size_t end = src_.find("*/", pos_ + 2);
        if (end == std::string_view::npos)
          throw UnbalancedSource("unterminated block comment", pos_);
        pos_ = end + 2;
      } else {
        break;
      }
    }
  }

  Token make(TokenKind kind, std::size_t begin) {
    return Token{kind, Span{begin, pos_}, src_.substr(begin, pos_ - begin)};
  }

  Token next() {
    std::size_t begin = pos_;
    auto c = static_cast<unsigned char>(src_[pos_]);
    if (is_ident_start(c)) {
      while (pos_ < src_.size() &&
             is_ident_part(static_cast<unsigned char>(src_[pos_])))
        ++pos_;
      return make(TokenKind::kIdentifier, begin);
    }
    if (std::isdigit(c) ||
        (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      return number(begin);
    }
    if (c == '"') return string_literal(begin);
    if (c == '\'') return quoted(begin, '\'', TokenKind::kChar);
    // `>` stays single so generic closers never fuse.
    if (c == '>') {
      ++pos_;
      return make(TokenKind::kPunct, begin);
    }
    std::string_view rest = src_.substr(pos_);
    for (auto p : kPunct3) {
      if (rest.starts_with(p)) {
        pos_ += p.size();
        return make(TokenKind::kPunct, begin);
      }
    }
    for (auto p : kPunct2) {
      if (rest.starts_with(p)) {
        pos_ += p.size();
        return make(TokenKind::kPunct, begin);
      }
    }
    // Unknown bytes become one-character punctuation so parsing can degrade
    // to opaque nodes instead of failing outright.
    ++pos_;
    return make(TokenKind::kPunct, begin);
  }

  Token number(std::size_t begin) {
    bool hex = peek() == '0' && (peek(1) == 'x' || peek(1) == 'X');
    bool floating = false;
    while (pos_ < src_.size()) {
      auto c = static_cast<unsigned char>(src_[pos_]);
      if (c == '.') {
        // A dot followed by an identifier other than a float suffix or
        // exponent is a member selection, not part of the literal.
        if (!std::isdigit(static_cast<unsigned char>(peek(1))) &&
            is_ident_start(static_cast<unsigned char>(peek(1))) &&
            peek(1) != 'e' && peek(1) != 'E' && peek(1) != 'f' &&
            peek(1) != 'F' && peek(1) != 'd' && peek(1) != 'D')
          break;
        floating = true;
        ++pos_;
      } else if (!hex && (c == 'e' || c == 'E') &&
                 (peek(1) == '+' || peek(1) == '-')) {
        floating = true;
        pos_ += 2;
      } else if (hex && (c == 'p' || c == 'P') &&
                 (peek(1) == '+' || peek(1) == '-')) {
        floating = true;
        pos_ += 2;
      } else if (is_ident_part(c)) {
        if (!hex && (c == 'e' || c == 'E' || c == 'f' || c == 'F' ||
                     c == 'd' || c == 'D'))
          floating = true;
        ++pos_;
      } else {
        break;
      }
    }
    return make(floating ? TokenKind::kFloating : TokenKind::kInteger, begin);
  }

  Token string_literal(std::size_t begin) {
    if (src_.substr(pos_).starts_with("\"\"\"")) {
      std::size_t p = pos_ + 3;
      while (true) {
        std::size_t end = src_.find("\"\"\"", p);
        if (end == std::string_view::npos)
          throw UnbalancedSource("unterminated text block", begin);
        // Count preceding backslashes to skip escaped quotes.
        std::size_t slashes = 0;
        while (end - slashes > p && src_[end - slashes - 1] == '\\') ++slashes;
        if (slashes % 2 == 0) {
          pos_ = end + 3;
          return make(TokenKind::kString, begin);
        }
        p = end + 1;
      }
    }
    return quoted(begin, '"', TokenKind::kString);
  }

  Token quoted(std::size_t begin, char quote, TokenKind kind) {
    ++pos_;
    while (true) {
      if (pos_ >= src_.size() || src_[pos_] == '\n')
        throw UnbalancedSource("unterminated literal", begin);
      char c = src_[pos_];
      if (c == '\\') {
        pos_ += 2;
        continue;
      }
      ++pos_;
      if (c == quote) break;
    }
    return make(kind, begin);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) {
  return Lexer(source).run();
}

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

bool contains_identifier(std::string_view source, std::string_view name) {
  return count_identifier(source, name) > 0;
}

std::size_t count_identifier(std::string_view source, std::string_view name) {
  std::size_t n = 0;
  for (const Token& t : tokenize(source))
    if (t.kind == TokenKind::kIdentifier && t.text == name) ++n;
  return n;
}

std::string normalize_whitespace(std::string_view source) {
  std::string out;
  const Token* prev = nullptr;
  std::vector<Token> tokens = tokenize(source);
  for (const Token& t : tokens) {
    if (prev != nullptr && !adjacent(*prev, t)) out += ' ';
    out += t.text;
    prev = &t;
  }
  return out;
}

std::string rewrite_identifiers(
    std::string_view source,
    const std::map<std::string, std::string>& renames) {
  if (renames.empty()) return std::string(source);
  std::string out;
  std::size_t copied = 0;
  std::vector<Token> tokens = tokenize(source);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (t.kind != TokenKind::kIdentifier) continue;
    if (i > 0 && tokens[i - 1].text == ".") continue;
    auto it = renames.find(std::string(t.text));
    if (it == renames.end()) continue;
    out.append(source.substr(copied, t.span.begin - copied));
    out += it->second;
    copied = t.span.end;
  }
  out.append(source.substr(copied));
  return out;
}

std::string detect_newline(std::string_view source) {
  std::size_t nl = source.find('\n');
  if (nl != std::string_view::npos && nl > 0 && source[nl - 1] == '\r')
    return "\r\n";
  return "\n";
}

}  // namespace api_evolve::jast
