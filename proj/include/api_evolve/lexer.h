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

#ifndef API_EVOLVE_LEXER_H_
#define API_EVOLVE_LEXER_H_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace api_evolve::jast {

// Half-open byte range [begin, end) into a source buffer.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool contains(const Span& other) const {
    return begin <= other.begin && other.end <= end;
  }
  friend bool operator==(const Span&, const Span&) = default;
};

enum class TokenKind {
  kIdentifier,  // includes keywords; see is_keyword()
  kInteger,
  kFloating,
  kString,
  kChar,
  kPunct,
};

struct Token {
  TokenKind kind;
  Span span;
  std::string_view text;
};

// Splits Java source into tokens, dropping whitespace and comments.
// `>` is always emitted as a single-character token so that nested generic
// argument lists close cleanly; the parser re-joins `>>`, `>=` and friends
// from adjacent tokens.
//
// Throws UnbalancedSource on unterminated comments, strings or char literals.
std::vector<Token> tokenize(std::string_view source);

bool is_keyword(std::string_view word);

// True when `b` starts exactly where `a` ends.
inline bool adjacent(const Token& a, const Token& b) {
  return a.span.end == b.span.begin;
}

// Identifier-token utilities. All of these skip string literals and comments.
bool contains_identifier(std::string_view source, std::string_view name);
std::size_t count_identifier(std::string_view source, std::string_view name);

// Rebuilds `source` with single spaces wherever the original had whitespace
// or comments between tokens; token bytes are kept verbatim.
std::string normalize_whitespace(std::string_view source);

// Replaces identifier tokens that are not member selections (not preceded by
// `.`) according to `renames`.
std::string rewrite_identifiers(
    std::string_view source, const std::map<std::string, std::string>& renames);

// "\r\n" if the first line break in `source` is CRLF, else "\n".
std::string detect_newline(std::string_view source);

}  // namespace api_evolve::jast

#endif  // API_EVOLVE_LEXER_H_
