// Copyright 2026 The choiscope Authors
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

#include <cctype>
#include <sstream>

#include "choiscope/diagram.hpp"

namespace choiscope::diagram {
namespace {

std::string describe(const ParseError::Kind kind, SourcePos pos, const std::string& found,
                     const std::vector<std::string>& expected) {
  std::ostringstream os;
  os << "line " << pos.line << ", column " << pos.column << ": "
     << (kind == ParseError::Kind::kLexical ? "lexical error" : "syntax error");
  if (!expected.empty()) {
    os << ": expected ";
    for (std::size_t k = 0; k < expected.size(); ++k) {
      if (k > 0) os << (k + 1 == expected.size() ? " or " : ", ");
      os << expected[k];
    }
  }
  os << " but found " << found;
  return os.str();
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

ParseError::ParseError(Kind kind, SourcePos pos, std::string found,
                       std::vector<std::string> expected)
    : Error(describe(kind, pos, found, expected)),
      kind_(kind),
      pos_(pos),
      found_(std::move(found)),
      expected_(std::move(expected)) {}

std::string caret_excerpt(std::string_view source, SourcePos pos) {
  std::size_t begin = std::min(pos.offset, source.size());
  while (begin > 0 && source[begin - 1] != '\n') --begin;
  std::size_t end = source.find('\n', begin);
  if (end == std::string_view::npos) end = source.size();
  std::string out(source.substr(begin, end - begin));
  out += '\n';
  out += std::string(pos.column > 0 ? pos.column - 1 : 0, ' ');
  out += '^';
  return out;
}

std::vector<Token> tokenize(std::string_view source) {
  std::vector<Token> tokens;
  SourcePos pos;
  std::size_t k = 0;

  auto advance = [&](std::size_t n) {
    for (std::size_t s = 0; s < n; ++s, ++k) {
      if (source[k] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
    pos.offset = k;
  };

  while (k < source.size()) {
    const char c = source[k];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (k < source.size() && source[k] != '\n') advance(1);
      continue;
    }
    const SourcePos start = pos;
    if (ident_start(c)) {
      std::size_t n = 1;
      while (k + n < source.size() && ident_char(source[k + n])) ++n;
      tokens.push_back({TokenKind::kIdent, std::string(source.substr(k, n)), start});
      advance(n);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t n = 1;
      while (k + n < source.size() && std::isdigit(static_cast<unsigned char>(source[k + n]))) ++n;
      if (k + n < source.size() && ident_start(source[k + n])) {
        throw ParseError(ParseError::Kind::kLexical, start,
                         "'" + std::string(source.substr(k, n + 1)) + "'", {"integer"});
      }
      tokens.push_back({TokenKind::kInt, std::string(source.substr(k, n)), start});
      advance(n);
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '(':
        kind = TokenKind::kLParen;
        break;
      case ')':
        kind = TokenKind::kRParen;
        break;
      case ',':
        kind = TokenKind::kComma;
        break;
      case ';':
        kind = TokenKind::kSemi;
        break;
      case '*':
        kind = TokenKind::kStar;
        break;
      default:
        throw ParseError(ParseError::Kind::kLexical, start, "'" + std::string(1, c) + "'",
                         {"identifier", "integer", "'('", "')'", "','", "';'", "'*'"});
    }
    tokens.push_back({kind, std::string(1, c), start});
    advance(1);
  }
  tokens.push_back({TokenKind::kEnd, "", pos});
  return tokens;
}

}  // namespace choiscope::diagram
