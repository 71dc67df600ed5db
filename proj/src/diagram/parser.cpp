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

#include <charconv>
#include <sstream>

#include "choiscope/diagram.hpp"

namespace choiscope::diagram {
namespace {

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::kEnd:
      return "end of input";
    case TokenKind::kIdent:
      return "identifier '" + t.text + "'";
    case TokenKind::kInt:
      return "integer " + t.text;
    default:
      return "'" + t.text + "'";
  }
}

std::optional<PrimKind> keyword_kind(std::string_view word) {
  if (word == "id") return PrimKind::kId;
  if (word == "cup") return PrimKind::kCup;
  if (word == "cap") return PrimKind::kCap;
  if (word == "swap") return PrimKind::kSwap;
  return std::nullopt;
}

const char* keyword_text(PrimKind kind) {
  switch (kind) {
    case PrimKind::kId:
      return "id";
    case PrimKind::kCup:
      return "cup";
    case PrimKind::kCap:
      return "cap";
    case PrimKind::kSwap:
      return "swap";
  }
  return "?";
}

Expr make(std::variant<Prim, Named, Seq, Tensor> body, SourcePos pos) {
  return std::make_shared<const Node>(Node{std::move(body), pos, std::nullopt});
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Expr parse_all() {
    Expr e = expr();
    if (peek().kind != TokenKind::kEnd) fail({"';'", "'*'", "end of input"});
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(ParseError::Kind::kSyntax, peek().pos, describe(peek()), std::move(expected));
  }

  const Token& expect(TokenKind kind, const char* shown) {
    if (peek().kind != kind) fail({shown});
    return take();
  }

  Expr expr() {
    Expr left = term();
    while (peek().kind == TokenKind::kSemi) {
      const SourcePos at = take().pos;
      Expr right = term();
      left = make(Seq{left, right}, at);
    }
    return left;
  }

  Expr term() {
    Expr top = factor();
    while (peek().kind == TokenKind::kStar) {
      const SourcePos at = take().pos;
      Expr bottom = factor();
      top = make(Tensor{top, bottom}, at);
    }
    return top;
  }

  Expr factor() {
    const Token& t = peek();
    if (t.kind == TokenKind::kLParen) {
      take();
      Expr inner = expr();
      expect(TokenKind::kRParen, "')'");
      return inner;
    }
    if (t.kind == TokenKind::kIdent) {
      if (auto kind = keyword_kind(t.text)) return prim(*kind);
      take();
      return make(Named{t.text}, t.pos);
    }
    fail({"'id('", "'cup('", "'cap('", "'swap('", "identifier", "'('"});
  }

  Expr prim(PrimKind kind) {
    const SourcePos at = take().pos;
    expect(TokenKind::kLParen, "'('");
    Dims args{positive_int()};
    if (kind == PrimKind::kSwap) {
      expect(TokenKind::kComma, "','");
      args.push_back(positive_int());
    }
    expect(TokenKind::kRParen, "')'");
    return make(Prim{kind, std::move(args)}, at);
  }

  std::size_t positive_int() {
    if (peek().kind != TokenKind::kInt) fail({"positive integer"});
    const Token& t = peek();
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || end != t.text.data() + t.text.size() || value == 0) {
      fail({"positive integer"});
    }
    take();
    return value;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

void print_into(std::ostringstream& os, const Expr& e);

void print_child(std::ostringstream& os, const Expr& e, bool parens) {
  if (parens) os << '(';
  print_into(os, e);
  if (parens) os << ')';
}

void print_into(std::ostringstream& os, const Expr& e) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Prim>) {
          os << keyword_text(n.kind) << '(';
          for (std::size_t k = 0; k < n.args.size(); ++k) os << (k ? "," : "") << n.args[k];
          os << ')';
        } else if constexpr (std::is_same_v<T, Named>) {
          os << n.name;
        } else if constexpr (std::is_same_v<T, Seq>) {
          // Left associative: only a sequence on the right needs brackets.
          print_child(os, n.first, false);
          os << " ; ";
          print_child(os, n.second, std::holds_alternative<Seq>(n.second->body));
        } else {
          print_child(os, n.top, std::holds_alternative<Seq>(n.top->body));
          os << " * ";
          print_child(os, n.bottom, !std::holds_alternative<Prim>(n.bottom->body) &&
                                        !std::holds_alternative<Named>(n.bottom->body));
        }
      },
      e->body);
}

}  // namespace

bool is_keyword(std::string_view word) { return keyword_kind(word).has_value(); }

Expr parse(std::string_view source) { return Parser(tokenize(source)).parse_all(); }

std::string print(const Expr& e) {
  std::ostringstream os;
  print_into(os, e);
  return os.str();
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a->body.index() != b->body.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b->body);
        if constexpr (std::is_same_v<T, Prim>) {
          return x.kind == y.kind && x.args == y.args;
        } else if constexpr (std::is_same_v<T, Named>) {
          return x.name == y.name;
        } else if constexpr (std::is_same_v<T, Seq>) {
          return structurally_equal(x.first, y.first) && structurally_equal(x.second, y.second);
        } else {
          return structurally_equal(x.top, y.top) && structurally_equal(x.bottom, y.bottom);
        }
      },
      a->body);
}

}  // namespace choiscope::diagram
