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

#pragma once

// A small textual language for tensor-network diagrams over typed wires.
//
//   expr    := term { ";" term }          sequential composition, left first
//   term    := factor { "*" factor }      stacking (tensor product), top first
//   factor  := prim | IDENT | "(" expr ")"
//   prim    := "id(" INT ")" | "cup(" INT ")" | "cap(" INT ")"
//            | "swap(" INT "," INT ")"
//
// Whitespace is insignificant and "#" starts a line comment. A wire type is a
// list of dimensions, so [2,3] and [6] are different types. `a;b` evaluates
// to Mat(b) * Mat(a) and `a*b` to kron(Mat(a), Mat(b)).

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "choiscope/core/types.hpp"

namespace choiscope {
class Rng;
}

namespace choiscope::diagram {

using Dims = std::vector<std::size_t>;

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t offset = 0;
};

class ParseError : public Error {
 public:
  enum class Kind { kLexical, kSyntax };

  ParseError(Kind kind, SourcePos pos, std::string found, std::vector<std::string> expected);

  Kind kind() const { return kind_; }
  SourcePos pos() const { return pos_; }
  const std::string& found() const { return found_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  Kind kind_;
  SourcePos pos_;
  std::string found_;
  std::vector<std::string> expected_;
};

// Unbound identifiers and composition mismatches.
class TypeError : public Error {
 public:
  TypeError(const std::string& what, SourcePos pos) : Error(what), pos_(pos) {}
  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

// The offending source line followed by a caret under `pos`.
std::string caret_excerpt(std::string_view source, SourcePos pos);

// ---------------------------------------------------------------------------
// Lexer

enum class TokenKind { kIdent, kInt, kLParen, kRParen, kComma, kSemi, kStar, kEnd };

struct Token {
  TokenKind kind;
  std::string text;
  SourcePos pos;
};

std::vector<Token> tokenize(std::string_view source);

// ---------------------------------------------------------------------------
// AST

enum class PrimKind { kId, kCup, kCap, kSwap };

struct WireType {
  Dims domain;
  Dims codomain;
  bool operator==(const WireType&) const = default;
};

std::string format_dims(const Dims& dims);

struct Node;
using Expr = std::shared_ptr<const Node>;

struct Prim {
  PrimKind kind;
  Dims args;
};
struct Named {
  std::string name;
};
struct Seq {
  Expr first;
  Expr second;
};
struct Tensor {
  Expr top;
  Expr bottom;
};

struct Node {
  std::variant<Prim, Named, Seq, Tensor> body;
  SourcePos pos;
  std::optional<WireType> type;  // filled in by typecheck()
};

Expr parse(std::string_view source);

// Canonical text; parse(print(e)) is structurally equal to e.
std::string print(const Expr& e);

// Equality of shape and contents, ignoring source positions and types.
bool structurally_equal(const Expr& a, const Expr& b);

// ---------------------------------------------------------------------------
// Environment of named boxes

struct Binding {
  Mat matrix;  // prod(codomain) x prod(domain)
  Dims domain;
  Dims codomain;
};

class Env {
 public:
  // Throws ArgumentError on a bad or duplicate name, DimensionError when the
  // matrix shape does not match the declared wire types.
  void bind(const std::string& name, Mat matrix, Dims domain, Dims codomain);
  // Shorthand for a single input wire of dim cols and output wire of dim rows.
  void bind(const std::string& name, Mat matrix);

  const Binding* find(const std::string& name) const;
  const std::map<std::string, Binding>& bindings() const { return bindings_; }

 private:
  std::map<std::string, Binding> bindings_;
};

bool is_keyword(std::string_view word);

// Returns a copy of the tree with every node's type filled in.
Expr typecheck(const Expr& e, const Env& env);

// Requires a type-checked tree.
Mat evaluate(const Expr& typed, const Env& env);

struct Equivalence {
  bool equivalent = false;
  double max_abs_diff = 0.0;
  double threshold = 0.0;  // tol.rel * max(|lhs|, |rhs|)_max + tol.abs
  WireType type;
};

// Parses, type-checks and evaluates both sides and compares them entrywise.
// The sides may split their wires differently ([2,2] against [4]) as long as
// the total input and output dimensions agree; otherwise DimensionError.
// `type` is the left-hand side's type.
Equivalence equivalent(std::string_view lhs, std::string_view rhs, const Env& env,
                       const Tol& tol = {});

// ---------------------------------------------------------------------------
// Wire identities

struct IdentityCase {
  std::string name;
  std::string lhs;
  std::string rhs;
  Env env;
};

// The wire identities for wire dimensions d and e, with fresh random boxes
// drawn from `rng`: snake, swap involution, cup/cap symmetry, cup crossing a
// wire, sliding around a cup and a cap, partial and full trace loops, and the
// conjugate-state construction.
std::vector<IdentityCase> wire_identities(std::size_t d, std::size_t e, choiscope::Rng& rng);

struct IdentityResult {
  std::string name;
  std::size_t d = 0;
  std::size_t e = 0;
  std::size_t sample = 0;
  Equivalence result;
};

struct IdentitySuiteReport {
  std::vector<IdentityResult> results;
  bool all_equivalent = true;
  double max_abs_diff = 0.0;
};

// Every identity for every (d, e) in dims x dims and `samples` random
// environments each.
IdentitySuiteReport run_identity_suite(std::span<const std::size_t> dims, std::size_t samples,
                                       Seed seed, const Tol& tol = {});

}  // namespace choiscope::diagram
