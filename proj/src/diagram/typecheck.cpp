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

#include "choiscope/core/linalg.hpp"
#include "choiscope/diagram.hpp"

namespace choiscope::diagram {

std::string format_dims(const Dims& dims) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < dims.size(); ++k) os << (k ? "," : "") << dims[k];
  os << ']';
  return os.str();
}

void Env::bind(const std::string& name, Mat matrix, Dims domain, Dims codomain) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) {
    throw ArgumentError("Env::bind: '" + name + "' is not an identifier");
  }
  for (char c : name) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
      throw ArgumentError("Env::bind: '" + name + "' is not an identifier");
    }
  }
  if (is_keyword(name)) throw ArgumentError("Env::bind: '" + name + "' is a reserved word");
  if (bindings_.contains(name)) throw ArgumentError("Env::bind: '" + name + "' is already bound");
  for (std::size_t d : domain) {
    if (d == 0) throw ArgumentError("Env::bind: wire dimensions must be positive");
  }
  for (std::size_t d : codomain) {
    if (d == 0) throw ArgumentError("Env::bind: wire dimensions must be positive");
  }
  if (matrix.rows() != idx(dim_product(codomain)) || matrix.cols() != idx(dim_product(domain))) {
    std::ostringstream os;
    os << "Env::bind: '" << name << "' declared " << format_dims(domain) << " -> "
       << format_dims(codomain) << " but the matrix is " << matrix.rows() << "x" << matrix.cols();
    throw DimensionError(os.str());
  }
  bindings_.emplace(name, Binding{std::move(matrix), std::move(domain), std::move(codomain)});
}

void Env::bind(const std::string& name, Mat matrix) {
  Dims domain{static_cast<std::size_t>(matrix.cols())};
  Dims codomain{static_cast<std::size_t>(matrix.rows())};
  bind(name, std::move(matrix), std::move(domain), std::move(codomain));
}

const Binding* Env::find(const std::string& name) const {
  const auto it = bindings_.find(name);
  return it == bindings_.end() ? nullptr : &it->second;
}

namespace {

Dims concat(const Dims& a, const Dims& b) {
  Dims out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

WireType prim_type(const Prim& p) {
  const std::size_t d = p.args.at(0);
  switch (p.kind) {
    case PrimKind::kId:
      return {{d}, {d}};
    case PrimKind::kCup:
      return {{}, {d, d}};
    case PrimKind::kCap:
      return {{d, d}, {}};
    case PrimKind::kSwap:
      return {{d, p.args.at(1)}, {p.args.at(1), d}};
  }
  throw ComputationError("unknown primitive");
}

}  // namespace

Expr typecheck(const Expr& e, const Env& env) {
  return std::visit(
      [&](const auto& n) -> Expr {
        using T = std::decay_t<decltype(n)>;
        Node out{n, e->pos, std::nullopt};
        if constexpr (std::is_same_v<T, Prim>) {
          out.type = prim_type(n);
        } else if constexpr (std::is_same_v<T, Named>) {
          const Binding* b = env.find(n.name);
          if (b == nullptr) throw TypeError("unbound identifier '" + n.name + "'", e->pos);
          out.type = WireType{b->domain, b->codomain};
        } else if constexpr (std::is_same_v<T, Seq>) {
          Expr first = typecheck(n.first, env);
          Expr second = typecheck(n.second, env);
          if (first->type->codomain != second->type->domain) {
            std::ostringstream os;
            os << "line " << e->pos.line << ", column " << e->pos.column
               << ": composition mismatch: left codomain " << format_dims(first->type->codomain)
               << " vs right domain " << format_dims(second->type->domain);
            throw TypeError(os.str(), e->pos);
          }
          out.type = WireType{first->type->domain, second->type->codomain};
          out.body = Seq{std::move(first), std::move(second)};
        } else {
          Expr top = typecheck(n.top, env);
          Expr bottom = typecheck(n.bottom, env);
          out.type = WireType{concat(top->type->domain, bottom->type->domain),
                              concat(top->type->codomain, bottom->type->codomain)};
          out.body = Tensor{std::move(top), std::move(bottom)};
        }
        return std::make_shared<const Node>(std::move(out));
      },
      e->body);
}

}  // namespace choiscope::diagram
