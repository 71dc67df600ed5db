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

#include <algorithm>

#include "choiscope/core/linalg.hpp"
#include "choiscope/diagram.hpp"
#include "choiscope/wires.hpp"

namespace choiscope::diagram {

Mat evaluate(const Expr& typed, const Env& env) {
  if (!typed->type) throw ArgumentError("evaluate: expression has not been type-checked");
  return std::visit(
      [&](const auto& n) -> Mat {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Prim>) {
          const std::size_t d = n.args.at(0);
          switch (n.kind) {
            case PrimKind::kId:
              return identity(d);
            case PrimKind::kCup:
              return wires::as_column(wires::cup(d));
            case PrimKind::kCap:
              return wires::cap(d);
            case PrimKind::kSwap:
              return wires::swap(d, n.args.at(1));
          }
          throw ComputationError("unknown primitive");
        } else if constexpr (std::is_same_v<T, Named>) {
          const Binding* b = env.find(n.name);
          if (b == nullptr) throw TypeError("unbound identifier '" + n.name + "'", typed->pos);
          return b->matrix;
        } else if constexpr (std::is_same_v<T, Seq>) {
          // Diagram time flows left to right: the left operand acts first.
          return evaluate(n.second, env) * evaluate(n.first, env);
        } else {
          return kron(evaluate(n.top, env), evaluate(n.bottom, env));
        }
      },
      typed->body);
}

Equivalence equivalent(std::string_view lhs, std::string_view rhs, const Env& env,
                       const Tol& tol) {
  const Expr left = typecheck(parse(lhs), env);
  const Expr right = typecheck(parse(rhs), env);
  if (dim_product(left->type->domain) != dim_product(right->type->domain) ||
      dim_product(left->type->codomain) != dim_product(right->type->codomain)) {
    throw DimensionError("equivalent: sides have different types " +
                         format_dims(left->type->domain) + " -> " +
                         format_dims(left->type->codomain) + " and " +
                         format_dims(right->type->domain) + " -> " +
                         format_dims(right->type->codomain));
  }
  const Mat a = evaluate(left, env);
  const Mat b = evaluate(right, env);
  Equivalence out;
  out.type = *left->type;
  out.max_abs_diff = max_abs_diff(a, b);
  const double scale = std::max(a.size() ? a.cwiseAbs().maxCoeff() : 0.0,
                                b.size() ? b.cwiseAbs().maxCoeff() : 0.0);
  out.threshold = tol.threshold(scale);
  out.equivalent = out.max_abs_diff <= out.threshold;
  return out;
}

}  // namespace choiscope::diagram
