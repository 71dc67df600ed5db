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

#include <cstddef>

#include "choiscope/core/types.hpp"

// Cups, caps and SWAPs as concrete arrays, plus the operator <-> state
// vectorization they induce.
namespace choiscope::wires {

// sum_i |i> (x) |i>, unnormalized (squared norm d).
BiVec cup(std::size_t d);

// cup(d)^dagger as a 1 x d^2 row.
Mat cap(std::size_t d);

// pq x pq permutation with swap(p, q) (x (x) y) = y (x) x for x in C^p, y in C^q.
Mat swap(std::size_t p, std::size_t q);

// Columnwise vectorization of f : A -> B (f is dim_b x dim_a). Component
// (i, m) equals f[m, i], so vec(f) = (I_A (x) f) cup(dim_a).
BiVec vec(const Mat& f);

// Inverse of vec: a dim_b x dim_a matrix.
Mat unvec(const BiVec& v);

// cup(d) / sqrt(d).
BiVec bell_state(std::size_t d);

BiVec conjugate_vector(const BiVec& v);
Vec conjugate_vector(const Vec& v);

// <v|w>, through the active kernel table.
Complex inner(const BiVec& v, const BiVec& w);
Complex inner(const Vec& v, const Vec& w);

// v as a column matrix (d_a d_b x 1).
Mat as_column(const BiVec& v);

}  // namespace choiscope::wires
