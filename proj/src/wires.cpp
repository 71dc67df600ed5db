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

#include "choiscope/wires.hpp"

#include <cmath>

#include "choiscope/kernels/kernels.hpp"

namespace choiscope::wires {
namespace {

void require_positive(std::size_t d, const char* what) {
  if (d == 0) throw ArgumentError(std::string(what) + ": dimension must be positive");
}

}  // namespace

BiVec cup(std::size_t d) {
  require_positive(d, "cup");
  Vec v = Vec::Zero(idx(d * d));
  for (std::size_t i = 0; i < d; ++i) v(idx(i * d + i)) = 1.0;
  return BiVec(d, d, std::move(v));
}

Mat cap(std::size_t d) { return as_column(cup(d)).adjoint(); }

Mat swap(std::size_t p, std::size_t q) {
  require_positive(p, "swap");
  require_positive(q, "swap");
  Mat s = Mat::Zero(idx(p * q), idx(p * q));
  // |a>|b> at a*q+b  ->  |b>|a> at b*p+a
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = 0; b < q; ++b) s(idx(b * p + a), idx(a * q + b)) = 1.0;
  }
  return s;
}

BiVec vec(const Mat& f) {
  const auto dim_b = static_cast<std::size_t>(f.rows());
  const auto dim_a = static_cast<std::size_t>(f.cols());
  Vec v(f.size());
  for (std::size_t i = 0; i < dim_a; ++i) {
    for (std::size_t m = 0; m < dim_b; ++m) v(idx(i * dim_b + m)) = f(idx(m), idx(i));
  }
  return BiVec(dim_a, dim_b, std::move(v));
}

Mat unvec(const BiVec& v) {
  Mat f(idx(v.dim_b()), idx(v.dim_a()));
  for (std::size_t i = 0; i < v.dim_a(); ++i) {
    for (std::size_t m = 0; m < v.dim_b(); ++m) f(idx(m), idx(i)) = v(i, m);
  }
  return f;
}

BiVec bell_state(std::size_t d) {
  BiVec c = cup(d);
  return BiVec(d, d, c.entries() / std::sqrt(static_cast<double>(d)));
}

BiVec conjugate_vector(const BiVec& v) {
  return BiVec(v.dim_a(), v.dim_b(), v.entries().conjugate());
}

Vec conjugate_vector(const Vec& v) { return v.conjugate(); }

Complex inner(const Vec& v, const Vec& w) {
  if (v.size() != w.size()) throw DimensionError("inner: length mismatch");
  return kernels::active().dotc(v.data(), w.data(), static_cast<std::size_t>(v.size()));
}

Complex inner(const BiVec& v, const BiVec& w) {
  if (v.dim_a() != w.dim_a() || v.dim_b() != w.dim_b()) {
    throw DimensionError("inner: factor dimensions differ");
  }
  return inner(v.entries(), w.entries());
}

Mat as_column(const BiVec& v) { return v.entries(); }

}  // namespace choiscope::wires
