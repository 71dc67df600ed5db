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

#include <complex>
#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>

#include "choiscope/core/errors.hpp"

namespace choiscope {

using Complex = std::complex<double>;

// Dense complex matrix, row-major so that entry (r, c) lives at r * cols + c.
//
// Composite indices follow one global convention: for factors X (dim p) and
// Y (dim q) the pair (i, k) maps to i * q + k, i.e. the left factor is the
// major index. kron(), vec(), the Choi layout and the diagram evaluator all
// rely on it.
using Mat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vec = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
using RealVec = Eigen::VectorXd;

// Numerical tolerance: a residual r passes iff r <= rel * scale + abs, where
// scale is the norm of the object under test.
class Tol {
 public:
  Tol() = default;
  Tol(double rel, double abs) : rel_(rel), abs_(abs) {
    if (!(rel >= 0.0) || !(abs >= 0.0)) {
      throw ArgumentError("tolerance components must be nonnegative");
    }
  }

  double rel() const { return rel_; }
  double abs() const { return abs_; }
  double threshold(double scale) const { return rel_ * scale + abs_; }

 private:
  double rel_ = 1e-9;
  double abs_ = 1e-12;
};

struct Seed {
  std::uint64_t value = 0;
};

// A vector in A (x) B with its factor dimensions recorded. Component (i, m)
// is stored at i * dim_b + m.
class BiVec {
 public:
  BiVec(std::size_t dim_a, std::size_t dim_b, Vec entries)
      : dim_a_(dim_a), dim_b_(dim_b), entries_(std::move(entries)) {
    if (dim_a == 0 || dim_b == 0) {
      throw ArgumentError("BiVec factor dimensions must be positive");
    }
    if (static_cast<std::size_t>(entries_.size()) != dim_a * dim_b) {
      throw DimensionError("BiVec entry count does not match dim_a * dim_b");
    }
  }

  std::size_t dim_a() const { return dim_a_; }
  std::size_t dim_b() const { return dim_b_; }
  const Vec& entries() const { return entries_; }

  Complex operator()(std::size_t i, std::size_t m) const {
    return entries_(static_cast<Eigen::Index>(i * dim_b_ + m));
  }

  double norm() const { return entries_.norm(); }

 private:
  std::size_t dim_a_;
  std::size_t dim_b_;
  Vec entries_;
};

inline Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

}  // namespace choiscope
