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
#include <span>
#include <vector>

#include "choiscope/core/types.hpp"

namespace choiscope {

Mat identity(std::size_t n);

// Tr(f^dagger g). Throws DimensionError unless f and g have the same shape.
Complex hs_inner(const Mat& f, const Mat& g);

// sqrt(Re hs_inner(m, m)).
double frobenius_norm(const Mat& m);

Complex trace(const Mat& m);

// (x (x) y)[(i,k),(j,l)] = x[i,j] * y[k,l], row i*q+k, column j*q+l.
Mat kron(const Mat& x, const Mat& y);

// Reduced matrix over the factors listed in `keep` (in ascending factor
// order). `dims` lists every factor dimension, left factor major. `keep` must
// be a nonempty set of valid indices; use trace() to remove every factor.
Mat partial_trace(const Mat& m, std::span<const std::size_t> dims,
                  std::span<const std::size_t> keep);

Mat hermitize(const Mat& m);

// ||m - m^dagger||_F.
double hermiticity_residual(const Mat& m);

struct HermitianEig {
  RealVec values;  // ascending
  Mat vectors;     // orthonormal columns, vectors.col(k) pairs with values(k)
};

// Hermitian eigendecomposition. m is accepted when
// ||m - m^dagger||_F <= tol.threshold(||m||_F) and is hermitized first;
// otherwise PropertyError carrying the residual.
HermitianEig eig_hermitian(const Mat& m, const Tol& tol = {});

double min_eigenvalue(const Mat& m, const Tol& tol = {});

// m = u * diag_embed(sigma) * v, with u (rows x rows) and v (cols x cols)
// unitary. Note v is the right factor as it appears in the product, not its
// adjoint. sigma has min(rows, cols) entries, descending.
struct Svd {
  Mat u;
  RealVec sigma;
  Mat v;
};

Svd svd(const Mat& m);

// rows x cols matrix with sigma on the main diagonal.
Mat diag_embed(const RealVec& sigma, std::size_t rows, std::size_t cols);

// Number of singular values above tol.rel * sigma_max + tol.abs. `sigma`
// must be sorted descending.
std::size_t numeric_rank(const RealVec& sigma, const Tol& tol = {});

// x = pos_re - neg_re + i (pos_im - neg_im) with all four parts PSD: the
// positive and negative spectral parts of (x + x^dagger)/2 and
// (x - x^dagger)/(2i).
struct PositiveDecomposition {
  Mat pos_re;
  Mat neg_re;
  Mat pos_im;
  Mat neg_im;

  Mat recombine() const;
};

PositiveDecomposition positive_decomposition(const Mat& x);

bool all_finite(const Mat& m);

double max_abs_diff(const Mat& a, const Mat& b);

// Product of a dimension list; 1 for the empty list.
std::size_t dim_product(std::span<const std::size_t> dims);

}  // namespace choiscope
