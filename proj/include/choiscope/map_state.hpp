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
#include <optional>
#include <vector>

#include "choiscope/core/types.hpp"

// Operator <-> bipartite pure state dualities.
namespace choiscope::map_state {

// v = sum_k coeffs[k] * left.col(k) (x) right.col(k).
struct SchmidtDecomp {
  RealVec coeffs;  // descending, only those above the rank threshold
  Mat left;        // dim_a x rank, orthonormal columns
  Mat right;       // dim_b x rank, orthonormal columns

  std::size_t rank() const { return static_cast<std::size_t>(coeffs.size()); }
  BiVec reconstruct() const;
};

// Schmidt decomposition of v through the SVD of unvec(v). A coefficient is
// kept iff it exceeds tol.rel * sigma_max + tol.abs. Zero v -> ArgumentError.
SchmidtDecomp schmidt_decompose(const BiVec& v, const Tol& tol = {});

// Purification of a PSD rho on B: returns vec(f) with f (dim_b x dim_a),
// f f^dagger = rho and Tr_A |f>><<f| = rho. f = Q sqrt(Lambda) padded to
// dim_a columns, then multiplied by `gauge` (a dim_a x dim_a unitary,
// identity when omitted).
BiVec purify(const Mat& rho, std::size_t dim_a, const Tol& tol = {},
             const std::optional<Mat>& gauge = std::nullopt);

// Tr_A |v><v|, a dim_b x dim_b matrix.
Mat reduced_state(const BiVec& v);

struct SpectralTerm {
  Complex eigenvalue;
  Vec conjugate_vector;  // conj(u_k)
  Vec vector;            // u_k
};

// For normal f = sum_k lambda_k |u_k><u_k|, the conjugate-state form
// vec(f) = sum_k lambda_k conj(u_k) (x) u_k. Hermitian inputs go through the
// hermitian solver, so their eigenvalues come back exactly real and
// ascending. Non-normal f -> PropertyError with the normality residual.
std::vector<SpectralTerm> spectral_state_decomposition(const Mat& f, const Tol& tol = {});

BiVec reconstruct(const std::vector<SpectralTerm>& terms);

// One property evaluated on the operator and on its operator state. The two
// residuals measure the same quantity along different routes; `holds` is
// decided by residual <= threshold.
struct DualFlag {
  bool holds = false;
  double residual = 0.0;
  double dual_residual = 0.0;
  double threshold = 0.0;
};

struct OperatorStateReport {
  DualFlag is_real;
  DualFlag is_diagonal;  // vec(f) supported on |ii> only
  std::size_t rank = 0;
  std::size_t schmidt_rank = 0;
  bool is_factorizable = false;  // rank one
  bool is_full_rank = false;

  // Square operators only.
  std::optional<DualFlag> is_symmetric;      // SWAP vec(f) = vec(f)
  std::optional<DualFlag> is_antisymmetric;  // SWAP vec(f) = -vec(f)
  std::optional<DualFlag> is_hermitian;      // SWAP vec(f) = conj(vec(f))
  std::optional<DualFlag> is_unitary;        // flat Schmidt spectrum at 1
  std::optional<Complex> trace;              // <cap|vec(f)>
};

// Classifies f and cross-checks every flag against its state-side
// characterization. A disagreement between the two routes beyond tolerance
// raises ComputationError.
OperatorStateReport classify_operator_state(const Mat& f, const Tol& tol = {});

}  // namespace choiscope::map_state
