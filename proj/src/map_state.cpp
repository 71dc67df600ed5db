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

#include "choiscope/map_state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "choiscope/core/linalg.hpp"
#include "choiscope/wires.hpp"

namespace choiscope::map_state {

BiVec SchmidtDecomp::reconstruct() const {
  const auto dim_a = static_cast<std::size_t>(left.rows());
  const auto dim_b = static_cast<std::size_t>(right.rows());
  Vec v = Vec::Zero(idx(dim_a * dim_b));
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
    for (std::size_t i = 0; i < dim_a; ++i) {
      v.segment(idx(i * dim_b), idx(dim_b)) += coeffs(k) * left(idx(i), k) * right.col(k);
    }
  }
  return BiVec(dim_a, dim_b, std::move(v));
}

SchmidtDecomp schmidt_decompose(const BiVec& v, const Tol& tol) {
  if (v.norm() == 0.0) throw ArgumentError("schmidt_decompose: zero vector");
  // unvec(v) = U Sigma V  =>  v(i, m) = sum_k sigma_k V[k, i] U[m, k].
  const Svd s = svd(wires::unvec(v));
  const std::size_t rank = numeric_rank(s.sigma, tol);
  SchmidtDecomp out;
  out.coeffs = s.sigma.head(idx(rank));
  out.left = s.v.topRows(idx(rank)).transpose();
  out.right = s.u.leftCols(idx(rank));
  return out;
}

Mat reduced_state(const BiVec& v) {
  const Mat col = wires::as_column(v);
  const std::size_t dims[] = {v.dim_a(), v.dim_b()};
  const std::size_t keep[] = {1};
  return partial_trace(col * col.adjoint(), dims, keep);
}

BiVec purify(const Mat& rho, std::size_t dim_a, const Tol& tol, const std::optional<Mat>& gauge) {
  if (dim_a == 0) throw ArgumentError("purify: dim_a must be positive");
  const HermitianEig eig = eig_hermitian(rho, tol);
  const double scale = frobenius_norm(rho);
  const double min_eig = eig.values(0);
  if (min_eig < -tol.threshold(scale)) {
    std::ostringstream os;
    os << "purify: operator is not positive semidefinite (min eigenvalue " << min_eig << ")";
    throw PropertyError(os.str(), min_eig);
  }
  const Eigen::Index d = eig.values.size();
  const double cut = tol.threshold(std::max(eig.values(d - 1), 0.0));

  // Eigenpairs above the cut, largest first.
  std::vector<Eigen::Index> support;
  for (Eigen::Index k = d; k-- > 0;) {
    if (eig.values(k) > cut) support.push_back(k);
  }
  if (support.size() > dim_a) {
    std::ostringstream os;
    os << "purify: dim_a = " << dim_a << " is smaller than rank(rho) = " << support.size();
    throw ArgumentError(os.str());
  }

  Mat f = Mat::Zero(d, idx(dim_a));
  for (std::size_t c = 0; c < support.size(); ++c) {
    const Eigen::Index k = support[c];
    f.col(idx(c)) = std::sqrt(eig.values(k)) * eig.vectors.col(k);
  }
  if (gauge) {
    if (gauge->rows() != idx(dim_a) || gauge->cols() != idx(dim_a)) {
      throw DimensionError("purify: gauge unitary must be dim_a x dim_a");
    }
    const double err = frobenius_norm(gauge->adjoint() * *gauge - identity(dim_a));
    if (err > tol.threshold(std::sqrt(static_cast<double>(dim_a)))) {
      throw PropertyError("purify: gauge matrix is not unitary", err);
    }
    f = f * *gauge;
  }
  return wires::vec(f);
}

std::vector<SpectralTerm> spectral_state_decomposition(const Mat& f, const Tol& tol) {
  if (f.rows() != f.cols()) {
    throw DimensionError("spectral_state_decomposition: operator must be square");
  }
  const double norm = frobenius_norm(f);
  const double normality = frobenius_norm(f.adjoint() * f - f * f.adjoint());
  if (normality > tol.threshold(norm * norm)) {
    std::ostringstream os;
    os << "spectral_state_decomposition: operator is not normal (||f^dagger f - f f^dagger||_F = "
       << normality << ")";
    throw PropertyError(os.str(), normality);
  }

  std::vector<SpectralTerm> terms;
  auto push = [&](Complex lambda, const Vec& u) {
    terms.push_back({lambda, u.conjugate(), u});
  };

  if (hermiticity_residual(f) <= tol.threshold(norm)) {
    const HermitianEig eig = eig_hermitian(f, tol);
    for (Eigen::Index k = 0; k < eig.values.size(); ++k) push(eig.values(k), eig.vectors.col(k));
    return terms;
  }

  // A normal matrix has a diagonal Schur form; the Schur vectors are then an
  // orthonormal eigenbasis even inside degenerate eigenspaces.
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(Eigen::MatrixXcd(f), true);
  if (schur.info() != Eigen::Success) {
    throw ComputationError("spectral_state_decomposition: Schur factorization did not converge");
  }
  const Eigen::MatrixXcd& t = schur.matrixT();
  const Eigen::MatrixXcd& q = schur.matrixU();
  for (Eigen::Index k = 0; k < t.rows(); ++k) push(t(k, k), q.col(k));
  return terms;
}

BiVec reconstruct(const std::vector<SpectralTerm>& terms) {
  if (terms.empty()) throw ArgumentError("reconstruct: no terms");
  const auto d = static_cast<std::size_t>(terms.front().vector.size());
  Vec v = Vec::Zero(idx(d * d));
  for (const auto& t : terms) {
    for (std::size_t i = 0; i < d; ++i) {
      v.segment(idx(i * d), idx(d)) += t.eigenvalue * t.conjugate_vector(idx(i)) * t.vector;
    }
  }
  return BiVec(d, d, std::move(v));
}

namespace {

DualFlag make_flag(double residual, double dual_residual, double threshold, const char* name) {
  // Both routes compute the same norm; they may differ only by rounding.
  if (std::abs(residual - dual_residual) > threshold) {
    std::ostringstream os;
    os << "classify_operator_state: operator and state routes disagree on '" << name
       << "' (" << residual << " vs " << dual_residual << ")";
    throw ComputationError(os.str());
  }
  return {residual <= threshold, residual, dual_residual, threshold};
}

}  // namespace

OperatorStateReport classify_operator_state(const Mat& f, const Tol& tol) {
  if (f.size() == 0) throw ArgumentError("classify_operator_state: empty operator");
  const BiVec v = wires::vec(f);
  const Vec& ve = v.entries();
  const double norm = frobenius_norm(f);
  const double thr = tol.threshold(norm);
  OperatorStateReport r;

  r.is_real = make_flag(f.imag().norm(), ve.imag().norm(), thr, "real");

  double off_diag_op = 0.0;
  for (Eigen::Index m = 0; m < f.rows(); ++m) {
    for (Eigen::Index i = 0; i < f.cols(); ++i) {
      if (m != i) off_diag_op += std::norm(f(m, i));
    }
  }
  double off_diag_state = 0.0;
  for (std::size_t i = 0; i < v.dim_a(); ++i) {
    for (std::size_t m = 0; m < v.dim_b(); ++m) {
      if (m != i) off_diag_state += std::norm(v(i, m));
    }
  }
  r.is_diagonal = make_flag(std::sqrt(off_diag_op), std::sqrt(off_diag_state), thr, "diagonal");

  const Svd s = svd(f);
  r.rank = numeric_rank(s.sigma, tol);
  r.schmidt_rank = norm == 0.0 ? 0 : schmidt_decompose(v, tol).rank();
  if (r.rank != r.schmidt_rank) {
    throw ComputationError("classify_operator_state: rank and Schmidt rank disagree");
  }
  r.is_factorizable = r.rank == 1;
  r.is_full_rank = r.rank == static_cast<std::size_t>(std::min(f.rows(), f.cols()));

  if (f.rows() != f.cols()) return r;

  const auto d = static_cast<std::size_t>(f.rows());
  const Mat sw = wires::swap(d, d);
  const Vec swapped = sw * ve;
  r.is_symmetric = make_flag(frobenius_norm(f - f.transpose()), (swapped - ve).norm(), thr,
                             "symmetric");
  r.is_antisymmetric = make_flag(frobenius_norm(f + f.transpose()), (swapped + ve).norm(), thr,
                                 "antisymmetric");
  r.is_hermitian = make_flag(frobenius_norm(f - f.adjoint()), (swapped - ve.conjugate()).norm(),
                             thr, "hermitian");

  // ||f^dagger f - I||_F = sqrt(sum_k (sigma_k^2 - 1)^2) over all d Schmidt
  // coefficients of vec(f), zeros included.
  RealVec schmidt = RealVec::Zero(idx(d));
  if (norm > 0.0) {
    const RealVec kept = schmidt_decompose(v, Tol(0.0, 0.0)).coeffs;
    schmidt.head(kept.size()) = kept;
  }
  double flat = 0.0;
  for (Eigen::Index k = 0; k < schmidt.size(); ++k) {
    const double dev = schmidt(k) * schmidt(k) - 1.0;
    flat += dev * dev;
  }
  r.is_unitary = make_flag(frobenius_norm(f.adjoint() * f - identity(d)), std::sqrt(flat),
                           tol.threshold(std::sqrt(static_cast<double>(d))), "unitary");

  const Complex tr_direct = f.trace();
  const Complex tr_cap = wires::inner(wires::cup(d), v);
  if (std::abs(tr_direct - tr_cap) > thr) {
    throw ComputationError("classify_operator_state: trace and <cap|vec f> disagree");
  }
  r.trace = tr_direct;
  return r;
}

}  // namespace choiscope::map_state
