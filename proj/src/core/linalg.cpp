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

#include "choiscope/core/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <sstream>

#include "choiscope/kernels/kernels.hpp"

namespace choiscope {
namespace {

void require_square(const Mat& m, const char* what) {
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << what << ": expected a square matrix, got " << m.rows() << "x" << m.cols();
    throw DimensionError(os.str());
  }
}

}  // namespace

Mat identity(std::size_t n) { return Mat::Identity(idx(n), idx(n)); }

Complex hs_inner(const Mat& f, const Mat& g) {
  if (f.rows() != g.rows() || f.cols() != g.cols()) {
    std::ostringstream os;
    os << "hs_inner: shape mismatch " << f.rows() << "x" << f.cols() << " vs " << g.rows() << "x"
       << g.cols();
    throw DimensionError(os.str());
  }
  return kernels::active().dotc(f.data(), g.data(), static_cast<std::size_t>(f.size()));
}

double frobenius_norm(const Mat& m) { return std::sqrt(std::max(0.0, hs_inner(m, m).real())); }

Complex trace(const Mat& m) {
  require_square(m, "trace");
  return m.trace();
}

Mat kron(const Mat& x, const Mat& y) {
  const Eigen::Index p = x.rows(), pc = x.cols();
  const Eigen::Index q = y.rows(), qc = y.cols();
  Mat out(p * q, pc * qc);
  const auto& k = kernels::active();
  for (Eigen::Index i = 0; i < p; ++i) {
    for (Eigen::Index r = 0; r < q; ++r) {
      Complex* dst = out.data() + (i * q + r) * out.cols();
      const Complex* src = y.data() + r * qc;
      for (Eigen::Index j = 0; j < pc; ++j) {
        k.scale(x(i, j), src, dst + j * qc, static_cast<std::size_t>(qc));
      }
    }
  }
  return out;
}

std::size_t dim_product(std::span<const std::size_t> dims) {
  std::size_t p = 1;
  for (std::size_t d : dims) p *= d;
  return p;
}

Mat partial_trace(const Mat& m, std::span<const std::size_t> dims,
                  std::span<const std::size_t> keep) {
  require_square(m, "partial_trace");
  if (dims.empty() || std::find(dims.begin(), dims.end(), 0u) != dims.end()) {
    throw ArgumentError("partial_trace: factor dimensions must be positive");
  }
  if (dim_product(dims) != static_cast<std::size_t>(m.rows())) {
    std::ostringstream os;
    os << "partial_trace: product of dims is " << dim_product(dims) << " but matrix side is "
       << m.rows();
    throw DimensionError(os.str());
  }
  if (keep.empty()) {
    throw ArgumentError("partial_trace: keep set is empty (use trace())");
  }
  const std::size_t n = dims.size();
  std::vector<bool> kept(n, false);
  for (std::size_t f : keep) {
    if (f >= n || kept[f]) {
      throw ArgumentError("partial_trace: keep set has an invalid or repeated factor index");
    }
    kept[f] = true;
  }

  // Strides of each factor inside the full composite index.
  std::vector<std::size_t> stride(n);
  std::size_t s = 1;
  for (std::size_t f = n; f-- > 0;) {
    stride[f] = s;
    s *= dims[f];
  }

  std::vector<std::size_t> kept_dims, kept_stride, traced_dims, traced_stride;
  for (std::size_t f = 0; f < n; ++f) {
    (kept[f] ? kept_dims : traced_dims).push_back(dims[f]);
    (kept[f] ? kept_stride : traced_stride).push_back(stride[f]);
  }

  // Offsets into the full index for every multi-index of a factor group,
  // enumerated with the left factor major.
  auto offsets = [](const std::vector<std::size_t>& ds, const std::vector<std::size_t>& st) {
    std::vector<std::size_t> out{0};
    for (std::size_t g = 0; g < ds.size(); ++g) {
      std::vector<std::size_t> next;
      next.reserve(out.size() * ds[g]);
      for (std::size_t base : out) {
        for (std::size_t v = 0; v < ds[g]; ++v) next.push_back(base + v * st[g]);
      }
      out = std::move(next);
    }
    return out;
  };

  const auto kept_off = offsets(kept_dims, kept_stride);
  const auto traced_off = offsets(traced_dims, traced_stride);
  const auto side = static_cast<Eigen::Index>(kept_off.size());
  Mat out = Mat::Zero(side, side);
  for (Eigen::Index r = 0; r < side; ++r) {
    for (Eigen::Index c = 0; c < side; ++c) {
      Complex acc = 0.0;
      for (std::size_t t : traced_off) {
        acc += m(idx(kept_off[r] + t), idx(kept_off[c] + t));
      }
      out(r, c) = acc;
    }
  }
  return out;
}

Mat hermitize(const Mat& m) {
  require_square(m, "hermitize");
  return (m + m.adjoint()) * 0.5;
}

double hermiticity_residual(const Mat& m) {
  require_square(m, "hermiticity_residual");
  return frobenius_norm(m - m.adjoint());
}

HermitianEig eig_hermitian(const Mat& m, const Tol& tol) {
  require_square(m, "eig_hermitian");
  const double residual = hermiticity_residual(m);
  if (residual > tol.threshold(frobenius_norm(m))) {
    std::ostringstream os;
    os << "eig_hermitian: matrix is not hermitian (||m - m^dagger||_F = " << residual << ")";
    throw PropertyError(os.str(), residual);
  }
  const Eigen::MatrixXcd h = hermitize(m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success) {
    throw ComputationError("eig_hermitian: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double min_eigenvalue(const Mat& m, const Tol& tol) { return eig_hermitian(m, tol).values(0); }

Svd svd(const Mat& m) {
  if (m.size() == 0) throw ArgumentError("svd: empty matrix");
  const Eigen::MatrixXcd a = m;
  Eigen::JacobiSVD<Eigen::MatrixXcd> solver(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (solver.info() != Eigen::Success) {
    throw ComputationError("svd: factorization did not converge");
  }
  return {solver.matrixU(), solver.singularValues(), solver.matrixV().adjoint()};
}

Mat diag_embed(const RealVec& sigma, std::size_t rows, std::size_t cols) {
  Mat out = Mat::Zero(idx(rows), idx(cols));
  const Eigen::Index n = std::min<Eigen::Index>({sigma.size(), idx(rows), idx(cols)});
  for (Eigen::Index k = 0; k < n; ++k) out(k, k) = sigma(k);
  return out;
}

std::size_t numeric_rank(const RealVec& sigma, const Tol& tol) {
  if (sigma.size() == 0) return 0;
  const double cut = tol.threshold(sigma(0));
  std::size_t rank = 0;
  for (Eigen::Index k = 0; k < sigma.size(); ++k) {
    if (sigma(k) > cut) ++rank;
  }
  return rank;
}

namespace {

std::pair<Mat, Mat> spectral_parts(const Mat& h) {
  const HermitianEig eig = eig_hermitian(h, Tol(0.0, std::numeric_limits<double>::infinity()));
  const RealVec pos = eig.values.cwiseMax(0.0);
  const RealVec neg = (-eig.values).cwiseMax(0.0);
  const Mat& v = eig.vectors;
  return {v * pos.cast<Complex>().asDiagonal() * v.adjoint(),
          v * neg.cast<Complex>().asDiagonal() * v.adjoint()};
}

}  // namespace

Mat PositiveDecomposition::recombine() const {
  return (pos_re - neg_re) + Complex(0.0, 1.0) * (pos_im - neg_im);
}

PositiveDecomposition positive_decomposition(const Mat& x) {
  require_square(x, "positive_decomposition");
  const Mat re = (x + x.adjoint()) * 0.5;
  const Mat im = (x - x.adjoint()) * Complex(0.0, -0.5);
  auto [p1, p2] = spectral_parts(re);
  auto [p3, p4] = spectral_parts(im);
  return {std::move(p1), std::move(p2), std::move(p3), std::move(p4)};
}

bool all_finite(const Mat& m) {
  for (Eigen::Index k = 0; k < m.size(); ++k) {
    const Complex z = m.data()[k];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

double max_abs_diff(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("max_abs_diff: shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace choiscope
