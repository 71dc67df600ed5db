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

#include "choiscope/channels.hpp"

#include <cmath>
#include <sstream>

#include "choiscope/core/linalg.hpp"
#include "choiscope/kernels/kernels.hpp"
#include "choiscope/wires.hpp"

namespace choiscope::channels {
namespace {

void require_dims(std::size_t dim_in, std::size_t dim_out) {
  if (dim_in == 0 || dim_out == 0) {
    throw ArgumentError("channel dimensions must be positive");
  }
}

std::string shape(const Mat& m) {
  std::ostringstream os;
  os << m.rows() << "x" << m.cols();
  return os.str();
}

}  // namespace

Mat reshuffle(const Mat& superop, std::size_t dim_in, std::size_t dim_out) {
  require_dims(dim_in, dim_out);
  const std::size_t a = dim_in, b = dim_out;
  if (superop.rows() != idx(b * b) || superop.cols() != idx(a * a)) {
    throw DimensionError("reshuffle: superoperator must be dim_out^2 x dim_in^2, got " +
                         shape(superop));
  }
  Mat choi(idx(a * b), idx(a * b));
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t m = 0; m < b; ++m) {
      for (std::size_t j = 0; j < a; ++j) {
        for (std::size_t n = 0; n < b; ++n) {
          choi(idx(i * b + m), idx(j * b + n)) = superop(idx(n * b + m), idx(j * a + i));
        }
      }
    }
  }
  return choi;
}

Mat unreshuffle(const Mat& choi, std::size_t dim_in, std::size_t dim_out) {
  require_dims(dim_in, dim_out);
  const std::size_t a = dim_in, b = dim_out;
  if (choi.rows() != idx(a * b) || choi.cols() != idx(a * b)) {
    throw DimensionError("unreshuffle: Choi matrix must be (dim_in*dim_out)^2, got " +
                         shape(choi));
  }
  Mat superop(idx(b * b), idx(a * a));
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t m = 0; m < b; ++m) {
      for (std::size_t j = 0; j < a; ++j) {
        for (std::size_t n = 0; n < b; ++n) {
          superop(idx(n * b + m), idx(j * a + i)) = choi(idx(i * b + m), idx(j * b + n));
        }
      }
    }
  }
  return superop;
}

Channel Channel::from_choi(Mat choi, std::size_t dim_in, std::size_t dim_out) {
  require_dims(dim_in, dim_out);
  if (choi.rows() != idx(dim_in * dim_out) || choi.cols() != idx(dim_in * dim_out)) {
    std::ostringstream os;
    os << "Choi matrix for " << dim_in << " -> " << dim_out << " must be "
       << dim_in * dim_out << "x" << dim_in * dim_out << ", got " << shape(choi);
    throw DimensionError(os.str());
  }
  if (!all_finite(choi)) throw ArgumentError("Choi matrix has non-finite entries");
  Mat superop = unreshuffle(choi, dim_in, dim_out);
  return Channel(dim_in, dim_out, std::move(choi), std::move(superop));
}

Channel Channel::from_superoperator(const Mat& superop, std::size_t dim_in, std::size_t dim_out) {
  return from_choi(reshuffle(superop, dim_in, dim_out), dim_in, dim_out);
}

Mat Channel::normalized_choi() const { return choi_ / static_cast<double>(dim_in_); }

Mat kraus_completeness(const KrausSet& kraus) {
  if (kraus.operators.empty()) throw ArgumentError("Kraus set is empty");
  const Eigen::Index a = kraus.operators.front().cols();
  Mat sum = Mat::Zero(a, a);
  for (const Mat& f : kraus.operators) sum += f.adjoint() * f;
  return sum;
}

Channel from_kraus(const KrausSet& kraus) {
  if (kraus.operators.empty()) throw ArgumentError("from_kraus: Kraus set is empty");
  const Mat& first = kraus.operators.front();
  const auto dim_out = static_cast<std::size_t>(first.rows());
  const auto dim_in = static_cast<std::size_t>(first.cols());
  require_dims(dim_in, dim_out);
  Mat choi = Mat::Zero(idx(dim_in * dim_out), idx(dim_in * dim_out));
  for (const Mat& f : kraus.operators) {
    if (f.rows() != first.rows() || f.cols() != first.cols()) {
      throw DimensionError("from_kraus: Kraus operators have mixed shapes (" + shape(first) +
                           " vs " + shape(f) + ")");
    }
    const Vec v = wires::vec(f).entries();
    choi += v * v.adjoint();
  }
  return Channel::from_choi(std::move(choi), dim_in, dim_out);
}

KrausSet kraus_decompose(const Channel& channel, const Tol& tol) {
  const Mat& choi = channel.choi();
  const double scale = frobenius_norm(choi);
  HermitianEig eig;
  try {
    eig = eig_hermitian(choi, tol);
  } catch (const PropertyError& e) {
    throw PropertyError(std::string("kraus_decompose: channel is not CPP (Choi matrix is not "
                                    "hermitian): ") + e.what(),
                        e.value());
  }
  const double min_eig = eig.values(0);
  if (min_eig < -tol.threshold(scale)) {
    std::ostringstream os;
    os << "kraus_decompose: channel is not CPP (Choi matrix has eigenvalue " << min_eig << ")";
    throw PropertyError(os.str(), min_eig);
  }

  const Eigen::Index n = eig.values.size();
  const double cut = tol.threshold(std::max(eig.values(n - 1), 0.0));
  KrausSet out;
  for (Eigen::Index k = n; k-- > 0;) {
    if (eig.values(k) <= cut) break;
    const Vec psi = std::sqrt(eig.values(k)) * eig.vectors.col(k);
    Mat f = wires::unvec(BiVec(channel.dim_in(), channel.dim_out(), psi));

    const double peak = f.cwiseAbs().maxCoeff();
    const double floor = tol.threshold(peak);
    for (Eigen::Index e = 0; e < f.size(); ++e) {
      const Complex z = f.data()[e];
      if (std::abs(z) > floor) {
        f *= std::conj(z) / std::abs(z);
        f.data()[e] = std::abs(z);
        break;
      }
    }
    out.operators.push_back(std::move(f));
  }
  if (out.operators.empty()) {
    // J = 0 is the zero map, which is CPP; represent it by one zero operator.
    out.operators.push_back(Mat::Zero(idx(channel.dim_out()), idx(channel.dim_in())));
  }
  return out;
}

namespace {

void require_input(const Channel& channel, const Mat& rho) {
  if (rho.rows() != idx(channel.dim_in()) || rho.cols() != idx(channel.dim_in())) {
    std::ostringstream os;
    os << "input operator must be " << channel.dim_in() << "x" << channel.dim_in() << ", got "
       << shape(rho);
    throw DimensionError(os.str());
  }
}

}  // namespace

Mat apply(const Channel& channel, const Mat& rho) {
  require_input(channel, rho);
  const Vec out = channel.superoperator() * wires::vec(rho).entries();
  return wires::unvec(BiVec(channel.dim_out(), channel.dim_out(), out));
}

Mat apply_via_choi(const Channel& channel, const Mat& rho) {
  require_input(channel, rho);
  const std::size_t a = channel.dim_in(), b = channel.dim_out();
  const Mat& choi = channel.choi();
  const auto& k = kernels::active();
  Mat out = Mat::Zero(idx(b), idx(b));
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < a; ++j) {
      const Complex w = rho(idx(i), idx(j));
      if (w == Complex(0.0)) continue;
      for (std::size_t m = 0; m < b; ++m) {
        k.axpy(w, choi.data() + (i * b + m) * a * b + j * b, out.data() + m * b, b);
      }
    }
  }
  return out;
}

Mat apply_via_kraus(const KrausSet& kraus, const Mat& rho) {
  if (kraus.operators.empty()) throw ArgumentError("apply_via_kraus: Kraus set is empty");
  const Mat& first = kraus.operators.front();
  if (rho.rows() != first.cols() || rho.cols() != first.cols()) {
    throw DimensionError("apply_via_kraus: input shape does not match Kraus operators");
  }
  Mat out = Mat::Zero(first.rows(), first.rows());
  for (const Mat& f : kraus.operators) out += f * rho * f.adjoint();
  return out;
}

double choi_distance(const Channel& a, const Channel& b) {
  if (a.dim_in() != b.dim_in() || a.dim_out() != b.dim_out()) {
    throw DimensionError("choi_distance: channels have different dimensions");
  }
  return frobenius_norm(a.choi() - b.choi());
}

Channel dual_channel(const Channel& channel) {
  const std::size_t a = channel.dim_in(), b = channel.dim_out();
  Mat choi = wires::swap(a, b) * channel.choi().conjugate() * wires::swap(b, a);
  return Channel::from_choi(std::move(choi), b, a);
}

Channel concatenate(const Channel& first, const Channel& second) {
  if (first.dim_out() != second.dim_in()) {
    std::ostringstream os;
    os << "concatenate: inner dimensions differ (" << first.dim_out() << " vs "
       << second.dim_in() << ")";
    throw DimensionError(os.str());
  }
  const std::size_t a = first.dim_in(), b = first.dim_out(), c = second.dim_out();
  const Mat& j1 = first.choi();
  const Mat& j2 = second.choi();
  const auto& k = kernels::active();
  // J[(x,z),(x',z')] = sum_{y,y'} J1[(x,y),(x',y')] J2[(y,z),(y',z')]
  Mat out = Mat::Zero(idx(a * c), idx(a * c));
  for (std::size_t x = 0; x < a; ++x) {
    for (std::size_t xp = 0; xp < a; ++xp) {
      for (std::size_t y = 0; y < b; ++y) {
        for (std::size_t yp = 0; yp < b; ++yp) {
          const Complex w = j1(idx(x * b + y), idx(xp * b + yp));
          if (w == Complex(0.0)) continue;
          for (std::size_t z = 0; z < c; ++z) {
            k.axpy(w, j2.data() + (y * c + z) * b * c + yp * c,
                   out.data() + (x * c + z) * a * c + xp * c, c);
          }
        }
      }
    }
  }
  return Channel::from_choi(std::move(out), a, c);
}

Channel tensor_channels(const Channel& first, const Channel& second) {
  const std::size_t a1 = first.dim_in(), b1 = first.dim_out();
  const std::size_t a2 = second.dim_in(), b2 = second.dim_out();
  // Q = I_A1 (x) SWAP(B1, A2) (x) I_B2 reorders A1 B1 A2 B2 -> A1 A2 B1 B2.
  const Mat q = kron(kron(identity(a1), wires::swap(b1, a2)), identity(b2));
  Mat choi = q * kron(first.choi(), second.choi()) * q.adjoint();
  return Channel::from_choi(std::move(choi), a1 * a2, b1 * b2);
}

Channel identity_channel(std::size_t d) {
  const Mat c = wires::as_column(wires::cup(d));
  return Channel::from_choi(c * c.adjoint(), d, d);
}

Channel unitary_channel(const Mat& u, const Tol& tol) {
  if (u.rows() != u.cols() || u.size() == 0) {
    throw DimensionError("unitary_channel: U must be square, got " + shape(u));
  }
  const auto d = static_cast<std::size_t>(u.rows());
  const double err = frobenius_norm(u.adjoint() * u - identity(d));
  if (err > tol.threshold(std::sqrt(static_cast<double>(d)))) {
    throw PropertyError("unitary_channel: matrix is not unitary", err);
  }
  return from_kraus(KrausSet{{u}});
}

Channel erasure_channel(const Mat& rho_out, std::size_t dim_in, const Tol& tol) {
  if (rho_out.rows() != rho_out.cols() || rho_out.size() == 0) {
    throw DimensionError("erasure_channel: rho_out must be square, got " + shape(rho_out));
  }
  const double scale = frobenius_norm(rho_out);
  const double lam = min_eigenvalue(rho_out, tol);
  if (lam < -tol.threshold(scale)) {
    throw PropertyError("erasure_channel: rho_out is not positive semidefinite", lam);
  }
  const double tr_err = std::abs(rho_out.trace() - 1.0);
  if (tr_err > tol.threshold(1.0)) {
    throw PropertyError("erasure_channel: rho_out does not have unit trace", tr_err);
  }
  return Channel::from_choi(kron(identity(dim_in), rho_out), dim_in,
                            static_cast<std::size_t>(rho_out.rows()));
}

Channel max_entropy_erasure_channel(std::size_t dim_in, std::size_t dim_out) {
  require_dims(dim_in, dim_out);
  return Channel::from_choi(identity(dim_in * dim_out) / static_cast<double>(dim_out), dim_in,
                            dim_out);
}

Channel transpose_channel(std::size_t d) { return Channel::from_choi(wires::swap(d, d), d, d); }

Channel partial_transpose_channel(std::size_t dim_c, std::size_t d) {
  return tensor_channels(identity_channel(dim_c), transpose_channel(d));
}

}  // namespace choiscope::channels
