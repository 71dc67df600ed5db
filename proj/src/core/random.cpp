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

#include "choiscope/core/random.hpp"

#include <cmath>

#include "choiscope/core/linalg.hpp"

namespace choiscope {
namespace {

void require_positive(std::size_t d, const char* what) {
  if (d == 0) throw ArgumentError(std::string(what) + ": dimension must be positive");
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(Seed seed) : seed_(seed), engine_(splitmix64(seed.value)) {}

Rng Rng::split(std::uint64_t stream) const {
  return Rng(Seed{splitmix64(seed_.value ^ splitmix64(stream + 1))});
}

double Rng::uniform() { return uniform_(engine_); }

double Rng::normal() { return normal_(engine_); }

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) * M_SQRT1_2;
}

Mat random_ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  Mat g(idx(rows), idx(cols));
  for (Eigen::Index k = 0; k < g.size(); ++k) g.data()[k] = rng.complex_normal();
  return g;
}

Mat random_unitary(std::size_t d, Rng& rng) {
  require_positive(d, "random_unitary");
  const Eigen::MatrixXcd g = random_ginibre(d, d, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < idx(d); ++k) {
    const Complex rkk = r(k, k);
    const double mag = std::abs(rkk);
    if (mag > 0.0) q.col(k) *= rkk / mag;
  }
  return q;
}

Vec random_pure_state(std::size_t d, Rng& rng) {
  require_positive(d, "random_pure_state");
  Vec v(idx(d));
  for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = rng.complex_normal();
  return v / v.norm();
}

Mat random_density(std::size_t d, Rng& rng) { return random_density(d, d, rng); }

Mat random_density(std::size_t d, std::size_t rank, Rng& rng) {
  require_positive(d, "random_density");
  if (rank == 0 || rank > d) throw ArgumentError("random_density: rank must lie in [1, d]");
  const Mat g = random_ginibre(d, rank, rng);
  Mat rho = g * g.adjoint();
  rho = hermitize(rho);
  return rho / rho.trace().real();
}

SeparableDensity random_separable_density(std::size_t dim_a, std::size_t dim_b,
                                          std::size_t terms, Rng& rng) {
  require_positive(dim_a, "random_separable_density");
  require_positive(dim_b, "random_separable_density");
  if (terms == 0) throw ArgumentError("random_separable_density: need at least one term");

  // Dirichlet(1, ..., 1) via normalized exponentials.
  std::vector<double> w(terms);
  double total = 0.0;
  for (double& x : w) {
    x = -std::log(1.0 - rng.uniform());
    total += x;
  }

  SeparableDensity out{Mat::Zero(idx(dim_a * dim_b), idx(dim_a * dim_b)), {}};
  out.terms.reserve(terms);
  for (std::size_t k = 0; k < terms; ++k) {
    SeparableTerm t{w[k] / total, random_density(dim_a, rng), random_density(dim_b, rng)};
    out.rho += t.weight * kron(t.left, t.right);
    out.terms.push_back(std::move(t));
  }
  return out;
}

Mat sample_unitary(std::size_t d, Seed seed) {
  Rng rng(seed);
  return random_unitary(d, rng);
}

BiVec sample_pure_state(std::size_t dim_a, std::size_t dim_b, Seed seed) {
  require_positive(dim_a, "sample_pure_state");
  require_positive(dim_b, "sample_pure_state");
  Rng rng(seed);
  return BiVec(dim_a, dim_b, random_pure_state(dim_a * dim_b, rng));
}

Mat sample_density(std::size_t d, Seed seed) {
  Rng rng(seed);
  return random_density(d, rng);
}

Mat sample_separable_density(std::size_t dim_a, std::size_t dim_b, std::size_t terms, Seed seed) {
  Rng rng(seed);
  return random_separable_density(dim_a, dim_b, terms, rng).rho;
}

}  // namespace choiscope
