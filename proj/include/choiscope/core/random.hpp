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
#include <cstdint>
#include <random>
#include <vector>

#include "choiscope/core/types.hpp"

namespace choiscope {

// Deterministic, splittable random source.
//
// The stream is std::mt19937_64 seeded with a SplitMix64 scramble of the
// seed. split(k) derives an independent child whose seed is
// splitmix64(seed ^ splitmix64(k + 1)), so work fanned out over k (restarts,
// samples, threads) never depends on the order in which children are drawn.
// Same seed => bit-identical sequence.
class Rng {
 public:
  explicit Rng(Seed seed);

  Seed seed() const { return seed_; }
  Rng split(std::uint64_t stream) const;

  double uniform();
  double normal();
  Complex complex_normal();  // real and imaginary parts i.i.d. N(0, 1/2)

 private:
  Seed seed_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

std::uint64_t splitmix64(std::uint64_t x);

// Ginibre matrix with i.i.d. complex_normal entries.
Mat random_ginibre(std::size_t rows, std::size_t cols, Rng& rng);

// Haar unitary: QR of a Ginibre matrix, columns rephased by R_kk / |R_kk|.
Mat random_unitary(std::size_t d, Rng& rng);

// Haar-random unit vector.
Vec random_pure_state(std::size_t d, Rng& rng);

// G G^dagger / Tr(G G^dagger) for a d x d Ginibre G (Hilbert-Schmidt measure).
Mat random_density(std::size_t d, Rng& rng);

// Density of rank `rank` (<= d).
Mat random_density(std::size_t d, std::size_t rank, Rng& rng);

struct SeparableTerm {
  double weight;
  Mat left;   // density on A
  Mat right;  // density on B
};

struct SeparableDensity {
  Mat rho;  // sum_k weight_k left_k (x) right_k
  std::vector<SeparableTerm> terms;
};

// Convex combination of `terms` product densities with Dirichlet(1,...,1)
// weights.
SeparableDensity random_separable_density(std::size_t dim_a, std::size_t dim_b,
                                          std::size_t terms, Rng& rng);

// Seed-taking front ends.
Mat sample_unitary(std::size_t d, Seed seed);
BiVec sample_pure_state(std::size_t dim_a, std::size_t dim_b, Seed seed);
Mat sample_density(std::size_t d, Seed seed);
Mat sample_separable_density(std::size_t dim_a, std::size_t dim_b, std::size_t terms, Seed seed);

}  // namespace choiscope
