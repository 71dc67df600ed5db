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

#include <gtest/gtest.h>

#include "choiscope/core/linalg.hpp"
#include "choiscope/core/random.hpp"
#include "choiscope/map_state.hpp"
#include "choiscope/wires.hpp"
#include "test_util.hpp"

namespace choiscope {
namespace {

using testing::basis;
using testing::from_rows;

TEST(Schmidt, Examples) {
  const auto bell = map_state::schmidt_decompose(wires::bell_state(2));
  ASSERT_EQ(bell.rank(), 2u);
  EXPECT_NEAR(bell.coeffs(0), M_SQRT1_2, 1e-15);
  EXPECT_NEAR(bell.coeffs(1), M_SQRT1_2, 1e-15);

  const BiVec product(2, 2, kron(Mat(basis(2, 0)), Mat(basis(2, 1))).col(0));
  const auto p = map_state::schmidt_decompose(product);
  ASSERT_EQ(p.rank(), 1u);
  EXPECT_NEAR(p.coeffs(0), 1.0, 1e-15);

  EXPECT_THROW(map_state::schmidt_decompose(BiVec(2, 2, Vec::Zero(4))), ArgumentError);
}

TEST(Schmidt, CoefficientsAreSingularValuesAndReconstruct) {
  Rng rng(Seed{40});
  for (int t = 0; t < 40; ++t) {
    const std::size_t r = testing::dim_between(rng, 1, 8), c = testing::dim_between(rng, 1, 8);
    const Mat f = random_ginibre(r, c, rng);
    const BiVec v = wires::vec(f);
    const auto s = map_state::schmidt_decompose(v);
    const RealVec sigma = svd(f).sigma;
    ASSERT_EQ(s.coeffs.size(), sigma.size());
    for (Eigen::Index k = 0; k < sigma.size(); ++k) EXPECT_NEAR(s.coeffs(k), sigma(k), 1e-10);
    EXPECT_NEAR(s.coeffs.squaredNorm(), v.norm() * v.norm(), 1e-10);
    EXPECT_LE((s.reconstruct().entries() - v.entries()).norm(), Tol().threshold(v.norm()));
    EXPECT_LE(frobenius_norm(s.left.adjoint() * s.left - identity(s.rank())), 1e-12);
    EXPECT_LE(frobenius_norm(s.right.adjoint() * s.right - identity(s.rank())), 1e-12);
  }
}

TEST(Schmidt, RankMatchesMatrixRank) {
  Rng rng(Seed{41});
  const Mat f = random_ginibre(5, 2, rng) * random_ginibre(2, 4, rng);
  EXPECT_EQ(map_state::schmidt_decompose(wires::vec(f)).rank(), 2u);
  EXPECT_EQ(numeric_rank(svd(f).sigma), 2u);
}

TEST(Purify, Examples) {
  const Mat rho = from_rows({{0.3, 0}, {0, 0.7}});
  const BiVec f = map_state::purify(rho, 2);
  EXPECT_LE(max_abs_diff(map_state::reduced_state(f), rho), 1e-15);

  const Mat pure = from_rows({{1, 0}, {0, 0}});
  const BiVec g = map_state::purify(pure, 1);
  EXPECT_EQ(g.dim_a(), 1u);
  EXPECT_NEAR(g.norm(), 1.0, 1e-15);
  EXPECT_EQ(map_state::schmidt_decompose(g).rank(), 1u);

  const Mat r3 = sample_density(3, Seed{3});
  EXPECT_LE(max_abs_diff(map_state::reduced_state(map_state::purify(r3, 3)), r3), 1e-10);
}

TEST(Purify, ReducedStateOracleIsPartialTrace) {
  Rng rng(Seed{42});
  const Mat rho = random_density(3, rng);
  const BiVec v = map_state::purify(rho, 4);
  const Mat col = wires::as_column(v);
  const std::size_t dims[] = {4, 3};
  const std::size_t keep[] = {1};
  EXPECT_LE(max_abs_diff(partial_trace(col * col.adjoint(), dims, keep), rho), 1e-12);
  // f f^dagger = rho for the underlying operator.
  const Mat f = wires::unvec(v);
  EXPECT_LE(max_abs_diff(f * f.adjoint(), rho), 1e-12);
}

TEST(Purify, GaugeFamily) {
  Rng rng(Seed{43});
  const Mat rho = random_density(3, rng);
  const Mat v = random_unitary(3, rng);
  const BiVec f = map_state::purify(rho, 3, {}, v);
  EXPECT_LE(max_abs_diff(map_state::reduced_state(f), rho), 1e-12);
  EXPECT_GT((f.entries() - map_state::purify(rho, 3).entries()).norm(), 1e-6);
}

TEST(Purify, Errors) {
  EXPECT_THROW(map_state::purify(from_rows({{1, 0}, {0, -0.5}}), 2), PropertyError);
  const Mat rho = sample_density(3, Seed{44});
  try {
    map_state::purify(rho, 2);
    FAIL() << "expected ArgumentError";
  } catch (const ArgumentError& e) {
    EXPECT_NE(std::string(e.what()).find('3'), std::string::npos);
  }
}

TEST(Purify, ConverseReducedStatesArePsdWithBoundedRank) {
  Rng rng(Seed{45});
  for (int t = 0; t < 30; ++t) {
    const std::size_t a = testing::dim_between(rng, 1, 4), b = testing::dim_between(rng, 1, 4);
    const BiVec v(a, b, random_ginibre(a * b, 1, rng).col(0));
    const Mat red = map_state::reduced_state(v);
    EXPECT_GE(min_eigenvalue(red), -1e-12);
    EXPECT_LE(numeric_rank(eig_hermitian(red).values.cwiseAbs()), std::min(a, b));
  }
}

TEST(Spectral, PauliX) {
  const Mat x = from_rows({{0, 1}, {1, 0}});
  const auto terms = map_state::spectral_state_decomposition(x);
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_NEAR(terms[0].eigenvalue.real(), -1.0, 1e-15);
  EXPECT_EQ(terms[0].eigenvalue.imag(), 0.0);
  EXPECT_NEAR(terms[1].eigenvalue.real(), 1.0, 1e-15);
  Vec expected(4);
  expected << 0, 1, 1, 0;
  EXPECT_LE((map_state::reconstruct(terms).entries() - expected).norm(), 1e-15);
}

TEST(Spectral, IdentityAndDiagonal) {
  const auto id = map_state::spectral_state_decomposition(identity(3));
  for (const auto& t : id) EXPECT_EQ(t.eigenvalue, Complex(1.0));
  EXPECT_LE((map_state::reconstruct(id).entries() - wires::cup(3).entries()).norm(), 1e-15);

  const auto dg = map_state::spectral_state_decomposition(from_rows({{2, 0}, {0, 5}}));
  EXPECT_EQ(dg[0].eigenvalue, Complex(2.0));
  EXPECT_EQ(dg[1].eigenvalue, Complex(5.0));
  EXPECT_NEAR(std::abs(dg[0].vector(0)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(dg[1].vector(1)), 1.0, 1e-15);
}

TEST(Spectral, NormalNonHermitianReconstructs) {
  Rng rng(Seed{46});
  const Mat u = random_unitary(4, rng);
  const auto terms = map_state::spectral_state_decomposition(u);
  EXPECT_LE((map_state::reconstruct(terms).entries() - wires::vec(u).entries()).norm(), 1e-12);
  for (const auto& t : terms) EXPECT_NEAR(std::abs(t.eigenvalue), 1.0, 1e-12);
}

TEST(Spectral, PsdHasNonnegativeSpectrum) {
  const Mat rho = sample_density(4, Seed{47});
  for (const auto& t : map_state::spectral_state_decomposition(rho)) {
    EXPECT_EQ(t.eigenvalue.imag(), 0.0);
    EXPECT_GE(t.eigenvalue.real(), -1e-12);
  }
}

TEST(Spectral, NonNormalIsPropertyError) {
  EXPECT_THROW(map_state::spectral_state_decomposition(from_rows({{1, 1}, {0, 1}})), PropertyError);
}

TEST(Classify, Identity) {
  const auto r = map_state::classify_operator_state(identity(2));
  ASSERT_TRUE(r.is_unitary.has_value());
  EXPECT_TRUE(r.is_unitary->holds);
  EXPECT_TRUE(r.is_hermitian->holds);
  EXPECT_TRUE(r.is_symmetric->holds);
  EXPECT_FALSE(r.is_antisymmetric->holds);
  EXPECT_TRUE(r.is_real.holds);
  EXPECT_TRUE(r.is_diagonal.holds);
  EXPECT_EQ(r.schmidt_rank, 2u);
  EXPECT_TRUE(r.is_full_rank);
  EXPECT_EQ(*r.trace, Complex(2.0));
}

TEST(Classify, RandomHermitian) {
  Rng rng(Seed{48});
  const Mat g = random_ginibre(3, 3, rng);
  const Mat h = g + g.adjoint();
  const auto r = map_state::classify_operator_state(h);
  EXPECT_TRUE(r.is_hermitian->holds);
  EXPECT_FALSE(r.is_real.holds);
  EXPECT_FALSE(r.is_unitary->holds);
  // State-side oracle: SWAP vec(h) = conj(vec(h)).
  const Vec sv = wires::swap(3, 3) * wires::vec(h).entries();
  EXPECT_LE((sv - wires::vec(h).entries().conjugate()).norm(), 1e-14);
}

TEST(Classify, RankOneIsFactorizable) {
  Rng rng(Seed{49});
  const Vec x = random_pure_state(3, rng), y = random_pure_state(4, rng);
  const auto r = map_state::classify_operator_state(x * y.adjoint());
  EXPECT_TRUE(r.is_factorizable);
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.schmidt_rank, 1u);
  EXPECT_FALSE(r.is_hermitian.has_value());
  EXPECT_FALSE(r.trace.has_value());
}

TEST(Classify, AntisymmetricAndUnitary) {
  const auto a = map_state::classify_operator_state(from_rows({{0, 1}, {-1, 0}}));
  EXPECT_TRUE(a.is_antisymmetric->holds);
  EXPECT_FALSE(a.is_symmetric->holds);
  EXPECT_TRUE(a.is_unitary->holds);
  EXPECT_TRUE(a.is_real.holds);
  EXPECT_FALSE(a.is_diagonal.holds);

  const auto u = map_state::classify_operator_state(sample_unitary(4, Seed{50}));
  EXPECT_TRUE(u.is_unitary->holds);
  const auto s = map_state::classify_operator_state(2.0 * identity(2));
  EXPECT_FALSE(s.is_unitary->holds);
  EXPECT_NEAR(s.is_unitary->residual, s.is_unitary->dual_residual, 1e-12);
}

}  // namespace
}  // namespace choiscope
