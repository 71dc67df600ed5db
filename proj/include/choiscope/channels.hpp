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
#include <string_view>
#include <vector>

#include "choiscope/core/types.hpp"

// Linear maps End(A) -> End(B) and the channel-state duality.
//
// Conventions (all indices left-factor major):
//   vec(rho)(i, j)        = rho[j, i]                      columnwise
//   superoperator S       : S vec(rho) = vec(Omega(rho)),  dim_out^2 x dim_in^2
//   Choi matrix J         = sum_ij |i><j| (x) Omega(|i><j|) over A (x) B
//   J[(i,m),(j,n)]        = S[(n,m),(j,i)]
//   Omega(rho)[m,n]       = sum_ij rho[i,j] J[(i,m),(j,n)]
// J is unnormalized throughout: the identity channel has J = |cup><cup|.
namespace choiscope::channels {

class Channel {
 public:
  // Throws DimensionError unless choi is square with side dim_in * dim_out,
  // ArgumentError on zero dimensions or non-finite entries.
  static Channel from_choi(Mat choi, std::size_t dim_in, std::size_t dim_out);
  static Channel from_superoperator(const Mat& superop, std::size_t dim_in, std::size_t dim_out);

  std::size_t dim_in() const { return dim_in_; }
  std::size_t dim_out() const { return dim_out_; }
  const Mat& choi() const { return choi_; }
  const Mat& superoperator() const { return superop_; }

  // J / dim_in, the density-operator reading of the Choi matrix.
  Mat normalized_choi() const;

 private:
  Channel(std::size_t dim_in, std::size_t dim_out, Mat choi, Mat superop)
      : dim_in_(dim_in), dim_out_(dim_out), choi_(std::move(choi)), superop_(std::move(superop)) {}

  std::size_t dim_in_;
  std::size_t dim_out_;
  Mat choi_;
  Mat superop_;
};

// Superoperator (dim_out^2 x dim_in^2) -> Choi matrix.
Mat reshuffle(const Mat& superop, std::size_t dim_in, std::size_t dim_out);
// Choi matrix -> superoperator.
Mat unreshuffle(const Mat& choi, std::size_t dim_in, std::size_t dim_out);

struct KrausSet {
  std::vector<Mat> operators;  // each dim_out x dim_in
};

// Sum_k f_k^dagger f_k.
Mat kraus_completeness(const KrausSet& kraus);

// J = sum_k vec(f_k) vec(f_k)^dagger. Empty set -> ArgumentError, mixed
// shapes -> DimensionError.
Channel from_kraus(const KrausSet& kraus);

// Kraus operators from the spectral decomposition of J: one per eigenvalue
// above tol.rel * lambda_max + tol.abs, f_k = unvec(sqrt(w_k) psi_k), largest
// first, each rephased so its first nonzero entry (row-major) is real and
// nonnegative. Non-CPP input -> PropertyError carrying the eigenvalue.
KrausSet kraus_decompose(const Channel& channel, const Tol& tol = {});

// Omega(rho) through the superoperator.
Mat apply(const Channel& channel, const Mat& rho);
// Omega(rho) by contracting rho against the Choi matrix.
Mat apply_via_choi(const Channel& channel, const Mat& rho);
Mat apply_via_kraus(const KrausSet& kraus, const Mat& rho);

// ||J1 - J2||_F; DimensionError if the channels have different dimensions.
double choi_distance(const Channel& a, const Channel& b);

// Hilbert-Schmidt adjoint, End(B) -> End(A):
// J* = SWAP(A,B) conj(J) SWAP(B,A), equivalently S* = S^dagger.
Channel dual_channel(const Channel& channel);

// `second` after `first` (A -> B -> C).
Channel concatenate(const Channel& first, const Channel& second);

// first (x) second : End(A1 (x) A2) -> End(B1 (x) B2).
Channel tensor_channels(const Channel& first, const Channel& second);

Channel identity_channel(std::size_t d);
Channel unitary_channel(const Mat& u, const Tol& tol = {});
// J = I_A (x) rho_out; rho_out must be a density matrix.
Channel erasure_channel(const Mat& rho_out, std::size_t dim_in, const Tol& tol = {});
// J = I_AB / dim_out.
Channel max_entropy_erasure_channel(std::size_t dim_in, std::size_t dim_out);
// rho -> rho^T, J = SWAP.
Channel transpose_channel(std::size_t d);
// identity on C (x) transpose on the second factor.
Channel partial_transpose_channel(std::size_t dim_c, std::size_t d);

// ---------------------------------------------------------------------------
// Property verdicts.

struct Verdict {
  bool holds = false;
  double residual = 0.0;
  double threshold = 0.0;
};

// Product test vector: the input state is |input>, the output test vector
// |output>, and value = <conj(input) (x) output| J |conj(input) (x) output>
// = <output| Omega(|input><input|) |output>.
struct PPWitness {
  Vec input;
  Vec output;
  double value = 0.0;
};

enum class PPOutcome { kViolationFound, kNoViolationFound, kNotHermitianPreserving };

std::string_view to_string(PPOutcome outcome);

struct PPOptions {
  std::size_t restarts = 32;
  std::size_t max_iters = 200;
  Seed seed{};
  // 0 picks std::thread::hardware_concurrency(). The verdict does not
  // depend on this value.
  std::size_t threads = 0;
  // Keep the objective after every half-step of every restart.
  bool record_history = false;
};

struct PPVerdict {
  PPOutcome outcome = PPOutcome::kNoViolationFound;
  double best_value = 0.0;  // smallest objective seen over all restarts
  double threshold = 0.0;   // violation iff best_value < -threshold
  std::size_t restarts = 0;
  std::size_t best_restart = 0;
  std::optional<PPWitness> witness;  // set when a violation was found
  std::vector<std::vector<double>> history;
};

// <conj(input) (x) output| J |conj(input) (x) output>.
double pp_objective(const Channel& channel, const Vec& input, const Vec& output);

// Heuristic positivity-preservation check by see-saw minimization of
// pp_objective over unit vectors, restarted from seeded random inputs.
// Alternates output <- min eigenvector of Omega(|input><input|) and
// input <- conj(min eigenvector of N(output)),
// N[i,j] = sum_mn conj(out_m) out_n J[(i,m),(j,n)]. "No violation found" is
// evidence, not proof.
PPVerdict check_pp(const Channel& channel, const Tol& tol = {}, const PPOptions& options = {});

struct PropertyReport {
  std::size_t dim_in = 0;
  std::size_t dim_out = 0;
  Verdict hp;       // residual ||J - J^dagger||_F
  Verdict cpp;      // residual -lambda_min(J) (signed)
  Verdict tp;       // residual ||Tr_B J - I_A||_F
  Verdict unital;   // residual ||Tr_A J - I_B||_F
  double min_choi_eigenvalue = 0.0;
  PPVerdict pp;
  bool doubly_stochastic = false;
  double choi_trace = 0.0;
};

// All thresholds are tol.rel * ||J||_F + tol.abs.
PropertyReport property_report(const Channel& channel, const Tol& tol = {},
                               const PPOptions& pp_options = {});

}  // namespace choiscope::channels
