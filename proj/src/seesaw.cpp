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

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "choiscope/channels.hpp"
#include "choiscope/core/linalg.hpp"
#include "choiscope/core/random.hpp"
#include "choiscope/kernels/kernels.hpp"

namespace choiscope::channels {

std::string_view to_string(PPOutcome outcome) {
  switch (outcome) {
    case PPOutcome::kViolationFound:
      return "violation-found";
    case PPOutcome::kNoViolationFound:
      return "no-violation-found";
    case PPOutcome::kNotHermitianPreserving:
      return "not-hermitian-preserving";
  }
  return "unknown";
}

namespace {

// Omega(|a><a|) from the Choi matrix: M[m,n] = sum_ij a_i conj(a_j) J[(i,m),(j,n)].
Mat output_operator(const Mat& choi, std::size_t a_dim, std::size_t b_dim, const Vec& a) {
  const auto& k = kernels::active();
  Mat out = Mat::Zero(idx(b_dim), idx(b_dim));
  const std::size_t row = a_dim * b_dim;
  for (std::size_t i = 0; i < a_dim; ++i) {
    for (std::size_t j = 0; j < a_dim; ++j) {
      const Complex w = a(idx(i)) * std::conj(a(idx(j)));
      for (std::size_t m = 0; m < b_dim; ++m) {
        k.axpy(w, choi.data() + (i * b_dim + m) * row + j * b_dim, out.data() + m * b_dim, b_dim);
      }
    }
  }
  return out;
}

// N[i,j] = sum_mn conj(b_m) b_n J[(i,m),(j,n)], so that q = y^dagger N y with
// y = conj(a).
Mat input_operator(const Mat& choi, std::size_t a_dim, std::size_t b_dim, const Vec& b) {
  const auto& k = kernels::active();
  Mat out(idx(a_dim), idx(a_dim));
  const std::size_t row = a_dim * b_dim;
  for (std::size_t i = 0; i < a_dim; ++i) {
    for (std::size_t j = 0; j < a_dim; ++j) {
      Complex acc = 0.0;
      for (std::size_t m = 0; m < b_dim; ++m) {
        const Complex jb = k.dotu(choi.data() + (i * b_dim + m) * row + j * b_dim, b.data(), b_dim);
        acc += std::conj(b(idx(m))) * jb;
      }
      out(idx(i), idx(j)) = acc;
    }
  }
  return out;
}

struct LowestPair {
  double value;
  Vec vector;
};

LowestPair lowest(const Mat& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(Eigen::MatrixXcd(hermitize(h)));
  if (solver.info() != Eigen::Success) {
    throw ComputationError("check_pp: eigensolver did not converge");
  }
  return {solver.eigenvalues()(0), solver.eigenvectors().col(0)};
}

struct RestartResult {
  double value = 0.0;
  Vec input;
  Vec output;
  std::vector<double> history;
};

RestartResult run_restart(const Mat& choi, std::size_t a_dim, std::size_t b_dim, double scale,
                          const PPOptions& options, std::size_t restart) {
  Rng rng = Rng(options.seed).split(restart);
  RestartResult r;
  r.input = random_pure_state(a_dim, rng);

  LowestPair b = lowest(output_operator(choi, a_dim, b_dim, r.input));
  r.output = b.vector;
  r.value = b.value;
  if (options.record_history) r.history.push_back(r.value);

  const double stall = 1e-14 * std::max(scale, 1.0);
  for (std::size_t it = 0; it < options.max_iters; ++it) {
    const double before = r.value;

    const LowestPair y = lowest(input_operator(choi, a_dim, b_dim, r.output));
    r.input = y.vector.conjugate();
    r.value = y.value;
    if (options.record_history) r.history.push_back(r.value);

    const LowestPair next = lowest(output_operator(choi, a_dim, b_dim, r.input));
    r.output = next.vector;
    r.value = next.value;
    if (options.record_history) r.history.push_back(r.value);

    if (before - r.value <= stall) break;
  }
  return r;
}

}  // namespace

double pp_objective(const Channel& channel, const Vec& input, const Vec& output) {
  if (input.size() != idx(channel.dim_in()) || output.size() != idx(channel.dim_out())) {
    throw DimensionError("pp_objective: vector lengths do not match channel dimensions");
  }
  const Vec x = kron(Mat(input.conjugate()), Mat(output));
  return (x.adjoint() * channel.choi() * x)(0, 0).real();
}

PPVerdict check_pp(const Channel& channel, const Tol& tol, const PPOptions& options) {
  const Mat& raw = channel.choi();
  const double scale = frobenius_norm(raw);
  PPVerdict verdict;
  verdict.threshold = tol.threshold(scale);
  verdict.restarts = options.restarts;

  if (hermiticity_residual(raw) > tol.threshold(scale)) {
    verdict.outcome = PPOutcome::kNotHermitianPreserving;
    return verdict;
  }
  if (options.restarts == 0) {
    throw ArgumentError("check_pp: at least one restart is required");
  }

  const Mat choi = hermitize(raw);
  const std::size_t a_dim = channel.dim_in(), b_dim = channel.dim_out();
  std::vector<RestartResult> results(options.restarts);

  std::size_t workers = options.threads != 0 ? options.threads
                                             : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, options.restarts);

  // Restart r always draws from split(r) and lands in results[r], so the
  // reduction below sees the same data for any worker count.
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t r = first; r < options.restarts; r += stride) {
      results[r] = run_restart(choi, a_dim, b_dim, scale, options, r);
    }
  };
  if (workers <= 1) {
    work(0, 1);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            work(w, workers);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::size_t best = 0;
  for (std::size_t r = 1; r < results.size(); ++r) {
    if (results[r].value < results[best].value) best = r;
  }
  verdict.best_value = results[best].value;
  verdict.best_restart = best;
  if (options.record_history) {
    for (auto& r : results) verdict.history.push_back(std::move(r.history));
  }
  if (verdict.best_value < -verdict.threshold) {
    verdict.outcome = PPOutcome::kViolationFound;
    PPWitness w{results[best].input, results[best].output, 0.0};
    w.value = pp_objective(channel, w.input, w.output);
    verdict.witness = std::move(w);
  } else {
    verdict.outcome = PPOutcome::kNoViolationFound;
  }
  return verdict;
}

PropertyReport property_report(const Channel& channel, const Tol& tol,
                               const PPOptions& pp_options) {
  const Mat& choi = channel.choi();
  const std::size_t a = channel.dim_in(), b = channel.dim_out();
  const double thr = tol.threshold(frobenius_norm(choi));
  PropertyReport r;
  r.dim_in = a;
  r.dim_out = b;

  const double herm = hermiticity_residual(choi);
  r.hp = {herm <= thr, herm, thr};

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(Eigen::MatrixXcd(hermitize(choi)),
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ComputationError("property_report: eigensolver did not converge");
  }
  r.min_choi_eigenvalue = solver.eigenvalues()(0);
  r.cpp = {r.hp.holds && r.min_choi_eigenvalue >= -thr, -r.min_choi_eigenvalue, thr};

  const std::size_t dims[] = {a, b};
  const std::size_t keep_a[] = {0};
  const std::size_t keep_b[] = {1};
  const double tp_res = frobenius_norm(partial_trace(choi, dims, keep_a) - identity(a));
  const double unital_res = frobenius_norm(partial_trace(choi, dims, keep_b) - identity(b));
  r.tp = {tp_res <= thr, tp_res, thr};
  r.unital = {unital_res <= thr, unital_res, thr};

  r.choi_trace = choi.trace().real();
  // TP forces Tr J = dim_in and unitality Tr J = dim_out; only an absurdly
  // loose tolerance lets both verdicts pass with dim_in != dim_out.
  r.doubly_stochastic = r.tp.holds && r.unital.holds && a == b;

  r.pp = check_pp(channel, tol, pp_options);
  if (r.cpp.holds && r.pp.outcome == PPOutcome::kViolationFound) {
    throw ComputationError("property_report: CPP channel reported a PP violation");
  }
  return r;
}

}  // namespace choiscope::channels
