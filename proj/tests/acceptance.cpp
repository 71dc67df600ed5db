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

// Acceptance suite: one [PASS]/[FAIL] line per criterion, nonzero exit on
// any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "choiscope/channels.hpp"
#include "choiscope/core/linalg.hpp"
#include "choiscope/core/random.hpp"
#include "choiscope/diagram.hpp"
#include "choiscope/map_state.hpp"
#include "choiscope/wires.hpp"
#include "test_util.hpp"

namespace {

using namespace choiscope;
using namespace choiscope::channels;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates checks; the first failure message is kept.
class Checker {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && out_.pass) {
      out_.pass = false;
      out_.detail = what;
    }
  }
  void track(const char* name, double value) {
    worst_.emplace_back(name, value);
  }
  void bound(const char* name, double value, double limit) {
    auto it = std::find_if(worst_.begin(), worst_.end(), [&](auto& p) { return p.first == name; });
    if (it == worst_.end()) {
      worst_.emplace_back(name, value);
    } else {
      it->second = std::max(it->second, value);
    }
    require(value <= limit, std::string(name) + " = " + fmt(value) + " > " + fmt(limit));
  }
  Outcome finish() {
    if (out_.pass) {
      for (const auto& [n, v] : worst_) {
        if (!out_.detail.empty()) out_.detail += ", ";
        out_.detail += n + "=" + fmt(v);
      }
    }
    return out_;
  }
  static std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
  }

 private:
  Outcome out_;
  std::vector<std::pair<std::string, double>> worst_;
};

PPOptions pp_default(std::uint64_t seed) { return PPOptions{32, 200, Seed{seed}, 0, false}; }

Outcome transpose_channel_report() {
  Checker c;
  for (std::size_t d = 2; d <= 4; ++d) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = property_report(transpose_channel(d), {}, pp_default(0));
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::string tag = "d=" + std::to_string(d) + ": ";
    c.require(r.hp.holds && r.tp.holds && r.unital.holds, tag + "expected HP, TP, unital");
    c.require(!r.cpp.holds, tag + "expected not CPP");
    c.require(r.pp.outcome == PPOutcome::kNoViolationFound, tag + "expected no PP violation");
    c.bound("|min_eig+1|", std::abs(r.min_choi_eigenvalue + 1.0), 1e-9);
    c.bound("seconds", secs, 1.0);
  }
  return c.finish();
}

Outcome partial_transpose_violation() {
  Checker c;
  const auto ch = partial_transpose_channel(2, 2);
  const auto r = property_report(ch, {}, pp_default(0));
  c.require(r.hp.holds && r.tp.holds && r.unital.holds, "expected HP, TP, unital");
  c.require(r.pp.outcome == PPOutcome::kViolationFound, "expected a PP violation");
  c.require(r.pp.witness.has_value(), "missing witness");
  if (r.pp.witness) {
    c.bound("witness+0.5", r.pp.witness->value + 0.5, 1e-6);
    // Recompute the witness value from scratch: <b| Omega(|a><a|) |b>.
    const Vec& a = r.pp.witness->input;
    const Vec& b = r.pp.witness->output;
    const double recomputed = (b.adjoint() * channels::apply(ch, a * a.adjoint()) * b)(0, 0).real();
    c.bound("witness_recompute", std::abs(recomputed - r.pp.witness->value), 1e-12);
  }
  return c.finish();
}

Outcome kraus_roundtrip() {
  Checker c;
  Rng root(Seed{3});
  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng rng = root.split(t);
    const std::size_t a = testing::dim_between(rng, 1, 4), b = testing::dim_between(rng, 1, 5);
    const std::size_t count = testing::dim_between(rng, 1, 4);
    const bool tp = t % 2 == 0;
    const KrausSet k =
        tp ? testing::random_tp_kraus(a, b, count, rng) : testing::random_kraus(a, b, count, rng);
    const Channel ch = from_kraus(k);
    const KrausSet dk = kraus_decompose(ch);
    c.bound("choi_distance", choi_distance(from_kraus(dk), ch), 1e-9);
    // Rank of the hermitian J through its eigenvalues, same threshold rule.
    const RealVec ev = eig_hermitian(ch.choi()).values;
    const double lmax = ev.maxCoeff();
    const Tol tol;
    const auto rank = static_cast<std::size_t>((ev.array() > tol.threshold(lmax)).count());
    c.require(dk.operators.size() == rank, "Kraus count " + std::to_string(dk.operators.size()) +
                                               " != Choi rank " + std::to_string(rank));
    c.require(rank == std::min(k.operators.size(), a * b), "unexpected Choi rank for generic Kraus set");
    if (tp) c.bound("tp_completeness", frobenius_norm(kraus_completeness(dk) - identity(a)), 1e-9);
  }
  return c.finish();
}

Outcome representation_consistency() {
  Checker c;
  Rng root(Seed{4});
  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng rng = root.split(t);
    const std::size_t a = testing::dim_between(rng, 1, 4), b = testing::dim_between(rng, 1, 4);
    const Mat rho = random_ginibre(a, a, rng);
    if (t % 2 == 0) {
      const KrausSet k = testing::random_kraus(a, b, testing::dim_between(rng, 1, 3), rng);
      const Channel ch = from_kraus(k);
      const Mat s = channels::apply(ch, rho);
      const double scale = std::max(1.0, s.cwiseAbs().maxCoeff());
      c.bound("super_vs_choi", max_abs_diff(s, apply_via_choi(ch, rho)) / scale, 1e-10);
      c.bound("super_vs_kraus", max_abs_diff(s, apply_via_kraus(k, rho)) / scale, 1e-10);
    } else {
      const Channel ch = testing::random_linear_map(a, b, rng);
      const Mat s = channels::apply(ch, rho);
      const double scale = std::max(1.0, s.cwiseAbs().maxCoeff());
      c.bound("super_vs_choi", max_abs_diff(s, apply_via_choi(ch, rho)) / scale, 1e-10);
    }
    const Mat sup = random_ginibre(b * b, a * a, rng);
    c.bound("reshuffle_roundtrip", max_abs_diff(unreshuffle(reshuffle(sup, a, b), a, b), sup), 1e-13);
    const Mat j = random_ginibre(a * b, a * b, rng);
    c.bound("reshuffle_roundtrip", max_abs_diff(reshuffle(unreshuffle(j, a, b), a, b), j), 1e-13);
  }
  return c.finish();
}

Outcome svd_schmidt() {
  Checker c;
  Rng root(Seed{5});
  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng rng = root.split(t);
    const std::size_t r = testing::dim_between(rng, 1, 8), k = testing::dim_between(rng, 1, 8);
    const Mat f = random_ginibre(r, k, rng);
    const RealVec coeffs = map_state::schmidt_decompose(wires::vec(f)).coeffs;
    const RealVec sigma = svd(f).sigma;
    c.require(coeffs.size() == sigma.size(), "Schmidt rank differs from matrix rank");
    if (coeffs.size() == sigma.size())
      c.bound("max|coeff-sigma|", (coeffs - sigma).cwiseAbs().maxCoeff(), 1e-10);
  }
  return c.finish();
}

Outcome purification() {
  Checker c;
  Rng root(Seed{6});
  for (std::uint64_t t = 0; t < 50; ++t) {
    Rng rng = root.split(t);
    const std::size_t d = testing::dim_between(rng, 1, 6);
    const std::size_t rank = testing::dim_between(rng, 1, d);
    const Mat rho = random_density(d, rank, rng);
    const std::size_t dim_a = testing::dim_between(rng, rank, 6);
    const BiVec f = map_state::purify(rho, dim_a);
    // Independent partial trace over A of |f><f|.
    const Mat col = wires::as_column(f);
    const std::size_t dims[] = {dim_a, d};
    const std::size_t keep[] = {1};
    c.bound("purify_residual", frobenius_norm(partial_trace(col * col.adjoint(), dims, keep) - rho),
            1e-10);
  }
  for (std::uint64_t t = 0; t < 50; ++t) {
    Rng rng = root.split(1000 + t);
    const std::size_t a = testing::dim_between(rng, 1, 5), b = testing::dim_between(rng, 1, 5);
    const BiVec v(a, b, random_ginibre(a * b, 1, rng).col(0));
    const Mat red = map_state::reduced_state(v);
    const RealVec ev = eig_hermitian(red).values;
    c.bound("-min_eig(reduced)", -ev.minCoeff(), 1e-12);
    const auto rank =
        static_cast<std::size_t>((ev.array() > Tol().threshold(ev.maxCoeff())).count());
    c.require(rank <= std::min(a, b), "reduced state rank exceeds min(dimA, dimB)");
  }
  return c.finish();
}

Outcome identity_suite() {
  Checker c;
  const std::size_t dims[] = {1, 2, 3, 4};
  const auto report = diagram::run_identity_suite(dims, 20, Seed{7}, Tol(0.0, 1e-12));
  for (const auto& r : report.results) {
    c.require(r.result.equivalent, r.name + " failed for d=" + std::to_string(r.d) +
                                       " e=" + std::to_string(r.e));
  }
  c.bound("max_abs_diff", report.max_abs_diff, 1e-12);
  c.track("cases", static_cast<double>(report.results.size()));
  return c.finish();
}

Outcome leg_bending() {
  Checker c;
  Rng root(Seed{8});
  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng rng = root.split(t);
    const std::size_t r = testing::dim_between(rng, 1, 6), k = testing::dim_between(rng, 1, 6);
    const Mat f = random_ginibre(r, k, rng), g = random_ginibre(r, k, rng);
    c.bound("|hs-inner|", std::abs(hs_inner(f, g) - wires::inner(wires::vec(f), wires::vec(g))),
            1e-12);
  }
  return c.finish();
}

Outcome dual_table() {
  Checker c;
  Rng root(Seed{9});
  const PPOptions pp{8, 100, Seed{9}, 0, false};
  for (std::uint64_t t = 0; t < 20; ++t) {
    Rng rng = root.split(t);
    const std::size_t a = testing::dim_between(rng, 1, 4), b = testing::dim_between(rng, 1, 4);
    const Channel tp = from_kraus(testing::random_tp_kraus(a, b, 2, rng));
    const auto dtp = property_report(dual_channel(tp), {}, pp);
    c.require(dtp.unital.holds, "dual of TP is not unital");
    c.bound("unital_margin", dtp.unital.residual, 1e-10);
    const Channel un = from_kraus(testing::random_unital_kraus(a, b, 2, rng));
    const auto dun = property_report(dual_channel(un), {}, pp);
    c.require(dun.tp.holds, "dual of unital is not TP");
    c.bound("tp_margin", dun.tp.residual, 1e-10);

    const Channel hp = testing::random_hp_channel(a, b, rng);
    const auto rhp = property_report(hp, {}, pp), rdhp = property_report(dual_channel(hp), {}, pp);
    c.require(rhp.hp.holds == rdhp.hp.holds && rhp.cpp.holds == rdhp.cpp.holds,
              "HP/CPP verdict changed under dualization");
    const auto rcpp = property_report(dual_channel(tp), {}, pp);
    c.require(rcpp.cpp.holds && rcpp.hp.holds, "dual of a CPP channel is not CPP");

    const Channel lin = testing::random_linear_map(a, b, rng);
    c.require(!property_report(dual_channel(lin), {}, pp).hp.holds,
              "dual of a non-HP map reported HP");
    c.bound("dual_dual", choi_distance(dual_channel(dual_channel(lin)), lin), 1e-12);

    const Mat u = random_unitary(a, rng);
    c.bound("dual_unitary", choi_distance(dual_channel(unitary_channel(u)), unitary_channel(u.adjoint())),
            1e-12);
  }
  return c.finish();
}

Outcome composition() {
  Checker c;
  Rng root(Seed{10});
  const PPOptions pp{4, 50, Seed{10}, 0, false};
  for (std::uint64_t t = 0; t < 20; ++t) {
    Rng rng = root.split(t);
    const std::size_t a = testing::dim_between(rng, 1, 3), b = testing::dim_between(rng, 1, 3),
                      e = testing::dim_between(rng, 1, 3);
    const Channel tp1 = from_kraus(testing::random_tp_kraus(a, b, 2, rng));
    const Channel tp2 = from_kraus(testing::random_tp_kraus(b, e, 2, rng));
    const Channel un1 = from_kraus(testing::random_unital_kraus(a, b, 2, rng));
    const Channel un2 = from_kraus(testing::random_unital_kraus(b, e, 2, rng));
    const Channel cp1 = from_kraus(testing::random_kraus(a, b, 2, rng));
    const Channel cp2 = from_kraus(testing::random_kraus(b, e, 2, rng));

    const auto tp_concat = property_report(concatenate(tp1, tp2), {}, pp);
    const auto tp_tensor = property_report(tensor_channels(tp1, tp2), {}, pp);
    c.bound("tp_residual", std::max(tp_concat.tp.residual, tp_tensor.tp.residual), 1e-9);
    const auto un_concat = property_report(concatenate(un1, un2), {}, pp);
    const auto un_tensor = property_report(tensor_channels(un1, un2), {}, pp);
    c.bound("unital_residual", std::max(un_concat.unital.residual, un_tensor.unital.residual), 1e-9);
    const auto cp_concat = property_report(concatenate(cp1, cp2), {}, pp);
    const auto cp_tensor = property_report(tensor_channels(cp1, cp2), {}, pp);
    c.bound("-min_eig", std::max(-cp_concat.min_choi_eigenvalue, -cp_tensor.min_choi_eigenvalue),
            1e-9);
    c.require(tp_concat.tp.holds && tp_tensor.tp.holds && un_concat.unital.holds &&
                  un_tensor.unital.holds && cp_concat.cpp.holds && cp_tensor.cpp.holds,
              "composition lost a property");

    const Channel l1 = testing::random_linear_map(a, b, rng), l2 = testing::random_linear_map(b, e, rng);
    const Mat prod = l2.superoperator() * l1.superoperator();
    c.bound("Q_vs_S2S1", max_abs_diff(concatenate(l1, l2).superoperator(), prod) /
                             std::max(1.0, prod.cwiseAbs().maxCoeff()),
            1e-10);
  }
  return c.finish();
}

Outcome positive_cone() {
  Checker c;
  Rng root(Seed{11});
  std::size_t certified = 0;
  for (std::uint64_t t = 0; t < 200; ++t) {
    Rng rng = root.split(t);
    const std::size_t d = testing::dim_between(rng, 1, 6);
    const Mat sigma = random_density(d, testing::dim_between(rng, 1, d), rng);
    const Mat tau = random_density(d, testing::dim_between(rng, 1, d), rng);
    c.bound("-Tr(st)", -trace(sigma * tau).real(), 1e-12);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(Eigen::MatrixXcd(sigma * tau), false);
    double lo = 0.0;
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
      lo = std::min(lo, es.eigenvalues()(k).real());
    c.bound("-min_eig(st)", -lo, 1e-9);

    const Mat g = random_ginibre(d, d, rng);
    const Mat h = g + g.adjoint();
    const auto e = eig_hermitian(h);
    if (e.values(0) < 0.0) {
      const Vec w = e.vectors.col(0);
      c.require(hs_inner(w * w.adjoint(), h).real() < 0.0,
                "negative eigenvector projector failed to certify non-membership");
      ++certified;
    }
  }
  c.require(certified > 0, "no sampled matrix had a negative eigenvalue");
  c.track("certified", static_cast<double>(certified));
  return c.finish();
}

Outcome doubly_stochastic_law() {
  Checker c;
  Rng root(Seed{12});
  const PPOptions pp{2, 10, Seed{12}, 0, false};
  std::size_t cases = 0;
  for (std::uint64_t t = 0; t < 40; ++t) {
    Rng rng = root.split(t);
    const std::size_t a = testing::dim_between(rng, 1, 4);
    std::size_t b = testing::dim_between(rng, 1, 4);
    if (b == a) b = a % 4 + 1;
    for (const Channel& ch : {from_kraus(testing::random_tp_kraus(a, b, 2, rng)),
                              from_kraus(testing::random_unital_kraus(a, b, 2, rng)),
                              testing::random_hp_channel(a, b, rng)}) {
      const auto r = property_report(ch, {}, pp);
      ++cases;
      c.require(!(r.tp.holds && r.unital.holds), "TP and unital both hold with dimA != dimB");
      c.require(!r.doubly_stochastic, "doubly stochastic with dimA != dimB");
      // Tr J cannot sit within tolerance of both dimA and dimB.
      const double thr = Tol().threshold(frobenius_norm(ch.choi()));
      c.require(!(std::abs(r.choi_trace - double(a)) <= thr && std::abs(r.choi_trace - double(b)) <= thr),
                "Tr J matches both dimA and dimB");
      if (r.tp.holds) c.bound("|TrJ-dimA|", std::abs(r.choi_trace - double(a)), 1e-9);
      if (r.unital.holds) c.bound("|TrJ-dimB|", std::abs(r.choi_trace - double(b)), 1e-9);
    }
  }
  c.track("cases", static_cast<double>(cases));
  return c.finish();
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"transpose channel d=2,3,4: HP, TP, unital, PP, not CPP, min eig -1", transpose_channel_report},
      {"partial transpose 2x2: PP violation with witness value -1/2", partial_transpose_violation},
      {"Kraus roundtrip on 100 random CPP channels", kraus_roundtrip},
      {"representation consistency: superoperator, Choi, Kraus", representation_consistency},
      {"SVD and Schmidt coefficients agree up to 8x8", svd_schmidt},
      {"purification and its converse", purification},
      {"diagram identity suite, dims 1..4, 20 samples", identity_suite},
      {"leg-bending isometry", leg_bending},
      {"dual-channel table", dual_table},
      {"concatenation and tensor product preserve TP, unital, CPP", composition},
      {"positive cone: products, self-duality, separation", positive_cone},
      {"doubly stochastic dimension law", doubly_stochastic_law},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome out;
    try {
      out = criteria[k].second();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    if (!out.pass) ++failures;
    std::printf("[%s] %2zu. %s (%s)\n", out.pass ? "PASS" : "FAIL", k + 1, criteria[k].first,
                out.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
