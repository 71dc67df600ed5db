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

#include <string>

#include "choiscope/core/linalg.hpp"
#include "choiscope/core/random.hpp"
#include "choiscope/diagram.hpp"

namespace choiscope::diagram {
namespace {

std::string s(std::size_t n) { return std::to_string(n); }

}  // namespace

std::vector<IdentityCase> wire_identities(std::size_t d, std::size_t e, Rng& rng) {
  const std::string D = s(d), E = s(e);
  std::vector<IdentityCase> cases;

  cases.push_back({"snake", "(cup(" + D + ")*id(" + D + "));(id(" + D + ")*cap(" + D + "))",
                   "id(" + D + ")", {}});
  cases.push_back({"snake_mirrored", "(id(" + D + ")*cup(" + D + "));(cap(" + D + ")*id(" + D + "))",
                   "id(" + D + ")", {}});
  cases.push_back({"swap_involution", "swap(" + D + "," + E + ");swap(" + E + "," + D + ")",
                   "id(" + D + ")*id(" + E + ")", {}});
  cases.push_back({"cup_symmetry", "cup(" + D + ");swap(" + D + "," + D + ")", "cup(" + D + ")", {}});
  cases.push_back({"cap_symmetry", "swap(" + D + "," + D + ");cap(" + D + ")", "cap(" + D + ")", {}});
  cases.push_back({"cup_crossing",
                   "(cup(" + D + ")*id(" + E + "));(id(" + D + ")*swap(" + D + "," + E + "))",
                   "(id(" + E + ")*cup(" + D + "));(swap(" + E + "," + D + ")*id(" + D + "))", {}});

  {
    // f : [d] -> [e] slides around a cup (or cap) as its transpose.
    const Mat f = random_ginibre(e, d, rng);
    IdentityCase cup_slide{"slide_cup", "cup(" + D + ");(id(" + D + ")*f)",
                           "cup(" + E + ");(fT*id(" + E + "))", {}};
    cup_slide.env.bind("f", f);
    cup_slide.env.bind("fT", f.transpose());
    IdentityCase cap_slide{"slide_cap", "(f*id(" + E + "));cap(" + E + ")",
                           "(id(" + D + ")*fT);cap(" + D + ")", {}};
    cap_slide.env.bind("f", f);
    cap_slide.env.bind("fT", f.transpose());
    cases.push_back(std::move(cup_slide));
    cases.push_back(std::move(cap_slide));
  }
  {
    // Looping the second output of g : [d,e] -> [d,e] back to its input.
    const Mat g = random_ginibre(d * e, d * e, rng);
    const std::size_t dims[] = {d, e};
    const std::size_t keep[] = {0};
    IdentityCase loop{"partial_trace_loop",
                      "(id(" + D + ")*cup(" + E + "));(g*id(" + E + "));(id(" + D + ")*cap(" + E + "))",
                      "ptg", {}};
    loop.env.bind("g", g, {d, e}, {d, e});
    loop.env.bind("ptg", partial_trace(g, dims, keep), {d}, {d});
    cases.push_back(std::move(loop));
  }
  {
    const Mat h = random_ginibre(d, d, rng);
    Mat tr(1, 1);
    tr(0, 0) = h.trace();
    IdentityCase loop{"trace_loop", "cup(" + D + ");(h*id(" + D + "));cap(" + D + ")", "trh", {}};
    loop.env.bind("h", h);
    loop.env.bind("trh", tr, {}, {});
    cases.push_back(std::move(loop));
  }
  {
    // Bending the bra <psi| around a cup yields the conjugate state.
    const Vec psi = random_pure_state(d, rng);
    const Mat bra = Mat(psi).adjoint();
    const Mat conj_ket = Mat(psi.conjugate());
    IdentityCase left{"conjugate_state", "cup(" + D + ");(psidag*id(" + D + "))", "psibar", {}};
    left.env.bind("psidag", bra, {d}, {});
    left.env.bind("psibar", conj_ket, {}, {d});
    IdentityCase right{"conjugate_state_mirrored", "cup(" + D + ");(id(" + D + ")*psidag)",
                       "psibar", {}};
    right.env.bind("psidag", bra, {d}, {});
    right.env.bind("psibar", conj_ket, {}, {d});
    cases.push_back(std::move(left));
    cases.push_back(std::move(right));
  }
  return cases;
}

IdentitySuiteReport run_identity_suite(std::span<const std::size_t> dims, std::size_t samples,
                                       Seed seed, const Tol& tol) {
  IdentitySuiteReport report;
  const Rng root(seed);
  std::uint64_t stream = 0;
  for (std::size_t d : dims) {
    for (std::size_t e : dims) {
      for (std::size_t sample = 0; sample < samples; ++sample) {
        Rng rng = root.split(stream++);
        for (const IdentityCase& c : wire_identities(d, e, rng)) {
          IdentityResult r{c.name, d, e, sample, equivalent(c.lhs, c.rhs, c.env, tol)};
          report.all_equivalent = report.all_equivalent && r.result.equivalent;
          report.max_abs_diff = std::max(report.max_abs_diff, r.result.max_abs_diff);
          report.results.push_back(std::move(r));
        }
      }
    }
  }
  return report;
}

}  // namespace choiscope::diagram
