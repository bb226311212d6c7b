// Copyright 2026 The subplanck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "subplanck/oracle_state.hpp"

#include <algorithm>

#include "subplanck/error.hpp"

namespace subplanck::fock {
namespace {

FockVector branch_state(Kind kind, int n, double r, Branch branch, const CutoffPolicy& policy) {
  return kind == Kind::added ? photon_added_squeezed(n, r, branch, policy)
                             : photon_subtracted_squeezed(n, r, branch, policy);
}

}  // namespace

double OracleState::wigner(Complex alpha) const {
  return diagonal->wigner(alpha);
}

double OracleState::overlap(Complex delta) const {
  if (pure()) return std::norm(diagonal->displacement_trace(delta));
  return overlap_displaced(ensemble, delta);
}

double OracleState::mean_photon() const {
  double total = 0.0;
  double weight = 0.0;
  for (const auto& m : ensemble.members) {
    total += m.weight * fock::mean_photon(m.state);
    weight += m.weight;
  }
  return total / weight;
}

OracleState oracle_state(const StateSpec& spec, const CutoffPolicy* policy_in) {
  spec.validate();
  const CutoffPolicy policy = policy_in ? *policy_in : CutoffPolicy::for_photons(spec.n.value_or(0));
  OracleState out;
  auto add = [&](double weight, const FockVector& v) {
    out.ensemble.members.push_back({weight, v.normalized()});
    out.cutoff = std::max(out.cutoff, v.cutoff());
  };
  switch (spec.family) {
    case Family::coherent:
      add(1.0, coherent_state(alpha_from_quadratures(*spec.x0, 0.0), policy));
      break;
    case Family::compass:
      add(1.0, compass_state(*spec.x0, policy));
      break;
    case Family::svs:
      add(1.0, squeezed_vacuum(*spec.r, *spec.branch, policy));
      break;
    case Family::pasvs:
    case Family::pssvs:
      add(1.0, branch_state(kind_of(spec.family), *spec.n, *spec.r, *spec.branch, policy));
      break;
    case Family::spasvs:
    case Family::spssvs: {
      const Kind kind = kind_of(spec.family);
      const FockVector plus = branch_state(kind, *spec.n, *spec.r, Branch::plus, policy).normalized();
      const FockVector minus = branch_state(kind, *spec.n, *spec.r, Branch::minus, policy).normalized();
      add(1.0, superpose(*spec.c1, plus, *spec.c2, minus));
      break;
    }
    case Family::mix_pa:
    case Family::mix_ps: {
      const Kind kind = kind_of(spec.family);
      const double w1 = std::norm(*spec.c1);
      const double w2 = std::norm(*spec.c2);
      if (w1 > 0.0) add(w1, branch_state(kind, *spec.n, *spec.r, Branch::plus, policy));
      if (w2 > 0.0) add(w2, branch_state(kind, *spec.n, *spec.r, Branch::minus, policy));
      break;
    }
  }
  out.diagonal = std::make_shared<const DiagonalDensity>(out.ensemble.density());
  return out;
}

}  // namespace subplanck::fock
