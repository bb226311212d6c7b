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

#ifndef SUBPLANCK_ORACLE_STATE_HPP
#define SUBPLANCK_ORACLE_STATE_HPP

#include <memory>

#include "subplanck/fock.hpp"
#include "subplanck/state_spec.hpp"

namespace subplanck::fock {

/// A StateSpec realized in the number basis: one normalized pure state, or
/// a weighted ensemble of them for the mixture families.
struct OracleState {
  Ensemble ensemble;
  int cutoff = 0;
  std::shared_ptr<const DiagonalDensity> diagonal;  // density of the ensemble

  bool pure() const { return ensemble.members.size() == 1; }
  const FockVector& state() const { return ensemble.members.front().state; }

  /// tr[rho Delta(alpha)] / pi.
  double wigner(Complex alpha) const;
  /// tr{rho D(delta) rho D^dag(delta)}.
  double overlap(Complex delta) const;
  double mean_photon() const;
};

OracleState oracle_state(const StateSpec& spec, const CutoffPolicy* policy = nullptr);

}  // namespace subplanck::fock

#endif  // SUBPLANCK_ORACLE_STATE_HPP
