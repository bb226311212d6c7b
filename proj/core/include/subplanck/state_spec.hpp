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

#ifndef SUBPLANCK_STATE_SPEC_HPP
#define SUBPLANCK_STATE_SPEC_HPP

#include <optional>
#include <string>
#include <string_view>

#include "subplanck/types.hpp"

namespace subplanck {

enum class Family { coherent, compass, svs, pasvs, pssvs, spasvs, spssvs, mix_pa, mix_ps };

/// origin: divide by |W(0)| (Wigner) or O(0) (overlap).
/// physical: density per dx dp of the trace-normalized state.
enum class Normalization { origin, physical };

std::string_view to_string(Family family);
std::string_view to_string(Normalization normalization);
std::string_view to_string(Branch branch);
Family family_from_string(std::string_view name);
Normalization normalization_from_string(std::string_view name);
Branch branch_from_string(std::string_view name);

bool uses_photons(Family family);      // n present
bool uses_squeezing(Family family);    // r present
bool uses_branch(Family family);       // svs, pasvs, pssvs
bool uses_weights(Family family);      // superpositions and mixtures
bool uses_x0(Family family);           // coherent, compass
bool is_mixture(Family family);
/// added for pasvs/spasvs/mix_pa, subtracted for the rest; only meaningful
/// when uses_photons().
Kind kind_of(Family family);

struct StateSpec {
  Family family = Family::coherent;
  std::optional<int> n;
  std::optional<double> r;
  std::optional<Branch> branch;
  std::optional<Complex> c1;
  std::optional<Complex> c2;
  std::optional<double> x0;
  Normalization normalization = Normalization::origin;

  static StateSpec coherent(double x0);
  static StateSpec compass(double x0);
  static StateSpec svs(double r, Branch branch = Branch::plus);
  static StateSpec single(Family family, int n, double r, Branch branch = Branch::plus);
  /// Superposition or mixture; c2 defaults to sqrt(1 - |c1|^2).
  static StateSpec pair(Family family, int n, double r, Complex c1, std::optional<Complex> c2 = std::nullopt);

  /// Throws invalid_argument when a field is missing, present for the wrong
  /// family, or out of range.
  void validate() const;

  StateSpec with_normalization(Normalization norm) const;
  std::string describe() const;
};

}  // namespace subplanck

#endif  // SUBPLANCK_STATE_SPEC_HPP
