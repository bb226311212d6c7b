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

#ifndef SUBPLANCK_TYPES_HPP
#define SUBPLANCK_TYPES_HPP

#include <complex>
#include <numbers>

namespace subplanck {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSqrt2 = std::numbers::sqrt2;

/// Sign of the squeeze parameter: S(+r) or S(-r).
enum class Branch { plus, minus };

constexpr int sign(Branch b) { return b == Branch::plus ? 1 : -1; }

/// Photon addition (a^dagger^n) or subtraction (a^n).
enum class Kind { added, subtracted };

/// Phase-space point from quadratures, alpha = (x + i p) / sqrt(2).
inline Complex alpha_from_quadratures(double x, double p) { return Complex(x, p) / kSqrt2; }

}  // namespace subplanck

#endif  // SUBPLANCK_TYPES_HPP
