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

#ifndef SUBPLANCK_SRC_LAGUERRE_DIAGONAL_HPP
#define SUBPLANCK_SRC_LAGUERRE_DIAGONAL_HPP

#include <algorithm>
#include <cmath>

namespace subplanck::fock::detail {

// Fills out[k] = sqrt(k!/(k+d)!) mag^d exp(-mag^2/2) L_k^(d)(mag^2) for
// k < count, i.e. |<k+d|D(delta)|k>| up to phase. The three-term recurrence
// runs on a rescaled copy so that neither the prefactor nor the polynomial
// overflows or underflows on its own.
inline void laguerre_diagonal(int d, double mag, int count, double* out) {
  if (count <= 0) return;
  if (mag == 0.0) {
    for (int k = 0; k < count; ++k) out[k] = d == 0 ? 1.0 : 0.0;
    return;
  }
  const double x = mag * mag;
  double log_scale = -0.5 * x + d * std::log(mag) - 0.5 * std::lgamma(d + 1.0);
  double factor = std::exp(log_scale);
  double prev = 1.0;
  out[0] = factor;
  if (count == 1) return;
  double cur = (1.0 + d - x) / std::sqrt(1.0 + d);
  out[1] = cur * factor;
  for (int k = 1; k + 1 < count; ++k) {
    const double kp = k + 1.0;
    const double a = std::sqrt(kp / (kp + d)) / kp;
    const double b = (k + d) * std::sqrt(kp * k / ((kp + d) * (k + d))) / kp;
    const double next = (2.0 * k + 1.0 + d - x) * a * cur - b * prev;
    prev = cur;
    cur = next;
    const double big = std::max(std::abs(prev), std::abs(cur));
    if (big > 1e100 || (big < 1e-100 && big > 0.0)) {
      prev /= big;
      cur /= big;
      log_scale += std::log(big);
      factor = std::exp(log_scale);
    }
    out[k + 1] = cur * factor;
  }
}

}  // namespace subplanck::fock::detail

#endif  // SUBPLANCK_SRC_LAGUERRE_DIAGONAL_HPP
