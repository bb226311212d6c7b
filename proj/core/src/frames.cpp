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

#include <cmath>

#include "subplanck/closedform.hpp"
#include "subplanck/error.hpp"

namespace subplanck::closedform {

SqueezeFrame::SqueezeFrame(double r_in) : r(r_in) {
  require(std::isfinite(r) && r >= 0.0, "SqueezeFrame: r must be finite and nonnegative");
  cosh_r = std::cosh(r);
  sinh_r = std::sinh(r);
  tanh_r = std::tanh(r);
  coth_r = 1.0 / tanh_r;  // +inf at r = 0
  sinh_2r = std::sinh(2.0 * r);
  cosh_2r = std::cosh(2.0 * r);
  tanh_2r = std::tanh(2.0 * r);
  sech_2r = 1.0 / cosh_2r;
  Omega = std::sqrt(tanh_2r) / sinh_r;
  omega = std::sqrt(tanh_2r) / cosh_r;
}

PhasePointMap::PhasePointMap(Complex a, const SqueezeFrame& f) : alpha(a) {
  const Complex ac = std::conj(a);
  alpha_bar_plus = a * f.cosh_r - ac * f.sinh_r;
  alpha_bar_minus = a * f.cosh_r + ac * f.sinh_r;
  alpha_plus = ac * f.sinh_r + a * f.cosh_r;
  alpha_minus = ac * f.sinh_r - a * f.cosh_r;
  const double re_sq = 2.0 * (a * a).real();  // alpha^2 + alpha^*2
  const double mod_sq = std::norm(a);
  chi_plus = f.sinh_2r * re_sq - 2.0 * mod_sq * f.cosh_2r;
  chi_minus = -f.sinh_2r * re_sq - 2.0 * mod_sq * f.cosh_2r;
  xi = -f.tanh_2r * (a * a - ac * ac) - 2.0 * mod_sq * f.sech_2r;
}

DisplacementFrame::DisplacementFrame(Complex d, const SqueezeFrame& f) : delta_alpha(d) {
  const Complex dc = std::conj(d);
  const Complex i(0.0, 1.0);
  eta_plus = d * f.cosh_r - dc * f.sinh_r;
  eta_minus = d * f.cosh_r + dc * f.sinh_r;
  // sqrt(-k/2) = i sqrt(k/2) for k > 0
  Theta_plus = i * std::sqrt(f.coth_r / 2.0) * eta_plus;
  Theta_minus = -std::sqrt(f.coth_r / 2.0) * eta_minus;
  theta_plus = i * std::sqrt(f.tanh_r / 2.0) * eta_plus;
  theta_minus = -std::sqrt(f.tanh_r / 2.0) * eta_minus;
}

}  // namespace subplanck::closedform
