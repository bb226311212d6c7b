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

#include <algorithm>
#include <cmath>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "subplanck/error.hpp"
#include "subplanck/fock.hpp"
#include "laguerre_diagonal.hpp"

namespace subplanck::fock {

OperatorMatrix annihilation_operator(int cutoff) {
  require(cutoff >= 1, "annihilation_operator: cutoff must be positive");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(cutoff, cutoff);
  for (int k = 1; k < cutoff; ++k) m(k - 1, k) = std::sqrt(static_cast<double>(k));
  return {std::move(m), "a"};
}

OperatorMatrix creation_operator(int cutoff) {
  OperatorMatrix a = annihilation_operator(cutoff);
  return {a.entries.adjoint(), "a_dag"};
}

OperatorMatrix parity_operator(int cutoff) {
  require(cutoff >= 1, "parity_operator: cutoff must be positive");
  Eigen::VectorXcd d(cutoff);
  for (int k = 0; k < cutoff; ++k) d[k] = (k % 2 == 0) ? 1.0 : -1.0;
  return {d.asDiagonal(), "parity"};
}

OperatorMatrix displacement_operator(Complex delta, int cutoff) {
  const Eigen::MatrixXcd a = annihilation_operator(cutoff).entries;
  const Eigen::MatrixXcd gen = delta * a.adjoint() - std::conj(delta) * a;
  return {gen.exp(), "D"};
}

OperatorMatrix squeeze_operator(double r, Branch branch, int cutoff) {
  const Eigen::MatrixXcd a = annihilation_operator(cutoff).entries;
  const Eigen::MatrixXcd gen = (sign(branch) * r / 2.0) * (a.adjoint() * a.adjoint() - a * a);
  return {gen.exp(), "S"};
}

OperatorMatrix displaced_parity_operator(Complex alpha, int cutoff) {
  const Eigen::MatrixXcd d = displacement_operator(alpha, cutoff).entries;
  const Eigen::MatrixXcd p = parity_operator(cutoff).entries;
  return {2.0 * d * p * d.adjoint(), "displaced_parity"};
}

Eigen::MatrixXcd displacement_elements(Complex delta, int cutoff) {
  require(cutoff >= 1, "displacement_elements: cutoff must be positive");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(cutoff, cutoff);
  const double mag = std::abs(delta);
  const Complex unit = mag > 0.0 ? delta / mag : Complex(1.0, 0.0);
  Complex phase(1.0, 0.0);
  std::vector<double> g(cutoff);
  for (int d = 0; d < cutoff; ++d) {
    const int count = cutoff - d;
    detail::laguerre_diagonal(d, mag, count, g.data());
    const Complex below = phase;                                     // <n+d|D|n>
    const Complex above = ((d % 2 == 0) ? 1.0 : -1.0) * std::conj(phase);  // <n|D|n+d>
    for (int n = 0; n < count; ++n) {
      m(n + d, n) = g[n] * below;
      if (d > 0) m(n, n + d) = g[n] * above;
    }
    phase *= unit;
  }
  return m;
}

Complex displacement_expectation(const FockVector& bra, const FockVector& ket, Complex delta) {
  const int cutoff = std::max(bra.cutoff(), ket.cutoff());
  const Eigen::VectorXcd b = bra.padded(cutoff).amplitudes();
  const Eigen::VectorXcd k = ket.padded(cutoff).amplitudes();
  const double mag = std::abs(delta);
  const Complex unit = mag > 0.0 ? delta / mag : Complex(1.0, 0.0);
  Complex phase(1.0, 0.0);
  std::vector<double> g(cutoff);
  Complex total(0.0, 0.0);
  for (int d = 0; d < cutoff; ++d) {
    const int count = cutoff - d;
    detail::laguerre_diagonal(d, mag, count, g.data());
    Complex lower(0.0, 0.0);
    Complex upper(0.0, 0.0);
    for (int n = 0; n < count; ++n) {
      lower += g[n] * std::conj(b[n + d]) * k[n];
      if (d > 0) upper += g[n] * std::conj(b[n]) * k[n + d];
    }
    total += phase * lower;
    if (d > 0) total += ((d % 2 == 0) ? 1.0 : -1.0) * std::conj(phase) * upper;
    phase *= unit;
  }
  return total;
}

}  // namespace subplanck::fock
