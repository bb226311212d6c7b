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
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "subplanck/error.hpp"
#include "subplanck/fock.hpp"

namespace subplanck::fock {
namespace {

constexpr double kDefaultTail = 1e-12;

double sqrt_factorial_ratio(int k, int n) {
  // sqrt((k + n)! / k!)
  return std::exp(0.5 * (std::lgamma(k + n + 1.0) - std::lgamma(k + 1.0)));
}

[[noreturn]] void exhausted(const std::string& what, const CutoffPolicy& policy) {
  fail(ErrorKind::cutoff_exhausted,
       what + ": tail above " + std::to_string(policy.tail_tolerance) + " at max cutoff " +
           std::to_string(policy.max_cutoff));
}

// Runs `build(cutoff)` on growing cutoffs until the tail converges.
template <typename Build>
FockVector converge(const std::string& what, const CutoffPolicy& policy, Build build) {
  policy.validate();
  for (int cutoff = policy.initial; cutoff > 0; cutoff = policy.grow(cutoff)) {
    FockVector v = build(cutoff);
    if (v.is_zero() || v.tail_mass() < policy.tail_tolerance) return v.with_converged(true);
  }
  exhausted(what, policy);
}

}  // namespace

CutoffPolicy CutoffPolicy::for_photons(int n) {
  CutoffPolicy p;
  p.initial = std::max(64, 4 * n + 32);
  return p;
}

CutoffPolicy CutoffPolicy::for_pointwise(int n) {
  CutoffPolicy p = for_photons(n);
  p.tail_tolerance = kPointwiseTail;
  return p;
}

void CutoffPolicy::validate() const {
  require(initial >= 8, "cutoff policy: initial must be >= 8");
  require(max_cutoff >= initial, "cutoff policy: max_cutoff must be >= initial");
  require(growth_factor > 1.0, "cutoff policy: growth_factor must exceed 1");
  require(tail_tolerance > 0.0, "cutoff policy: tail_tolerance must be positive");
}

int CutoffPolicy::grow(int current) const {
  if (current >= max_cutoff) return 0;
  const int next = static_cast<int>(std::ceil(current * growth_factor));
  return std::min(std::max(next, current + 1), max_cutoff);
}

// --- FockVector -----------------------------------------------------------------

FockVector::FockVector(Eigen::VectorXcd amplitudes, bool converged)
    : amplitudes_(std::move(amplitudes)), norm_sq_(amplitudes_.squaredNorm()), converged_(converged) {
  require(amplitudes_.size() > 0, "FockVector: cutoff must be positive");
}

FockVector FockVector::basis(int k, int cutoff, double scale) {
  require(k >= 0 && k < cutoff, "FockVector::basis: level outside cutoff");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(cutoff);
  v[k] = std::sqrt(scale);
  return FockVector(std::move(v), true);
}

double FockVector::tail_mass() const {
  if (norm_sq_ == 0.0) return 0.0;
  const int n = cutoff();
  const int window = std::min(n, kTailWindow);
  return amplitudes_.tail(window).squaredNorm() / norm_sq_;
}

FockVector FockVector::normalized() const {
  if (norm_sq_ == 0.0) fail(ErrorKind::zero_norm, "cannot normalize the zero vector");
  return FockVector(amplitudes_ / std::sqrt(norm_sq_), converged_);
}

FockVector FockVector::padded(int cutoff) const {
  if (cutoff <= this->cutoff()) return *this;
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(cutoff);
  v.head(this->cutoff()) = amplitudes_;
  return FockVector(std::move(v), converged_);
}

FockVector FockVector::with_converged(bool converged) const {
  FockVector copy = *this;
  copy.converged_ = converged;
  return copy;
}

Complex FockVector::inner(const FockVector& other) const {
  const int n = std::min(cutoff(), other.cutoff());
  return amplitudes_.head(n).dot(other.amplitudes_.head(n));
}

// --- DensityMatrix -----------------------------------------------------------------

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
  require(entries_.rows() == entries_.cols() && entries_.rows() > 0,
          "DensityMatrix: entries must be a non-empty square matrix");
}

DensityMatrix DensityMatrix::pure(const FockVector& state) {
  const FockVector psi = state.normalized();
  return DensityMatrix(psi.amplitudes() * psi.amplitudes().adjoint());
}

double DensityMatrix::purity() const {
  const double tr = trace();
  return entries_.cwiseAbs2().sum() / (tr * tr);
}

DensityMatrix DensityMatrix::normalized() const {
  const double tr = trace();
  if (!(tr > 0.0)) fail(ErrorKind::zero_norm, "density matrix trace is not positive");
  return DensityMatrix(entries_ / tr);
}

DensityMatrix DensityMatrix::padded(int cutoff) const {
  if (cutoff <= this->cutoff()) return *this;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(cutoff, cutoff);
  m.topLeftCorner(this->cutoff(), this->cutoff()) = entries_;
  return DensityMatrix(std::move(m));
}

DensityMatrix Ensemble::density() const {
  require(!members.empty(), "Ensemble: no members");
  int cutoff = 0;
  for (const auto& m : members) cutoff = std::max(cutoff, m.state.cutoff());
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(cutoff, cutoff);
  for (const auto& m : members) {
    const Eigen::VectorXcd v = m.state.padded(cutoff).amplitudes();
    rho += m.weight * v * v.adjoint();
  }
  return DensityMatrix(std::move(rho)).normalized();
}

// --- states -------------------------------------------------------------------------

FockVector coherent_state(Complex alpha, const CutoffPolicy& policy) {
  require(std::isfinite(alpha.real()) && std::isfinite(alpha.imag()), "coherent_state: alpha must be finite");
  FockVector v = converge("coherent_state", policy, [&](int cutoff) {
    Eigen::VectorXcd amps(cutoff);
    amps[0] = std::exp(-0.5 * std::norm(alpha));
    for (int k = 1; k < cutoff; ++k) amps[k] = amps[k - 1] * alpha / std::sqrt(static_cast<double>(k));
    return FockVector(std::move(amps));
  });
  return v.normalized();
}

FockVector squeezed_vacuum_at(double r, Branch branch, int cutoff) {
  require(std::abs(r) <= 3.0, "squeezed_vacuum: |r| must be <= 3");
  require(cutoff >= 1, "squeezed_vacuum: cutoff must be positive");
  // Even levels 0, 2, 4, ... only; the working dimension is doubled so the
  // truncation boundary sits far from the retained levels.
  const int kept = (cutoff + 1) / 2;
  const int work = 2 * kept + 8;
  const double s = sign(branch) * r / 2.0;
  Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(work, work);
  for (int k = 0; k + 1 < work; ++k) {
    const double el = s * std::sqrt((2.0 * k + 1.0) * (2.0 * k + 2.0));
    gen(k + 1, k) = el;
    gen(k, k + 1) = -el;
  }
  const Eigen::MatrixXd u = gen.exp();
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(cutoff);
  for (int k = 0; k < kept; ++k) amps[2 * k] = u(k, 0);
  return FockVector(std::move(amps)).normalized();
}

FockVector squeezed_vacuum(double r, Branch branch, const CutoffPolicy& policy) {
  require(std::abs(r) <= 3.0, "squeezed_vacuum: |r| must be <= 3");
  return converge("squeezed_vacuum", policy,
                  [&](int cutoff) { return squeezed_vacuum_at(r, branch, cutoff); });
}

FockVector apply_creation(const FockVector& state, int n) {
  require(n >= 0, "apply_creation: n must be >= 0");
  if (n == 0) return state;
  const int in = state.cutoff();
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(in + n);
  for (int k = 0; k < in; ++k) amps[k + n] = state[k] * sqrt_factorial_ratio(k, n);
  FockVector out(std::move(amps));
  return out.with_converged(state.converged() && out.tail_mass() < kDefaultTail);
}

FockVector apply_annihilation(const FockVector& state, int n) {
  require(n >= 0, "apply_annihilation: n must be >= 0");
  if (n == 0) return state;
  const int in = state.cutoff();
  const int out_cutoff = std::max(1, in - n);
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(out_cutoff);
  for (int k = 0; k + n < in; ++k) amps[k] = state[k + n] * sqrt_factorial_ratio(k, n);
  FockVector out(std::move(amps));
  return out.with_converged(state.converged() && out.tail_mass() < kDefaultTail);
}

FockVector photon_added_squeezed(int n, double r, Branch branch, const CutoffPolicy& policy) {
  require(n >= 0, "photon_added_squeezed: n must be >= 0");
  return converge("photon_added_squeezed", policy, [&](int cutoff) {
    return apply_creation(squeezed_vacuum_at(r, branch, cutoff), n);
  });
}

FockVector photon_subtracted_squeezed(int n, double r, Branch branch, const CutoffPolicy& policy) {
  require(n >= 0, "photon_subtracted_squeezed: n must be >= 0");
  return converge("photon_subtracted_squeezed", policy, [&](int cutoff) {
    return apply_annihilation(squeezed_vacuum_at(r, branch, cutoff + n), n);
  });
}

FockVector compass_state(double x0, const CutoffPolicy& policy) {
  require(std::isfinite(x0), "compass_state: x0 must be finite");
  const double a = x0 / kSqrt2;
  const Complex centers[4] = {{a, 0.0}, {-a, 0.0}, {0.0, a}, {0.0, -a}};
  return converge("compass_state", policy, [&](int cutoff) {
    Eigen::VectorXcd sum = Eigen::VectorXcd::Zero(cutoff);
    for (const Complex& beta : centers) {
      Complex c = std::exp(-0.5 * std::norm(beta));
      sum[0] += c;
      for (int k = 1; k < cutoff; ++k) {
        c *= beta / std::sqrt(static_cast<double>(k));
        sum[k] += c;
      }
    }
    return FockVector(std::move(sum));
  });
}

FockVector superpose(Complex c1, const FockVector& s1, Complex c2, const FockVector& s2) {
  const int cutoff = std::max(s1.cutoff(), s2.cutoff());
  const Eigen::VectorXcd v = c1 * s1.padded(cutoff).amplitudes() + c2 * s2.padded(cutoff).amplitudes();
  FockVector out(v);
  const double scale = std::norm(c1) * s1.norm_sq() + std::norm(c2) * s2.norm_sq();
  if (out.norm_sq() <= 1e-28 * scale || out.is_zero()) {
    fail(ErrorKind::zero_norm, "superpose: result has zero norm");
  }
  return out.with_converged(s1.converged() && s2.converged() && out.tail_mass() < kDefaultTail);
}

DensityMatrix mix(double w1, const FockVector& s1, double w2, const FockVector& s2) {
  require(w1 >= 0.0 && w2 >= 0.0 && w1 + w2 > 0.0, "mix: weights must be nonnegative with positive sum");
  Ensemble e;
  e.members.push_back({w1, s1.normalized()});
  e.members.push_back({w2, s2.normalized()});
  return e.density();
}

}  // namespace subplanck::fock
