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
#include <vector>

#include "subplanck/error.hpp"
#include "subplanck/fock.hpp"
#include "laguerre_diagonal.hpp"

namespace subplanck::fock {
namespace {

constexpr double kImaginaryTolerance = 1e-10;
constexpr double kNegativeTolerance = 1e-10;

double checked_real(Complex z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    fail(ErrorKind::nonfinite_term, std::string(what) + ": non-finite result");
  }
  if (std::abs(z.imag()) > kImaginaryTolerance * std::max(1.0, std::abs(z.real()))) {
    fail(ErrorKind::imaginary_residue,
         std::string(what) + ": imaginary residue " + std::to_string(z.imag()));
  }
  return z.real();
}

double checked_overlap(double v, const char* what) {
  if (v < -kNegativeTolerance) {
    fail(ErrorKind::negative_overlap, std::string(what) + ": overlap " + std::to_string(v));
  }
  return v;
}

void parity_applied(const FockVector& psi, Eigen::VectorXcd& out) {
  out = psi.amplitudes();
  for (int k = 1; k < out.size(); k += 2) out[k] = -out[k];
}

}  // namespace

double wigner_point(const DensityMatrix& rho, Complex alpha) {
  const Eigen::MatrixXcd& m = rho.entries();
  const int cutoff = rho.cutoff();
  const Complex delta = 2.0 * alpha;
  const double mag = std::abs(delta);
  const Complex unit = mag > 0.0 ? delta / mag : Complex(1.0, 0.0);
  Complex phase(1.0, 0.0);
  std::vector<double> g(cutoff);
  Complex total(0.0, 0.0);
  for (int d = 0; d < cutoff; ++d) {
    const int count = cutoff - d;
    detail::laguerre_diagonal(d, mag, count, g.data());
    Complex lower(0.0, 0.0);  // rho_{n,n+d} <n+d|D|n>
    Complex upper(0.0, 0.0);  // rho_{n+d,n} <n|D|n+d>
    for (int n = 0; n < count; ++n) {
      const double s = (n % 2 == 0) ? g[n] : -g[n];
      lower += s * m(n, n + d);
      if (d > 0) upper += s * m(n + d, n);
    }
    total += phase * lower;
    if (d > 0) total += std::conj(phase) * upper;
    phase *= unit;
  }
  return checked_real(total, "wigner_point") * 2.0 / kPi;
}

double wigner_point(const FockVector& state, Complex alpha) {
  if (state.is_zero()) fail(ErrorKind::zero_norm, "wigner_point: zero state");
  Eigen::VectorXcd flipped;
  parity_applied(state, flipped);
  const Complex e = displacement_expectation(state, FockVector(flipped), 2.0 * alpha);
  return checked_real(e / state.norm_sq(), "wigner_point") * 2.0 / kPi;
}

double overlap_displaced(const DensityMatrix& rho, Complex delta) {
  const Eigen::MatrixXcd d = displacement_elements(delta, rho.cutoff());
  const Eigen::MatrixXcd& m = rho.entries();
  const Complex t = (m * d * m * d.adjoint()).trace();
  const double tr = rho.trace();
  return checked_overlap(checked_real(t, "overlap_displaced") / (tr * tr), "overlap_displaced");
}

double overlap_displaced(const FockVector& state, Complex delta) {
  if (state.is_zero()) fail(ErrorKind::zero_norm, "overlap_displaced: zero state");
  const Complex e = displacement_expectation(state, state, delta);
  return std::norm(e) / (state.norm_sq() * state.norm_sq());
}

double overlap_displaced(const Ensemble& ensemble, Complex delta) {
  require(!ensemble.members.empty(), "overlap_displaced: empty ensemble");
  double total = 0.0;
  double weight = 0.0;
  for (const auto& a : ensemble.members) {
    weight += a.weight;
    for (const auto& b : ensemble.members) {
      total += a.weight * b.weight * std::norm(displacement_expectation(a.state, b.state, delta)) /
               (a.state.norm_sq() * b.state.norm_sq());
    }
  }
  return total / (weight * weight);
}

double mean_photon(const FockVector& state) {
  if (state.is_zero()) fail(ErrorKind::zero_norm, "mean_photon: zero state");
  double sum = 0.0;
  for (int k = 1; k < state.cutoff(); ++k) sum += k * std::norm(state[k]);
  return sum / state.norm_sq();
}

double mean_photon(const DensityMatrix& rho) {
  double sum = 0.0;
  for (int k = 1; k < rho.cutoff(); ++k) sum += k * rho.entries()(k, k).real();
  return sum / rho.trace();
}

double ladder_number(const FockVector& state) {
  if (state.is_zero()) fail(ErrorKind::zero_norm, "ladder_number: zero state");
  return apply_annihilation(state, 1).norm_sq() / state.norm_sq();
}

// --- DiagonalDensity ------------------------------------------------------------

DiagonalDensity::DiagonalDensity(const DensityMatrix& rho) : cutoff_(rho.cutoff()), trace_(rho.trace()) {
  if (!(trace_ > 0.0)) fail(ErrorKind::zero_norm, "DiagonalDensity: trace is not positive");
  const int n = cutoff_;
  const Eigen::MatrixXcd& m = rho.entries();
  offset_.resize(n + 1);
  active_.assign(n, 0);
  std::size_t total = 0;
  for (int d = 0; d < n; ++d) {
    offset_[d] = total;
    total += static_cast<std::size_t>(n - d);
  }
  offset_[n] = total;
  coef_a_.resize(total);
  coef_c_.resize(total);
  coef_b_.resize(total);
  plain_.resize(total);
  signed_.resize(total);
  for (int d = 0; d < n; ++d) {
    const std::size_t off = offset_[d];
    for (int k = 0; k < n - d; ++k) {
      const double kp = k + 1.0;
      const double a = std::sqrt(kp / (kp + d)) / kp;
      coef_a_[off + k] = a;
      coef_c_[off + k] = (2.0 * k + 1.0 + d) * a;
      coef_b_[off + k] = k == 0 ? 0.0 : (k + d) * std::sqrt(kp * k / ((kp + d) * (k + d))) / kp;
      const Complex e = m(k, k + d);
      plain_[off + k] = e;
      signed_[off + k] = (k % 2 == 0) ? e : -e;
      if (e != Complex(0.0, 0.0)) active_[d] = 1;
    }
  }
}

// Returns sum over d of phase_d * S_d with S_d = sum_n g_n^(d) entries_{d,n},
// combined by `weight(d, phase, S_d)`.
template <typename Weight>
Complex DiagonalDensity::diagonal_sums(Complex delta, const std::vector<Complex>& entries, Weight weight) const {
  const double mag = std::abs(delta);
  Complex total(0.0, 0.0);
  if (mag == 0.0) {
    Complex s(0.0, 0.0);
    for (int k = 0; k < cutoff_; ++k) s += entries[k];
    return weight(0, Complex(1.0, 0.0), s);
  }
  const double x = mag * mag;
  const double log_mag = std::log(mag);
  const Complex unit = delta / mag;
  Complex phase(1.0, 0.0);
  for (int d = 0; d < cutoff_; ++d, phase *= unit) {
    if (!active_[d]) continue;
    const std::size_t off = offset_[d];
    const int count = cutoff_ - d;
    const double* a = coef_a_.data() + off;
    const double* c = coef_c_.data() + off;
    const double* b = coef_b_.data() + off;
    const Complex* e = entries.data() + off;
    double log_scale = -0.5 * x + d * log_mag - 0.5 * std::lgamma(d + 1.0);
    double prev = 0.0;
    double cur = 1.0;
    double sr = e[0].real();
    double si = e[0].imag();
    for (int k = 0; k + 1 < count; ++k) {
      const double next = (c[k] - x * a[k]) * cur - b[k] * prev;
      prev = cur;
      cur = next;
      if (std::abs(cur) > 1e100) {
        const double big = std::abs(cur);
        prev /= big;
        cur /= big;
        sr /= big;
        si /= big;
        log_scale += std::log(big);
      }
      sr += cur * e[k + 1].real();
      si += cur * e[k + 1].imag();
    }
    const double scale = std::exp(log_scale);
    total += weight(d, phase, Complex(sr * scale, si * scale));
  }
  return total;
}

Complex DiagonalDensity::displacement_trace(Complex delta) const {
  const Complex t = diagonal_sums(delta, plain_, [](int d, Complex phase, Complex s) {
    if (d == 0) return s;
    return phase * s + ((d % 2 == 0) ? 1.0 : -1.0) * std::conj(phase * s);
  });
  return t / trace_;
}

double DiagonalDensity::wigner(Complex alpha) const {
  const Complex t = diagonal_sums(2.0 * alpha, signed_, [](int d, Complex phase, Complex s) {
    if (d == 0) return Complex(s.real(), 0.0);
    return Complex(2.0 * (phase * s).real(), 0.0);
  });
  return t.real() * 2.0 / (kPi * trace_);
}

}  // namespace subplanck::fock
