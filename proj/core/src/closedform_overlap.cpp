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

#include "subplanck/closedform.hpp"
#include "subplanck/error.hpp"

namespace subplanck::closedform {
namespace {

void require_squeezed(int n, const SqueezeFrame& frame) {
  require(n >= 0, "photon number must be >= 0");
  if (n > 0 && frame.r == 0.0) {
    fail(ErrorKind::singular_parameter, "r = 0 is singular for n >= 1 (use the vacuum or coherent path)");
  }
}

Complex checked(Complex v, const char* what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    fail(ErrorKind::nonfinite_term, std::string(what) + ": non-finite value");
  }
  return v;
}

LogComplex comb(int n, int l) {
  return LogComplex::from_log(2.0 * std::lgamma(n + 1.0) - std::lgamma(l + 1.0) - 2.0 * std::lgamma(n - l + 1.0));
}

// Shared body of the PASVS/PSSVS overlap terms; k = coth r or tanh r.
Complex branch_term(int n, const SqueezeFrame& f, Branch branch, const DisplacementFrame& df, bool added,
                    const char* what) {
  const bool plus = branch == Branch::plus;
  const Complex eta = plus ? df.eta_plus : df.eta_minus;
  const double gauss = -0.5 * std::norm(eta);
  if (n == 0) return std::exp(gauss);
  const double k = added ? f.coth_r : f.tanh_r;
  const Complex arg = added ? (plus ? df.Theta_plus : df.Theta_minus) : (plus ? df.theta_plus : df.theta_minus);
  const auto h = hermite_table(n, arg);
  const LogComplex base = LogComplex::from(-2.0 * k);
  std::vector<LogComplex> terms;
  terms.reserve(static_cast<std::size_t>(n) + 1);
  for (int l = 0; l <= n; ++l) terms.push_back(comb(n, l) * base.pow(l) * h[n - l] * h[n - l].conj());
  const LogComplex pre = LogComplex::from(-f.sinh_2r).pow(n) * LogComplex::from_log(gauss - n * std::log(4.0));
  return checked((pre * log_sum(terms)).value(), what);
}

// q^m H_m(b / 2q) with q = sqrt(-A), i.e. the coefficients of t^m/m! in exp(A t^2 + b t).
std::vector<LogComplex> gaussian_hermite(int n, Complex A, Complex b) {
  std::vector<LogComplex> out(static_cast<std::size_t>(n) + 1);
  if (A == Complex(0.0, 0.0)) {
    for (int m = 0; m <= n; ++m) out[m] = LogComplex::from(b).pow(m);
    return out;
  }
  const Complex q = std::sqrt(-A);
  const auto h = hermite_table(n, b / (2.0 * q));
  const LogComplex lq = LogComplex::from(q);
  for (int m = 0; m <= n; ++m) out[m] = lq.pow(m) * h[m];
  return out;
}

}  // namespace

double overlap_coherent(Complex delta_alpha) { return std::exp(-std::norm(delta_alpha)); }

double overlap_compass_approx(double x0, double dx, double dp) {
  const double mod_sq = 0.5 * (dx * dx + dp * dp);
  const double c = std::cos(x0 * dx) + std::cos(x0 * dp);
  return 0.25 * std::exp(-mod_sq) * c * c;
}

Complex overlap_term_pasvs(int n, const SqueezeFrame& frame, Branch branch, const DisplacementFrame& dframe) {
  require_squeezed(n, frame);
  return branch_term(n, frame, branch, dframe, true, "overlap_term_pasvs");
}

Complex overlap_term_pssvs(int n, const SqueezeFrame& frame, Branch branch, const DisplacementFrame& dframe) {
  require_squeezed(n, frame);
  return branch_term(n, frame, branch, dframe, false, "overlap_term_pssvs");
}

Complex overlap_term(Kind kind, int n, const SqueezeFrame& frame, Branch branch, const DisplacementFrame& dframe) {
  return kind == Kind::added ? overlap_term_pasvs(n, frame, branch, dframe)
                             : overlap_term_pssvs(n, frame, branch, dframe);
}

double state_norm_sq(Kind kind, int n, const SqueezeFrame& frame, Branch branch) {
  const double v = overlap_term(kind, n, frame, branch, DisplacementFrame({0.0, 0.0}, frame)).real();
  if (!(v > 0.0)) fail(ErrorKind::zero_norm, "state_norm_sq: nonpositive norm");
  return v;
}

Complex branch_cross_norm(Kind kind, int n, const SqueezeFrame& frame) {
  require_squeezed(n, frame);
  return detail::gaussian_bilinear(kind, n, frame.r, -frame.r, {0.0, 0.0});
}

double overlap_superposition(Kind kind, int n, const SqueezeFrame& frame, Complex c1, Complex c2,
                             const DisplacementFrame& dframe) {
  const double w1 = std::norm(c1);
  const double w2 = std::norm(c2);
  require(w1 + w2 > 0.0, "overlap_superposition: weights vanish");
  Complex sum(0.0, 0.0);
  if (w1 > 0.0) sum += w1 * overlap_term(kind, n, frame, Branch::plus, dframe) / state_norm_sq(kind, n, frame, Branch::plus);
  if (w2 > 0.0) sum += w2 * overlap_term(kind, n, frame, Branch::minus, dframe) / state_norm_sq(kind, n, frame, Branch::minus);
  return std::norm(sum) / ((w1 + w2) * (w1 + w2));
}

double overlap_mixture(Kind kind, int n, const SqueezeFrame& frame, Complex c1, Complex c2,
                       const DisplacementFrame& dframe) {
  const double w1 = std::norm(c1) * std::norm(c1);
  const double w2 = std::norm(c2) * std::norm(c2);
  require(w1 + w2 > 0.0, "overlap_mixture: weights vanish");
  double sum = 0.0;
  if (w1 > 0.0) sum += w1 * std::norm(overlap_term(kind, n, frame, Branch::plus, dframe) / state_norm_sq(kind, n, frame, Branch::plus));
  if (w2 > 0.0) sum += w2 * std::norm(overlap_term(kind, n, frame, Branch::minus, dframe) / state_norm_sq(kind, n, frame, Branch::minus));
  return sum / (w1 + w2);
}

namespace detail {

// S(r)|0> = (cosh r)^(-1/2) exp(tanh(r) a^dag^2 / 2)|0>; both squeezed vacua
// are written through their generating functions, the displacement is
// absorbed into a shifted Gaussian, and the a^dag^n (or a^n) insertions pick
// out Taylor coefficients. What is left is a double Hermite sum.
Complex gaussian_bilinear(Kind kind, int n, double r1, double r2, Complex delta) {
  require(n >= 0, "gaussian_bilinear: n must be >= 0");
  const double t1 = std::tanh(r1);
  const double t2 = std::tanh(r2);
  const double d = 1.0 - t1 * t2;
  const double n0 = 1.0 / std::sqrt(std::cosh(r1) * std::cosh(r2) * d);
  const Complex dc = std::conj(delta);
  const Complex l0 = delta - t2 * dc;
  Complex A = t2 / (2.0 * d);
  Complex B = t1 / (2.0 * d);
  Complex C = 1.0 / d;
  Complex b = l0 / d;
  Complex c = t1 * l0 / d - dc;
  const Complex cst = 0.5 * t1 * l0 * l0 / d - 0.5 * std::norm(delta) + 0.5 * t2 * dc * dc;
  if (kind == Kind::subtracted) {
    A = t1 * t1 * A + t1 / 2.0;
    B = t2 * t2 * B + t2 / 2.0;
    C = t1 * t2 * C;
    b = t1 * b;
    c = t2 * c;
  }
  const auto hb = gaussian_hermite(n, A, b);
  const auto hc = gaussian_hermite(n, B, c);
  const LogComplex lc = LogComplex::from(C);
  std::vector<LogComplex> terms;
  terms.reserve(static_cast<std::size_t>(n) + 1);
  for (int l = 0; l <= n; ++l) terms.push_back(comb(n, l) * lc.pow(l) * hb[n - l] * hc[n - l]);
  const LogComplex pre = LogComplex::from_log(std::log(n0) + cst.real(), cst.imag());
  return checked((pre * log_sum(terms)).value(), "gaussian_bilinear");
}

}  // namespace detail
}  // namespace subplanck::closedform
