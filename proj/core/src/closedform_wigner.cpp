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
#include <string>
#include <vector>

#include "subplanck/closedform.hpp"
#include "subplanck/error.hpp"

namespace subplanck::closedform {
namespace {

const Complex kI(0.0, 1.0);

void require_squeezed(int n, const SqueezeFrame& frame) {
  require(n >= 0, "photon number must be >= 0");
  if (n > 0 && frame.r == 0.0) {
    fail(ErrorKind::singular_parameter, "r = 0 is singular for n >= 1 (use the vacuum or coherent path)");
  }
}

double finite_or_throw(double v, const char* what) {
  if (!std::isfinite(v)) fail(ErrorKind::nonfinite_term, std::string(what) + ": non-finite value");
  return v;
}

Complex finite_or_throw(Complex v, const char* what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    fail(ErrorKind::nonfinite_term, std::string(what) + ": non-finite value");
  }
  return v;
}

// sum_l n!^2 / (l! (n-l)!^2) base^l H_{n-l}(z1) H_{n-l}(z2)
//
// The terms alternate and cancel heavily far from the origin, so the sum is
// carried in extended precision; the exponent range of long double also
// covers every term up to the order limit without rescaling.
LogComplex hermite_pair_sum(int n, Complex base, Complex z1, Complex z2) {
  using Wide = std::complex<long double>;
  require(n >= 0 && n <= 200, "hermite: order must be in [0, 200]");
  auto table = [n](Wide z) {
    std::vector<Wide> h(static_cast<std::size_t>(n) + 1);
    h[0] = 1.0L;
    if (n > 0) h[1] = 2.0L * z;
    for (int k = 1; k < n; ++k) h[k + 1] = 2.0L * z * h[k] - 2.0L * static_cast<long double>(k) * h[k - 1];
    return h;
  };
  const auto h1 = table(Wide(z1));
  const auto h2 = table(Wide(z2));
  // coef_l = n!^2 / (l! (n-l)!^2), built up from coef_0 = 1.
  Wide sum = 0.0L;
  Wide power = 1.0L;
  long double coef = 1.0L;
  for (int l = 0; l <= n; ++l) {
    sum += coef * power * h1[n - l] * h2[n - l];
    power *= Wide(base);
    coef *= static_cast<long double>(n - l) * static_cast<long double>(n - l) / static_cast<long double>(l + 1);
  }
  if (sum == Wide(0.0L)) return LogComplex::zero();
  if (!std::isfinite(std::abs(sum))) fail(ErrorKind::nonfinite_term, "hermite_pair_sum: overflow");
  return LogComplex::from_log(static_cast<double>(std::log(std::abs(sum))), static_cast<double>(std::arg(sum)));
}

// Shared body of the PASVS/PSSVS Wigner sums; k = coth r or tanh r.
double branch_wigner(int n, const SqueezeFrame& f, Branch branch, const PhasePointMap& pt, double k,
                     const char* what) {
  const bool plus = branch == Branch::plus;
  const double chi = plus ? pt.chi_plus : pt.chi_minus;
  if (n == 0) return 2.0 / kPi * std::exp(chi);
  const Complex z = plus ? -kI * std::sqrt(2.0 * k) * pt.alpha_bar_plus : std::sqrt(2.0 * k) * pt.alpha_bar_minus;
  const LogComplex sum = hermite_pair_sum(n, -2.0 * k, z, std::conj(z));
  const LogComplex pre = LogComplex::from_log(chi + n * std::log(f.sinh_2r) - n * std::log(4.0));
  return finite_or_throw(2.0 / kPi * (pre * sum).value().real(), what);
}

}  // namespace

double wigner_svs(const SqueezeFrame& frame, Branch branch, const PhasePointMap& point) {
  (void)frame;
  return 2.0 / kPi * std::exp(branch == Branch::plus ? point.chi_plus : point.chi_minus);
}

double wigner_pasvs(int n, const SqueezeFrame& frame, Branch branch, const PhasePointMap& point) {
  require_squeezed(n, frame);
  return branch_wigner(n, frame, branch, point, frame.coth_r, "wigner_pasvs");
}

double wigner_pssvs(int n, const SqueezeFrame& frame, Branch branch, const PhasePointMap& point) {
  require_squeezed(n, frame);
  return branch_wigner(n, frame, branch, point, frame.tanh_r, "wigner_pssvs");
}

double wigner_branch(Kind kind, int n, const SqueezeFrame& frame, Branch branch, const PhasePointMap& point) {
  return kind == Kind::added ? wigner_pasvs(n, frame, branch, point) : wigner_pssvs(n, frame, branch, point);
}

Complex spasvs_cross(int n, const SqueezeFrame& f, Complex c1, Complex c2, const PhasePointMap& pt) {
  require_squeezed(n, f);
  const Complex weight = std::conj(c1) * c2;
  if (weight == Complex(0.0, 0.0)) return {0.0, 0.0};
  const LogComplex sum =
      hermite_pair_sum(n, 2.0 * kI * f.coth_r, f.Omega * pt.alpha_plus, kI * f.Omega * std::conj(pt.alpha_minus));
  const LogComplex pre = LogComplex::from_log(pt.xi.real(), -pt.xi.imag()) *
                         LogComplex::from(kI * f.tanh_2r).pow(n) *
                         LogComplex::from_log(-n * std::log(4.0) - 0.5 * std::log(f.cosh_2r));
  return finite_or_throw(weight * 2.0 / kPi * (pre * sum).value(), "spasvs_cross");
}

Complex spssvs_cross(int n, const SqueezeFrame& f, Complex c1, Complex c2, const PhasePointMap& pt) {
  require_squeezed(n, f);
  const Complex weight = std::conj(c1) * c2;
  if (weight == Complex(0.0, 0.0)) return {0.0, 0.0};
  const LogComplex sum = hermite_pair_sum(n, -2.0 * kI * f.tanh_r, kI * f.omega * pt.alpha_plus,
                                          -f.omega * std::conj(pt.alpha_minus));
  const LogComplex pre = LogComplex::from_log(pt.xi.real(), -pt.xi.imag()) *
                         LogComplex::from(kI * f.tanh_2r).pow(n) *
                         LogComplex::from_log(-n * std::log(4.0) - 0.5 * std::log(f.cosh_2r));
  return finite_or_throw(weight * 2.0 / kPi * (pre * sum).value(), "spssvs_cross");
}

double wigner_superposition(Kind kind, int n, const SqueezeFrame& frame, Complex c1, Complex c2,
                            const PhasePointMap& point) {
  const Complex cross =
      kind == Kind::added ? spasvs_cross(n, frame, c1, c2, point) : spssvs_cross(n, frame, c1, c2, point);
  return wigner_mixture(kind, n, frame, c1, c2, point) + 2.0 * cross.real();
}

double wigner_mixture(Kind kind, int n, const SqueezeFrame& frame, Complex c1, Complex c2,
                      const PhasePointMap& point) {
  double w = 0.0;
  if (std::norm(c1) > 0.0) w += std::norm(c1) * wigner_branch(kind, n, frame, Branch::plus, point);
  if (std::norm(c2) > 0.0) w += std::norm(c2) * wigner_branch(kind, n, frame, Branch::minus, point);
  return w;
}

double wigner_coherent(Complex beta, Complex alpha) { return 2.0 / kPi * std::exp(-2.0 * std::norm(alpha - beta)); }

CompassParts wigner_compass_parts(double x0, Complex alpha) {
  require(x0 > 0.0, "wigner_compass: x0 must be positive");
  const double x = kSqrt2 * alpha.real();
  const double p = kSqrt2 * alpha.imag();
  auto gauss = [](double u, double v, double a, double b) { return std::exp(-(u - a) * (u - a) - (v - b) * (v - b)); };
  CompassParts parts{};
  parts.lobes = gauss(x, p, x0, 0) + gauss(x, p, -x0, 0) + gauss(x, p, 0, x0) + gauss(x, p, 0, -x0);
  double cross = 0.0;
  for (int sx : {1, -1}) {
    for (int sp : {1, -1}) {
      const double u = sx * x;
      const double v = sp * p;
      cross += gauss(u, v, x0 / 2, x0 / 2) * std::cos(x0 * (u + v - x0 / 2));
    }
  }
  parts.interference = 2.0 * cross;
  parts.chessboard = 2.0 * gauss(x, p, 0, 0) * (std::cos(2.0 * x0 * x) + std::cos(2.0 * x0 * p));
  return parts;
}

double wigner_compass(double x0, Complex alpha) { return wigner_compass_parts(x0, alpha).total(); }

}  // namespace subplanck::closedform
