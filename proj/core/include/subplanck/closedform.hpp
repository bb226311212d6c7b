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

#ifndef SUBPLANCK_CLOSEDFORM_HPP
#define SUBPLANCK_CLOSEDFORM_HPP

// Closed-form Wigner functions and displaced-state overlaps of squeezed
// photon-added/subtracted states, compass states and coherent states.
//
// Wigner values are tr[rho Delta(alpha)] / pi for the *unnormalized* state,
// Delta = 2 D(alpha) Pi D^dag(alpha); the vacuum gives 2/pi at the origin.
// The states are psi_+- = a^dag^n S(+-r)|0> (added) or a^n S(+-r)|0>
// (subtracted), S(r) = exp[(r/2)(a^dag^2 - a^2)].

#include <vector>

#include "subplanck/types.hpp"

namespace subplanck::closedform {

/// A complex number stored as log|z| and arg z. Zero has log_magnitude = -inf.
struct LogComplex {
  double log_magnitude;
  double phase;

  static LogComplex from(Complex z);
  static LogComplex zero();
  static LogComplex one();
  static LogComplex from_log(double log_magnitude, double phase = 0.0) { return {log_magnitude, phase}; }

  Complex value() const;
  bool is_zero() const;
  LogComplex conj() const { return {log_magnitude, -phase}; }
  LogComplex pow(int k) const;

  friend LogComplex operator*(LogComplex a, LogComplex b) {
    return {a.log_magnitude + b.log_magnitude, a.phase + b.phase};
  }
  friend LogComplex operator/(LogComplex a, LogComplex b) {
    return {a.log_magnitude - b.log_magnitude, a.phase - b.phase};
  }
};

/// Sum of terms given in log form; the largest magnitude is factored out and
/// the scaled values are accumulated with compensated summation.
LogComplex log_sum(const std::vector<LogComplex>& terms);

/// Physicists' Hermite polynomial H_n(z), 0 <= n <= 200.
LogComplex hermite(int n, Complex z);
/// H_0(z) ... H_n(z).
std::vector<LogComplex> hermite_table(int n, Complex z);

struct SqueezeFrame {
  explicit SqueezeFrame(double r);

  double r;
  double cosh_r, sinh_r, tanh_r, coth_r;
  double sinh_2r, cosh_2r, tanh_2r, sech_2r;
  double Omega;  // sqrt(tanh 2r) / sinh r
  double omega;  // sqrt(tanh 2r) / cosh r
};

/// Everything the Wigner sums need at one phase-space point alpha.
struct PhasePointMap {
  PhasePointMap(Complex alpha, const SqueezeFrame& frame);

  Complex alpha;
  Complex alpha_bar_plus, alpha_bar_minus;  // alpha cosh r -+ alpha^* sinh r
  Complex alpha_plus, alpha_minus;          // alpha^* sinh r +- alpha cosh r
  double chi_plus, chi_minus;
  // -tanh(2r)(alpha^2 - alpha^*2) - 2|alpha|^2 sech(2r). The first part is
  // imaginary, so this is complex with a nonpositive real part.
  Complex xi;
};

/// Everything the overlap sums need for one displacement delta alpha.
struct DisplacementFrame {
  DisplacementFrame(Complex delta_alpha, const SqueezeFrame& frame);

  Complex delta_alpha;
  Complex eta_plus, eta_minus;      // delta cosh r -+ delta^* sinh r
  Complex Theta_plus, Theta_minus;  // i sqrt(+-coth r / 2) eta_+-
  Complex theta_plus, theta_minus;  // i sqrt(+-tanh r / 2) eta_+-
};

// --- Wigner functions -------------------------------------------------------

double wigner_svs(const SqueezeFrame& frame, Branch branch, const PhasePointMap& point);
double wigner_pasvs(int n, const SqueezeFrame& frame, Branch branch, const PhasePointMap& point);
double wigner_pssvs(int n, const SqueezeFrame& frame, Branch branch, const PhasePointMap& point);
double wigner_branch(Kind kind, int n, const SqueezeFrame& frame, Branch branch, const PhasePointMap& point);

/// c1^* c2 <psi_+|Delta(alpha)|psi_-> / pi.
Complex spasvs_cross(int n, const SqueezeFrame& frame, Complex c1, Complex c2, const PhasePointMap& point);
Complex spssvs_cross(int n, const SqueezeFrame& frame, Complex c1, Complex c2, const PhasePointMap& point);

/// |c1|^2 W_+ + |c2|^2 W_- + 2 Re(cross) for c1 psi_+ + c2 psi_-.
double wigner_superposition(Kind kind, int n, const SqueezeFrame& frame, Complex c1, Complex c2,
                            const PhasePointMap& point);
/// |c1|^2 W_+ + |c2|^2 W_-.
double wigner_mixture(Kind kind, int n, const SqueezeFrame& frame, Complex c1, Complex c2,
                      const PhasePointMap& point);

double wigner_coherent(Complex beta, Complex alpha);

/// Compass state |x0/sqrt2> + |-x0/sqrt2> + |i x0/sqrt2> + |-i x0/sqrt2>,
/// split into the four lobes, the lobe-pair interference and the central
/// chessboard. All three are in units of 2/pi.
struct CompassParts {
  double lobes;
  double interference;
  double chessboard;

  double total() const { return 2.0 / kPi * (lobes + interference + chessboard); }
};
CompassParts wigner_compass_parts(double x0, Complex alpha);
double wigner_compass(double x0, Complex alpha);

// --- overlaps ---------------------------------------------------------------

/// |<beta|D(delta)|beta>|^2.
double overlap_coherent(Complex delta_alpha);
/// Small-displacement form for the compass, origin-normalized.
double overlap_compass_approx(double x0, double dx, double dp);

/// <psi_+-|D(delta)|psi_+-> for the unnormalized states.
Complex overlap_term_pasvs(int n, const SqueezeFrame& frame, Branch branch, const DisplacementFrame& dframe);
Complex overlap_term_pssvs(int n, const SqueezeFrame& frame, Branch branch, const DisplacementFrame& dframe);
Complex overlap_term(Kind kind, int n, const SqueezeFrame& frame, Branch branch, const DisplacementFrame& dframe);

/// |(|c1|^2 T_+ + |c2|^2 T_-)|^2 with T_+- normalized terms, branch cross terms
/// dropped; origin-normalized.
double overlap_superposition(Kind kind, int n, const SqueezeFrame& frame, Complex c1, Complex c2,
                             const DisplacementFrame& dframe);
/// |c1|^4 |T_+|^2 + |c2|^4 |T_-|^2, origin-normalized.
double overlap_mixture(Kind kind, int n, const SqueezeFrame& frame, Complex c1, Complex c2,
                       const DisplacementFrame& dframe);

/// <psi_+-|psi_+->.
double state_norm_sq(Kind kind, int n, const SqueezeFrame& frame, Branch branch);
/// <psi_+|psi_->.
Complex branch_cross_norm(Kind kind, int n, const SqueezeFrame& frame);

namespace detail {
/// <phi_1|D(delta)|phi_2> with phi_i = a^dag^n S(r_i)|0> or a^n S(r_i)|0>, from
/// the Gaussian generating function of the two squeezed vacua.
Complex gaussian_bilinear(Kind kind, int n, double r1, double r2, Complex delta);
}  // namespace detail

}  // namespace subplanck::closedform

#endif  // SUBPLANCK_CLOSEDFORM_HPP
