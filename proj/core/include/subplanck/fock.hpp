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

#ifndef SUBPLANCK_FOCK_HPP
#define SUBPLANCK_FOCK_HPP

// Truncated number-basis oracle. Nothing in here uses the closed-form
// Hermite expressions; states are built from ladder operators and matrix
// exponentials so that they can be used to check those expressions.

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "subplanck/types.hpp"

namespace subplanck::fock {

/// How the number-basis truncation grows until the tail is negligible.
struct CutoffPolicy {
  int initial = 64;
  double growth_factor = 2.0;
  double tail_tolerance = 1e-12;
  int max_cutoff = 4096;

  /// Default for states with n photons added or subtracted: initial = max(64, 4n + 32).
  static CutoffPolicy for_photons(int n);
  /// Same with a tail mass below 1e-24. A mass tolerance of 1e-12 leaves
  /// amplitudes near 1e-6 past the cutoff, which limits pointwise Wigner
  /// values far from the origin to about 1e-9; phase-space fields use this.
  static CutoffPolicy for_pointwise(int n);
  static constexpr double kPointwiseTail = 1e-24;

  void validate() const;
  /// Next cutoff after `current`, or 0 when max_cutoff is already reached.
  int grow(int current) const;
};

class FockVector {
 public:
  static constexpr int kTailWindow = 8;

  FockVector() = default;
  explicit FockVector(Eigen::VectorXcd amplitudes, bool converged = false);

  /// sqrt(scale) |k> in a space of the given cutoff.
  static FockVector basis(int k, int cutoff, double scale = 1.0);

  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Complex operator[](int k) const { return amplitudes_[k]; }
  int cutoff() const { return static_cast<int>(amplitudes_.size()); }
  double norm_sq() const { return norm_sq_; }
  bool converged() const { return converged_; }
  bool is_zero() const { return norm_sq_ == 0.0; }

  /// Weight of the kTailWindow highest levels relative to norm_sq. A window
  /// rather than the last entry, since parity-definite states and the
  /// compass (every fourth level) leave most entries exactly zero.
  double tail_mass() const;

  FockVector normalized() const;
  FockVector padded(int cutoff) const;
  FockVector with_converged(bool converged) const;
  /// <this|other>, padding the shorter vector with zeros.
  Complex inner(const FockVector& other) const;

 private:
  Eigen::VectorXcd amplitudes_;
  double norm_sq_ = 0.0;
  bool converged_ = false;
};

class DensityMatrix {
 public:
  DensityMatrix() = default;
  explicit DensityMatrix(Eigen::MatrixXcd entries);

  static DensityMatrix pure(const FockVector& state);

  const Eigen::MatrixXcd& entries() const { return entries_; }
  int cutoff() const { return static_cast<int>(entries_.rows()); }
  double trace() const { return entries_.trace().real(); }
  double purity() const;
  DensityMatrix normalized() const;
  DensityMatrix padded(int cutoff) const;

 private:
  Eigen::MatrixXcd entries_;
};

struct OperatorMatrix {
  Eigen::MatrixXcd entries;
  std::string label;

  int cutoff() const { return static_cast<int>(entries.rows()); }
};

/// Weighted set of pure states; the fast path for overlaps of mixtures.
struct Ensemble {
  struct Member {
    double weight;
    FockVector state;  // normalized
  };
  std::vector<Member> members;

  DensityMatrix density() const;
};

// --- states -----------------------------------------------------------------

FockVector coherent_state(Complex alpha, const CutoffPolicy& policy = {});

/// S(+-r)|0> from the matrix exponential of +-(r/2)(a^dag^2 - a^2),
/// evaluated on the even sublattice with a padded working dimension.
FockVector squeezed_vacuum(double r, Branch branch, const CutoffPolicy& policy = {});
FockVector squeezed_vacuum_at(double r, Branch branch, int cutoff);

FockVector apply_creation(const FockVector& state, int n);
FockVector apply_annihilation(const FockVector& state, int n);

/// a^dag^n S(+-r)|0> (unnormalized), cutoff grown until the tail converges.
FockVector photon_added_squeezed(int n, double r, Branch branch, const CutoffPolicy& policy);
/// a^n S(+-r)|0> (unnormalized).
FockVector photon_subtracted_squeezed(int n, double r, Branch branch, const CutoffPolicy& policy);
/// Four coherent states at +-x0/sqrt2, +-i x0/sqrt2 (unnormalized sum).
FockVector compass_state(double x0, const CutoffPolicy& policy = {});

/// c1 s1 + c2 s2 over a common cutoff; throws zero_norm when the result vanishes.
FockVector superpose(Complex c1, const FockVector& s1, Complex c2, const FockVector& s2);

/// w1 |s1><s1| + w2 |s2><s2| over normalized sources, trace-normalized.
DensityMatrix mix(double w1, const FockVector& s1, double w2, const FockVector& s2);

// --- operators ----------------------------------------------------------------

OperatorMatrix annihilation_operator(int cutoff);
OperatorMatrix creation_operator(int cutoff);
OperatorMatrix parity_operator(int cutoff);
/// exp(delta a^dag - delta^* a) of the truncated generator.
OperatorMatrix displacement_operator(Complex delta, int cutoff);
OperatorMatrix squeeze_operator(double r, Branch branch, int cutoff);
/// 2 D(alpha) Pi D^dag(alpha), from truncated displacement matrices.
OperatorMatrix displaced_parity_operator(Complex alpha, int cutoff);

/// <m|D(delta)|n> of the untruncated operator from associated Laguerre
/// polynomials, for 0 <= m, n < cutoff.
Eigen::MatrixXcd displacement_elements(Complex delta, int cutoff);

/// <bra|D(delta)|ket> without forming the matrix (O(cutoff^2)).
Complex displacement_expectation(const FockVector& bra, const FockVector& ket, Complex delta);

/// rho stored by diagonals rho_{n,n+d}, with the Laguerre recurrence
/// coefficients of the displacement elements tabulated once, for repeated
/// tr[rho D(delta)] and Wigner evaluations. Diagonals that vanish exactly
/// (parity-definite states) are skipped.
class DiagonalDensity {
 public:
  explicit DiagonalDensity(const DensityMatrix& rho);

  int cutoff() const { return cutoff_; }
  /// tr[rho D(delta)] / tr[rho].
  Complex displacement_trace(Complex delta) const;
  /// tr[rho Delta(alpha)] / (pi tr[rho]).
  double wigner(Complex alpha) const;

 private:
  template <typename Weight>
  Complex diagonal_sums(Complex delta, const std::vector<Complex>& entries, Weight weight) const;

  int cutoff_ = 0;
  double trace_ = 1.0;
  std::vector<std::size_t> offset_;  // start of diagonal d in the tables
  std::vector<char> active_;         // diagonal d has a nonzero entry
  std::vector<double> coef_a_, coef_c_, coef_b_;
  std::vector<Complex> plain_;   // rho_{n,n+d}
  std::vector<Complex> signed_;  // (-1)^n rho_{n,n+d}
};

// --- observables --------------------------------------------------------------

/// tr[rho 2 D(alpha) Pi D^dag(alpha)] / pi. `rho` must be trace-normalized.
double wigner_point(const DensityMatrix& rho, Complex alpha);
/// Same, for a pure state (normalized internally).
double wigner_point(const FockVector& state, Complex alpha);

/// tr{rho D rho D^dag}.
double overlap_displaced(const DensityMatrix& rho, Complex delta);
double overlap_displaced(const FockVector& state, Complex delta);
double overlap_displaced(const Ensemble& ensemble, Complex delta);

double mean_photon(const FockVector& state);
double mean_photon(const DensityMatrix& rho);

/// <a^dag a> evaluated as |a psi|^2 / |psi|^2 through the ladder operator.
double ladder_number(const FockVector& state);

}  // namespace subplanck::fock

#endif  // SUBPLANCK_FOCK_HPP
