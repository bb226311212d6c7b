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

#ifndef SUBPLANCK_METRICS_HPP
#define SUBPLANCK_METRICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "subplanck/phasespace.hpp"
#include "subplanck/state_spec.hpp"

namespace subplanck::metrics {

using phasespace::Axis;
using phasespace::Backend;

/// Half width at half maximum of |W_norm| along one axis from the origin.
struct ExtentRecord {
  StateSpec spec;
  Axis axis = Axis::x;
  Backend backend = Backend::closedform;
  double hwhm = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  int iterations = 0;
  double residual = 0.0;  // |W_norm(hwhm)| - 1/2
};

inline constexpr double kExtentScanStep = 1e-3;
inline constexpr double kExtentScanBound = 6.0;
inline constexpr double kBisectionTolerance = 1e-9;

ExtentRecord central_tile_extent(const StateSpec& spec, Axis axis, Backend backend);
/// Same, reusing an evaluator built for the Wigner quantity.
ExtentRecord central_tile_extent(const phasespace::PointEvaluator& wigner, Axis axis);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  int points = 0;
};

/// Ordinary least squares of ln(y) against ln(x).
LineFit loglog_fit(const std::vector<double>& xs, const std::vector<double>& ys);

struct SweepRow {
  double parameter = 0.0;  // n, or x0 for the compass
  double hwhm_x = 0.0;
  double hwhm_p = 0.0;
  double mean_photon = 0.0;
  bool ok = true;
  std::string note;  // why the row was skipped
};

struct SweepTable {
  StateSpec base;
  std::string parameter_name;  // "n" or "x0"
  Backend backend = Backend::closedform;
  std::vector<SweepRow> rows;
  LineFit fit_x;
  LineFit fit_p;
};

/// Sweeps n (or x0 for coherent/compass) over `values`, which must be
/// ascending. Mean photon numbers always come from the oracle.
SweepTable extent_sweep(const StateSpec& base, const std::vector<double>& values, Backend backend,
                        int threads = 1);

inline constexpr double kZeroThreshold = 1e-3;

struct DirectionRadius {
  std::string direction;  // "+x", "+p", "diagonal", "antidiagonal"
  double ux = 0.0;
  double up = 0.0;
  std::optional<double> radius;
  std::string note;
};

struct OverlapMap {
  phasespace::ScalarField field;
  std::vector<DirectionRadius> radii;
};

/// First radius along (ux, up) (unit vector) at which the origin-normalized
/// overlap drops below kZeroThreshold, bracketed by a 1e-3 scan and refined
/// by bisection. Empty when no crossing occurs up to max_radius.
std::optional<double> first_zero_radius(const phasespace::PointEvaluator& overlap, double ux, double up,
                                        double max_radius);

/// Origin-normalized map on `grid` plus radii along +x, +p and the diagonal
/// dx = dp (and the antidiagonal dx = -dp), scanned out to the grid half width.
OverlapMap sensitivity_map(const StateSpec& spec, const phasespace::GridSpec& grid, Backend backend,
                           int threads = 1);

struct PhotonStatsRow {
  int n = 0;
  double pasvs = 0.0;
  double pssvs = 0.0;
  double spasvs = 0.0;
  double spssvs = 0.0;
};

/// Mean photon numbers from the oracle, branch + for single states and
/// c1 = c2 = 1/sqrt2 for the superpositions.
std::vector<PhotonStatsRow> photon_stats_sweep(const std::vector<int>& n_list, double r, int threads = 1);

double mean_photon(const StateSpec& spec);

}  // namespace subplanck::metrics

#endif  // SUBPLANCK_METRICS_HPP
