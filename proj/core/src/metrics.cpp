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

#include "subplanck/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "subplanck/error.hpp"
#include "subplanck/oracle_state.hpp"

namespace subplanck::metrics {
namespace {

struct Crossing {
  double lo;
  double hi;
  double at;
  int iterations;
  double residual;
};

// f(0) > 0 is assumed. Scans t = step, 2 step, ... up to bound for the first
// t with f(t) <= 0, then bisects [t - step, t].
std::optional<Crossing> first_crossing(const std::function<double(double)>& f, double step, double bound) {
  double prev_t = 0.0;
  const int steps = static_cast<int>(std::floor(bound / step + 1e-9));
  for (int k = 1; k <= steps; ++k) {
    const double t = k * step;
    if (f(t) > 0.0) {
      prev_t = t;
      continue;
    }
    double lo = prev_t;
    double hi = t;
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    int it = 0;
    while (it < 200 && (hi - lo > kBisectionTolerance || std::abs(fm) > kBisectionTolerance)) {
      if (fm > 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
      const double next = 0.5 * (lo + hi);
      if (next == mid) break;
      mid = next;
      fm = f(mid);
      ++it;
    }
    return Crossing{lo, hi, mid, it, fm};
  }
  return std::nullopt;
}

double axis_x(Axis a) { return a == Axis::x ? 1.0 : 0.0; }
double axis_p(Axis a) { return a == Axis::p ? 1.0 : 0.0; }

}  // namespace

ExtentRecord central_tile_extent(const phasespace::PointEvaluator& wigner, Axis axis) {
  require(wigner.quantity() == phasespace::Quantity::wigner, "central_tile_extent: evaluator must be for the Wigner function");
  const double origin = phasespace::origin_scale(wigner);
  if (!(origin >= 1e-300)) fail(ErrorKind::degenerate_normalization, "central_tile_extent: W(0) vanishes");
  const double ux = axis_x(axis);
  const double up = axis_p(axis);
  auto f = [&](double t) { return std::abs(wigner(t * ux, t * up)) / origin - 0.5; };
  const auto c = first_crossing(f, kExtentScanStep, kExtentScanBound);
  if (!c) {
    fail(ErrorKind::no_crossing, "central_tile_extent: |W_norm| stays above 1/2 out to 6 along " +
                                     std::string(phasespace::to_string(axis)) + " for " + wigner.spec().describe());
  }
  ExtentRecord rec;
  rec.spec = wigner.spec();
  rec.axis = axis;
  rec.backend = wigner.backend();
  rec.hwhm = c->at;
  rec.lo = c->lo;
  rec.hi = c->hi;
  rec.iterations = c->iterations;
  rec.residual = c->residual;
  return rec;
}

ExtentRecord central_tile_extent(const StateSpec& spec, Axis axis, Backend backend) {
  const phasespace::PointEvaluator eval(spec, backend, phasespace::Quantity::wigner);
  return central_tile_extent(eval, axis);
}

LineFit loglog_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
  require(xs.size() == ys.size(), "loglog_fit: size mismatch");
  LineFit fit;
  fit.points = static_cast<int>(xs.size());
  if (fit.points < 2) return fit;
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    require(xs[i] > 0.0 && ys[i] > 0.0, "loglog_fit: values must be positive");
    mx += std::log(xs[i]);
    my += std::log(ys[i]);
  }
  mx /= fit.points;
  my /= fit.points;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = std::log(xs[i]) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(ys[i]) - my);
  }
  require(sxx > 0.0, "loglog_fit: x values must not all coincide");
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (fit.points > 2) {
    double ssr = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double e = std::log(ys[i]) - (fit.intercept + fit.slope * std::log(xs[i]));
      ssr += e * e;
    }
    fit.slope_stderr = std::sqrt(ssr / (fit.points - 2) / sxx);
  }
  return fit;
}

SweepTable extent_sweep(const StateSpec& base, const std::vector<double>& values, Backend backend, int threads) {
  require(!values.empty(), "extent_sweep: no parameter values");
  for (std::size_t i = 1; i < values.size(); ++i) {
    require(values[i] > values[i - 1], "extent_sweep: parameter values must be ascending");
  }
  SweepTable table;
  table.base = base;
  table.backend = backend;
  table.parameter_name = uses_x0(base.family) ? "x0" : "n";
  table.rows.resize(values.size());
  phasespace::parallel_for(static_cast<int>(values.size()), threads, [&](int i) {
    StateSpec spec = base;
    if (uses_x0(base.family)) {
      spec.x0 = values[i];
    } else {
      require(uses_photons(base.family), "extent_sweep: family has no photon number to sweep");
      require(values[i] >= 0.0 && values[i] == std::floor(values[i]), "extent_sweep: n must be a nonnegative integer");
      spec.n = static_cast<int>(values[i]);
    }
    SweepRow& row = table.rows[i];
    row.parameter = values[i];
    try {
      const phasespace::PointEvaluator eval(spec, backend, phasespace::Quantity::wigner);
      row.hwhm_x = central_tile_extent(eval, Axis::x).hwhm;
      row.hwhm_p = central_tile_extent(eval, Axis::p).hwhm;
      row.mean_photon = mean_photon(spec);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::no_crossing) throw;
      row.ok = false;
      row.note = e.what();
    }
  });
  std::vector<double> px, hx, hp;
  for (const auto& row : table.rows) {
    if (!row.ok || row.parameter <= 0.0) continue;
    px.push_back(row.parameter);
    hx.push_back(row.hwhm_x);
    hp.push_back(row.hwhm_p);
  }
  if (px.size() >= 2) {
    table.fit_x = loglog_fit(px, hx);
    table.fit_p = loglog_fit(px, hp);
  }
  return table;
}

std::optional<double> first_zero_radius(const phasespace::PointEvaluator& overlap, double ux, double up,
                                        double max_radius) {
  require(overlap.quantity() == phasespace::Quantity::overlap, "first_zero_radius: evaluator must be for the overlap");
  const double origin = phasespace::origin_scale(overlap);
  if (!(origin >= 1e-300)) fail(ErrorKind::degenerate_normalization, "first_zero_radius: overlap at 0 vanishes");
  auto f = [&](double t) { return overlap(t * ux, t * up) / origin - kZeroThreshold; };
  const auto c = first_crossing(f, 1e-3, max_radius);
  if (!c) return std::nullopt;
  return c->at;
}

OverlapMap sensitivity_map(const StateSpec& spec, const phasespace::GridSpec& grid, Backend backend, int threads) {
  OverlapMap map;
  map.field = phasespace::evaluate_field(spec.with_normalization(Normalization::origin), grid, backend,
                                         phasespace::Quantity::overlap, threads);
  const double reach = std::min({grid.x_max, -grid.x_min, grid.p_max, -grid.p_min});
  const double d = 1.0 / kSqrt2;
  map.radii = {{"+x", 1.0, 0.0, {}, {}}, {"+p", 0.0, 1.0, {}, {}}, {"diagonal", d, d, {}, {}},
               {"antidiagonal", d, -d, {}, {}}};
  const phasespace::PointEvaluator eval(spec, backend, phasespace::Quantity::overlap);
  phasespace::parallel_for(static_cast<int>(map.radii.size()), threads, [&](int k) {
    DirectionRadius& dir = map.radii[k];
    dir.radius = first_zero_radius(eval, dir.ux, dir.up, reach);
    if (!dir.radius) dir.note = "no zero within radius " + std::to_string(reach);
  });
  return map;
}

double mean_photon(const StateSpec& spec) { return fock::oracle_state(spec).mean_photon(); }

std::vector<PhotonStatsRow> photon_stats_sweep(const std::vector<int>& n_list, double r, int threads) {
  std::vector<PhotonStatsRow> rows(n_list.size());
  const Complex c(1.0 / kSqrt2, 0.0);
  phasespace::parallel_for(static_cast<int>(n_list.size()), threads, [&](int i) {
    const int n = n_list[i];
    PhotonStatsRow& row = rows[i];
    row.n = n;
    row.pasvs = mean_photon(StateSpec::single(Family::pasvs, n, r));
    row.pssvs = mean_photon(StateSpec::single(Family::pssvs, n, r));
    row.spasvs = mean_photon(StateSpec::pair(Family::spasvs, n, r, c, c));
    row.spssvs = mean_photon(StateSpec::pair(Family::spssvs, n, r, c, c));
  });
  return rows;
}

}  // namespace subplanck::metrics
