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

#include <gtest/gtest.h>

#include "subplanck/error.hpp"
#include "subplanck/metrics.hpp"

namespace subplanck::metrics {
namespace {

const Complex kHalf = 1.0 / kSqrt2;

TEST(TileExtent, VacuumHalfWidth) {
  // W = exp(-x^2 - p^2): half maximum at x = sqrt(ln 2), i.e. |alpha| = sqrt(ln 2 / 2).
  for (Axis a : {Axis::x, Axis::p}) {
    const ExtentRecord rec = central_tile_extent(StateSpec::svs(0.0), a, Backend::closedform);
    EXPECT_NEAR(rec.hwhm, std::sqrt(std::log(2.0)), 1e-9);
    EXPECT_NEAR(rec.hwhm / kSqrt2, 0.5887, 1e-4);
    EXPECT_LT(rec.lo, rec.hwhm);
    EXPECT_GT(rec.hi, rec.hwhm);
    EXPECT_LE(std::abs(rec.residual), 1e-9);
  }
}

TEST(TileExtent, CompassShrinksWithSize) {
  EXPECT_LT(central_tile_extent(StateSpec::compass(12), Axis::x, Backend::closedform).hwhm,
            central_tile_extent(StateSpec::compass(8), Axis::x, Backend::closedform).hwhm);
}

TEST(TileExtent, AddedSmallerThanSubtracted) {
  const double pa = central_tile_extent(StateSpec::pair(Family::spasvs, 10, 0.5, kHalf), Axis::x,
                                        Backend::closedform).hwhm;
  const double ps = central_tile_extent(StateSpec::pair(Family::spssvs, 10, 0.5, kHalf), Axis::x,
                                        Backend::closedform).hwhm;
  EXPECT_LT(pa, ps);
}

TEST(TileExtent, BackendIndependent) {
  for (const StateSpec& s : {StateSpec::pair(Family::spasvs, 10, 0.5, kHalf),
                             StateSpec::pair(Family::mix_ps, 6, 0.8, kHalf),
                             StateSpec::single(Family::pssvs, 7, 0.3, Branch::minus)}) {
    for (Axis a : {Axis::x, Axis::p}) {
      const ExtentRecord c = central_tile_extent(s, a, Backend::closedform);
      const ExtentRecord o = central_tile_extent(s, a, Backend::oracle);
      EXPECT_NEAR(c.hwhm, o.hwhm, 1e-6) << s.describe();
      EXPECT_LE(std::abs(c.residual), 1e-9);
      EXPECT_LE(std::abs(o.residual), 1e-9);
    }
  }
}

TEST(TileExtent, NoCrossingIsReported) {
  // Strong squeezing stretches one axis past the scan bound.
  try {
    central_tile_extent(StateSpec::svs(3.0), Axis::x, Backend::closedform);
    ADD_FAILURE() << "no exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::no_crossing);
  }
  EXPECT_GT(central_tile_extent(StateSpec::svs(3.0), Axis::p, Backend::closedform).hwhm, 0.0);
}

TEST(LoglogFit, ExactPowerLaw) {
  const std::vector<double> xs{1, 2, 4, 8, 16};
  std::vector<double> ys;
  for (double x : xs) ys.push_back(3.0 * std::pow(x, -0.5));
  const LineFit f = loglog_fit(xs, ys);
  EXPECT_NEAR(f.slope, -0.5, 1e-14);
  EXPECT_NEAR(f.intercept, std::log(3.0), 1e-14);
  EXPECT_NEAR(f.slope_stderr, 0.0, 1e-12);
  EXPECT_EQ(f.points, 5);
  // Too few rows (e.g. after skips) give an empty fit rather than an error.
  EXPECT_EQ(loglog_fit({2.0}, {1.0}).slope, 0.0);
  EXPECT_THROW(loglog_fit({2.0, 2.0}, {1.0, 3.0}), Error);
}

TEST(ExtentSweep, CompassSlope) {
  const SweepTable t = extent_sweep(StateSpec::compass(4), {4, 6, 8, 10, 12, 16}, Backend::closedform);
  EXPECT_EQ(t.parameter_name, "x0");
  EXPECT_NEAR(t.fit_x.slope, -1.0, 0.1);
  EXPECT_NEAR(t.fit_p.slope, -1.0, 0.1);
}

TEST(ExtentSweep, SuperpositionStrictlyDecreasing) {
  const std::vector<double> ns{5, 10, 20, 30, 40, 50};
  const SweepTable t = extent_sweep(StateSpec::pair(Family::spasvs, 5, 0.5, kHalf), ns, Backend::closedform);
  ASSERT_EQ(t.rows.size(), ns.size());
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    EXPECT_LT(t.rows[i].hwhm_x, t.rows[i - 1].hwhm_x);
    EXPECT_LT(t.rows[i].hwhm_p, t.rows[i - 1].hwhm_p);
  }
  EXPECT_LT(t.fit_x.slope, 0.0);
}

TEST(ExtentSweep, UnequalWeightsShrinkOneAxis) {
  const SweepTable t = extent_sweep(StateSpec::pair(Family::spasvs, 5, 0.5, 0.1), {5, 20, 50}, Backend::closedform);
  const auto& first = t.rows.front();
  const auto& last = t.rows.back();
  EXPECT_LT(last.hwhm_x / first.hwhm_x, 0.5);
  EXPECT_GT(last.hwhm_p / first.hwhm_p, 0.9);
}

TEST(ExtentSweep, RowsWithoutCrossingAreSkipped) {
  // A coherent state at x0 = 3 normalized by its origin value grows towards
  // the peak and only drops back to 1/2 beyond the scan bound.
  const SweepTable t = extent_sweep(StateSpec::coherent(0.0), {0.0, 3.0}, Backend::closedform);
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_TRUE(t.rows[0].ok);
  EXPECT_FALSE(t.rows[1].ok);
  EXPECT_FALSE(t.rows[1].note.empty());
}

TEST(Sensitivity, CoherentHasNoZero) {
  const OverlapMap m = sensitivity_map(StateSpec::coherent(0.0), phasespace::GridSpec::overlap_default(),
                                       Backend::closedform);
  ASSERT_EQ(m.radii.size(), 4u);
  for (const auto& d : m.radii) EXPECT_FALSE(d.radius.has_value()) << d.direction;
  // (dx, dp) = (1, 1) is |delta alpha| = 1.
  EXPECT_NEAR(m.field.at(100, 100), std::exp(-1.0), 1e-15);
}

TEST(Sensitivity, CompassDiagonalZero) {
  const OverlapMap m = sensitivity_map(StateSpec::compass(12), phasespace::GridSpec::overlap_default(),
                                       Backend::oracle);
  const double analytic = kSqrt2 * kPi / 24;  // dx = dp = pi/24
  for (const auto& d : m.radii) {
    ASSERT_TRUE(d.radius.has_value()) << d.direction;
    if (d.direction == "diagonal") {
      EXPECT_NEAR(*d.radius, analytic, 0.01);
      EXPECT_LE(*d.radius, analytic);
    }
  }
}

TEST(Sensitivity, MixtureZerosOnlyOnDiagonals) {
  const OverlapMap m = sensitivity_map(StateSpec::pair(Family::mix_pa, 15, 0.5, kHalf),
                                       phasespace::GridSpec::square(1.5, 61), Backend::closedform);
  for (const auto& d : m.radii) {
    const bool diagonal = d.direction == "diagonal" || d.direction == "antidiagonal";
    EXPECT_EQ(d.radius.has_value(), diagonal) << d.direction;
  }
}

TEST(Sensitivity, AddedRadiusShrinksWithN) {
  const phasespace::GridSpec g = phasespace::GridSpec::square(1.5, 31);
  const auto r10 = sensitivity_map(StateSpec::pair(Family::spasvs, 10, 0.5, kHalf), g, Backend::closedform);
  const auto r20 = sensitivity_map(StateSpec::pair(Family::spasvs, 20, 0.5, kHalf), g, Backend::closedform);
  for (std::size_t i = 0; i < r10.radii.size(); ++i) {
    ASSERT_TRUE(r10.radii[i].radius && r20.radii[i].radius);
    EXPECT_LT(*r20.radii[i].radius, *r10.radii[i].radius) << r10.radii[i].direction;
  }
}

TEST(PhotonStats, Rows) {
  std::vector<int> ns;
  for (int n = 0; n <= 20; ++n) ns.push_back(n);
  const auto rows = photon_stats_sweep(ns, 0.5);
  ASSERT_EQ(rows.size(), ns.size());
  const double svs = std::sinh(0.5) * std::sinh(0.5);
  EXPECT_NEAR(rows[0].pasvs, svs, 1e-12);
  EXPECT_NEAR(rows[0].pssvs, svs, 1e-12);
  EXPECT_GT(rows[10].pasvs, rows[10].pssvs);
  // a S|0> = sinh r S|1> and a^dag S|0> = cosh r S|1>: the n = 1 states coincide.
  EXPECT_NEAR(rows[1].pasvs, rows[1].pssvs, 1e-12);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_GE(rows[i].pasvs, rows[i - 1].pasvs);
    EXPECT_GE(rows[i].pssvs, rows[i - 1].pssvs);
    EXPECT_GE(rows[i].spasvs, rows[i - 1].spasvs);
    if (i >= 2) {
      EXPECT_GE(rows[i].pasvs, rows[i].pssvs);
    }
  }
  // The subtracted superposition is S(r)|1> - S(-r)|1> at n = 1 (sinh flips
  // sign with r) and its mean photon number dips until n = 3.
  EXPECT_GT(rows[1].spssvs, rows[2].spssvs);
  for (std::size_t i = 4; i < rows.size(); ++i) EXPECT_GE(rows[i].spssvs, rows[i - 1].spssvs);
}

TEST(PhotonStats, CompassMeanPhoton) {
  EXPECT_NEAR(mean_photon(StateSpec::compass(4)), 8.0, 0.4);
}

}  // namespace
}  // namespace subplanck::metrics
