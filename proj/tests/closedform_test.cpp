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
#include <random>

#include <gtest/gtest.h>

#include "subplanck/closedform.hpp"
#include "subplanck/error.hpp"
#include "subplanck/oracle_state.hpp"
#include "subplanck/phasespace.hpp"

namespace subplanck::closedform {
namespace {

using fock::FockVector;

Complex alpha(double x, double p) { return alpha_from_quadratures(x, p); }

// Closed-form Wigner of the normalized single-branch state.
double normalized_branch(Kind kind, int n, double r, Branch b, Complex a) {
  const SqueezeFrame f(r);
  return wigner_branch(kind, n, f, b, PhasePointMap(a, f)) / state_norm_sq(kind, n, f, b);
}

FockVector oracle_branch(Kind kind, int n, double r, Branch b) {
  const auto policy = fock::CutoffPolicy::for_pointwise(n);
  return kind == Kind::added ? fock::photon_added_squeezed(n, r, b, policy)
                             : fock::photon_subtracted_squeezed(n, r, b, policy);
}

// <bra|Delta(alpha)|ket> from exact displacement elements.
Complex oracle_parity(const FockVector& bra, const FockVector& ket, Complex a) {
  const int cutoff = std::max(bra.cutoff(), ket.cutoff());
  const Eigen::MatrixXcd d = fock::displacement_elements(-a, cutoff);
  Eigen::VectorXcd u = d * bra.padded(cutoff).amplitudes();
  const Eigen::VectorXcd v = d * ket.padded(cutoff).amplitudes();
  for (int k = 1; k < cutoff; k += 2) u[k] = -u[k];
  return 2.0 * u.dot(v);
}

TEST(Hermite, SmallOrders) {
  EXPECT_NEAR(std::abs(hermite(0, Complex(0.3, 7.0)).value() - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(hermite(1, Complex(3, 4)).value() - Complex(6, 8)), 0.0, 1e-13);
  EXPECT_NEAR(hermite(3, 2.0).value().real(), 40.0, 1e-12);
  EXPECT_TRUE(hermite(3, 0.0).is_zero());
}

TEST(Hermite, LogSpaceMatchesDirectRecurrence) {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 40; ++trial) {
    const Complex z(u(rng), u(rng));
    Complex h0 = 1.0;
    Complex h1 = 2.0 * z;
    const auto table = hermite_table(8, z);
    EXPECT_NEAR(std::abs(table[0].value() - h0), 0.0, 1e-15);
    for (int n = 1; n <= 8; ++n) {
      EXPECT_LE(std::abs(table[n].value() - h1), 1e-12 * std::abs(h1)) << n << " " << z;
      const Complex h2 = 2.0 * z * h1 - 2.0 * n * h0;
      h0 = h1;
      h1 = h2;
    }
  }
}

TEST(Hermite, DerivativeIdentity) {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_int_distribution<int> un(1, 12);
  for (int trial = 0; trial < 20; ++trial) {
    const Complex z(u(rng), u(rng));
    const int n = un(rng);
    const double h = 1e-3;
    auto H = [n](Complex w) { return hermite(n, w).value(); };
    const Complex fd = (8.0 * (H(z + h) - H(z - h)) - (H(z + 2 * h) - H(z - 2 * h))) / (12 * h);
    const Complex exact = 2.0 * n * hermite(n - 1, z).value();
    EXPECT_LE(std::abs(fd - exact), 1e-9 * std::max(1.0, std::abs(exact))) << n << " " << z;
  }
}

TEST(Hermite, LargeOrderStaysFinite) {
  const LogComplex h = hermite(200, Complex(5.0, -3.0));
  EXPECT_TRUE(std::isfinite(h.log_magnitude));
  EXPECT_GT(h.log_magnitude, 300.0);
  EXPECT_THROW(hermite(201, 1.0), Error);
}

TEST(LogSum, CompensatedCancellation) {
  const std::vector<LogComplex> terms{LogComplex::from(1e16), LogComplex::from(1.0), LogComplex::from(-1e16),
                                      LogComplex::from(1.0)};
  EXPECT_NEAR(log_sum(terms).value().real(), 2.0, 1e-12);
  EXPECT_TRUE(log_sum({}).is_zero());
}

TEST(WignerPasvs, OriginSignAndFrozenValues) {
  const SqueezeFrame f(0.5);
  EXPECT_GT(wigner_pasvs(10, f, Branch::plus, PhasePointMap(0.0, f)), 0.0);
  EXPECT_NEAR(normalized_branch(Kind::added, 10, 0.5, Branch::plus, 0.0), 6.366197723675814e-01, 1e-12);
  EXPECT_NEAR(normalized_branch(Kind::added, 10, 0.5, Branch::plus, alpha(0.3, -0.2)), -4.214700283472477e-01,
              1e-10);
  EXPECT_NEAR(normalized_branch(Kind::subtracted, 3, 0.5, Branch::minus, alpha(0.4, 0.7)), 1.843830041477955e-01,
              1e-10);
}

TEST(WignerPasvs, ZeroSqueezingWithPhotonsIsSingular) {
  const SqueezeFrame f(0.0);
  try {
    wigner_pasvs(2, f, Branch::plus, PhasePointMap(0.1, f));
    ADD_FAILURE() << "no exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::singular_parameter);
  }
  EXPECT_NEAR(wigner_pasvs(0, f, Branch::plus, PhasePointMap(0.0, f)), 2.0 / kPi, 1e-15);
}

TEST(WignerPasvs, NZeroIsSqueezedVacuum) {
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (double r : {0.3, 0.8}) {
    const SqueezeFrame f(r);
    for (int i = 0; i < 20; ++i) {
      const PhasePointMap m(Complex(u(rng), u(rng)), f);
      for (Branch b : {Branch::plus, Branch::minus}) {
        const double svs = wigner_svs(f, b, m);
        EXPECT_NEAR(wigner_pasvs(0, f, b, m), svs, 1e-15);
        EXPECT_NEAR(wigner_pssvs(0, f, b, m), svs, 1e-15);
      }
    }
  }
}

TEST(WignerBranch, MatchesOracleOnRandomPoints) {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (Kind kind : {Kind::added, Kind::subtracted}) {
    for (int n : {1, 4, 10}) {
      for (Branch b : {Branch::plus, Branch::minus}) {
        const FockVector v = oracle_branch(kind, n, 0.5, b);
        for (int i = 0; i < 6; ++i) {
          const Complex a(u(rng), u(rng));
          EXPECT_NEAR(normalized_branch(kind, n, 0.5, b, a), fock::wigner_point(v, a), 1e-10)
              << (kind == Kind::added ? "added" : "subtracted") << " n=" << n << " a=" << a;
        }
      }
    }
  }
}

// Far from the origin the Hermite pair sum cancels by many orders of
// magnitude; the field must still track the oracle there.
TEST(WignerBranch, AccurateFarFromOrigin) {
  const FockVector v = oracle_branch(Kind::added, 20, 0.5, Branch::plus);
  const double peak = std::abs(normalized_branch(Kind::added, 20, 0.5, Branch::plus, 0.0));
  for (double p : {-9.0, -4.0, 0.0, 3.5, 8.0}) {
    for (double x : {4.75, 6.0}) {
      const Complex a = alpha(x, p);
      EXPECT_NEAR(normalized_branch(Kind::added, 20, 0.5, Branch::plus, a), fock::wigner_point(v, a), 1e-10 * peak)
          << "x=" << x << " p=" << p;
    }
  }
}

TEST(StateNorm, MatchesOracle) {
  for (Kind kind : {Kind::added, Kind::subtracted}) {
    for (int n : {0, 1, 7, 20}) {
      const SqueezeFrame f(0.8);
      const FockVector p = oracle_branch(kind, n, 0.8, Branch::plus);
      const FockVector m = oracle_branch(kind, n, 0.8, Branch::minus);
      EXPECT_NEAR(state_norm_sq(kind, n, f, Branch::plus) / p.norm_sq(), 1.0, 1e-10);
      EXPECT_NEAR(state_norm_sq(kind, n, f, Branch::minus) / m.norm_sq(), 1.0, 1e-10);
      const Complex cross = p.inner(m);
      EXPECT_LE(std::abs(branch_cross_norm(kind, n, f) - cross), 1e-10 * p.norm_sq()) << n;
    }
  }
}

TEST(CrossTerm, VanishesWithoutWeight) {
  const SqueezeFrame f(0.5);
  const PhasePointMap m(Complex(0.2, 0.1), f);
  EXPECT_EQ(spasvs_cross(4, f, 0.0, 1.0, m), Complex(0.0));
  EXPECT_EQ(spssvs_cross(4, f, 1.0, 0.0, m), Complex(0.0));
}

TEST(CrossTerm, AddedMatchesOracleAtOrigin) {
  const SqueezeFrame f(0.5);
  const Complex c = 1.0 / kSqrt2;
  const FockVector p = oracle_branch(Kind::added, 10, 0.5, Branch::plus);
  const FockVector m = oracle_branch(Kind::added, 10, 0.5, Branch::minus);
  const double expected = 2.0 * (std::conj(c) * c * oracle_parity(p, m, 0.0) / kPi).real();
  const double got = 2.0 * spasvs_cross(10, f, c, c, PhasePointMap(0.0, f)).real();
  EXPECT_LE(std::abs(got - expected), 1e-8 * std::abs(expected));
}

TEST(CrossTerm, MatchOracleOffOrigin) {
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> u(-2.5, 2.5);
  const SqueezeFrame f(0.5);
  const Complex c1(0.6, 0.0);
  const Complex c2(0.0, 0.8);
  for (Kind kind : {Kind::added, Kind::subtracted}) {
    const FockVector p = oracle_branch(kind, 10, 0.5, Branch::plus);
    const FockVector m = oracle_branch(kind, 10, 0.5, Branch::minus);
    double scale = 0.0;
    std::vector<std::pair<Complex, Complex>> pairs;
    for (int i = 0; i < 12; ++i) {
      const Complex a(u(rng), u(rng));
      const PhasePointMap pm(a, f);
      const Complex got = kind == Kind::added ? spasvs_cross(10, f, c1, c2, pm) : spssvs_cross(10, f, c1, c2, pm);
      const Complex want = std::conj(c1) * c2 * oracle_parity(p, m, a) / kPi;
      scale = std::max(scale, std::abs(want));
      pairs.emplace_back(got, want);
    }
    for (const auto& [got, want] : pairs) EXPECT_LE(std::abs(got - want), 1e-8 * scale);
  }
}

TEST(CrossTerm, SmallSqueezingPrefactor) {
  // At the origin I(n=2)/I(n=0) = tanh^2(2r) (2 coth^2 r - 1) / 4, directly
  // from the sum; both sides evaluated at r = 0.05.
  const double r = 0.05;
  const SqueezeFrame f(r);
  const PhasePointMap m(0.0, f);
  const Complex ratio = spasvs_cross(2, f, 1.0, 1.0, m) / spasvs_cross(0, f, 1.0, 1.0, m);
  const double t = std::tanh(2 * r);
  const double c = 1.0 / std::tanh(r);
  EXPECT_NEAR(ratio.real(), t * t * (2 * c * c - 1) / 4, 1e-6);
  EXPECT_NEAR(ratio.imag(), 0.0, 1e-12);
}

TEST(Superposition, SplitsIntoBranchesAndCrossTerm) {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const SqueezeFrame f(0.5);
  const Complex c1(0.6, 0.0);
  const Complex c2(0.0, 0.8);
  for (int i = 0; i < 10; ++i) {
    const PhasePointMap m(Complex(u(rng), u(rng)), f);
    const Complex cross = spasvs_cross(6, f, c1, c2, m);
    const double total = wigner_superposition(Kind::added, 6, f, c1, c2, m);
    const double parts = wigner_mixture(Kind::added, 6, f, c1, c2, m) + (cross + std::conj(cross)).real();
    EXPECT_NEAR(total, parts, 1e-12 * std::max(1.0, std::abs(total)));
  }
}

TEST(Superposition, SingleWeightIsBranch) {
  const SqueezeFrame f(0.5);
  const PhasePointMap m(Complex(0.3, -0.4), f);
  EXPECT_EQ(wigner_superposition(Kind::added, 5, f, 1.0, 0.0, m), wigner_pasvs(5, f, Branch::plus, m));
}

TEST(Superposition, FrozenValues) {
  using phasespace::PointEvaluator;
  const StateSpec sp = StateSpec::pair(Family::spasvs, 10, 0.5, 1.0 / kSqrt2).with_normalization(Normalization::origin);
  const PointEvaluator a(sp, phasespace::Backend::closedform, phasespace::Quantity::wigner);
  EXPECT_NEAR(a(0.2, 0.1), -1.259955754590616e-01, 1e-10);
  const StateSpec ss = StateSpec::pair(Family::spssvs, 5, 0.8, 0.6, Complex(0.0, 0.8));
  const PointEvaluator b(ss, phasespace::Backend::closedform, phasespace::Quantity::wigner);
  EXPECT_NEAR(b(0.25, -0.35), 3.733356648694398e-01, 1e-10);
}

TEST(Mixture, MatchesOracleMixture) {
  std::mt19937 rng(43);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  const SqueezeFrame f(0.5);
  for (Kind kind : {Kind::added, Kind::subtracted}) {
    const FockVector p = oracle_branch(kind, 10, 0.5, Branch::plus);
    const FockVector m = oracle_branch(kind, 10, 0.5, Branch::minus);
    const fock::DensityMatrix rho = fock::mix(0.5, p, 0.5, m);
    const double norm = state_norm_sq(kind, 10, f, Branch::plus);
    for (int i = 0; i < 6; ++i) {
      const Complex a(u(rng), u(rng));
      const double cf = wigner_mixture(kind, 10, f, 1.0 / kSqrt2, 1.0 / kSqrt2, PhasePointMap(a, f)) / norm;
      EXPECT_NEAR(cf, fock::wigner_point(rho, a), 1e-10) << a;
    }
  }
}

TEST(Compass, OriginIsChessboard) {
  const CompassParts parts = wigner_compass_parts(4.0, 0.0);
  const double sum = parts.lobes + parts.interference + parts.chessboard;
  EXPECT_NEAR(parts.chessboard / sum, 1.0, 1e-3);
  EXPECT_LT(std::abs(parts.lobes), 1e-6);
}

TEST(Compass, MatchesOracle) {
  const FockVector c = fock::compass_state(8.0);
  ASSERT_TRUE(c.converged());
  std::mt19937 rng(47);
  std::uniform_real_distribution<double> u(-6.0, 6.0);
  const double peak = std::abs(fock::wigner_point(c, 0.0));
  const double norm = c.norm_sq();
  for (int i = 0; i < 12; ++i) {
    const Complex a = alpha(u(rng), u(rng));
    EXPECT_NEAR(wigner_compass(8.0, a) / norm, fock::wigner_point(c, a), 1e-6 * peak) << a;
  }
}

TEST(Coherent, Overlap) {
  EXPECT_EQ(overlap_coherent(0.0), 1.0);
  EXPECT_NEAR(overlap_coherent(std::polar(1.0, 0.7)), std::exp(-1.0), 1e-15);
}

TEST(CompassOverlap, ApproximationZeros) {
  EXPECT_EQ(overlap_compass_approx(12.0, 0.0, 0.0), 1.0);
  EXPECT_NEAR(overlap_compass_approx(12.0, kPi / 12, 0.0), 0.0, 1e-30);
  EXPECT_NEAR(overlap_compass_approx(12.0, kPi / 24, kPi / 24), 0.0, 1e-30);
}

TEST(CompassOverlap, ApproximationAgainstOracle) {
  // Measured deviation 1.2e-13 at x0 = 12 on a 21^2 grid; bound 0.02.
  const auto o = fock::oracle_state(StateSpec::compass(12.0));
  const double o0 = o.overlap(0.0);
  double worst = 0.0;
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      const double dx = -0.5 + 0.05 * i;
      const double dp = -0.5 + 0.05 * j;
      worst = std::max(worst, std::abs(overlap_compass_approx(12.0, dx, dp) - o.overlap(alpha(dx, dp)) / o0));
    }
  }
  EXPECT_LE(worst, 0.02);
  EXPECT_LE(worst, 1e-10);
}

TEST(OverlapTerm, ZeroDisplacementIsNorm) {
  const SqueezeFrame f(0.5);
  for (Kind kind : {Kind::added, Kind::subtracted}) {
    const Complex t = overlap_term(kind, 10, f, Branch::plus, DisplacementFrame(0.0, f));
    EXPECT_GT(t.real(), 0.0);
    EXPECT_NEAR(t.imag(), 0.0, 1e-12 * t.real());
    EXPECT_NEAR(t.real() / state_norm_sq(kind, 10, f, Branch::plus), 1.0, 1e-12);
  }
}

TEST(OverlapTerm, FrozenAddedValue) {
  const SqueezeFrame f(0.5);
  const Complex t = overlap_term_pasvs(10, f, Branch::plus, DisplacementFrame(Complex(0.1, 0.05), f));
  EXPECT_LE(std::abs(t - 3.640247864045655e+08), 1e-8 * 3.640247864045655e+08);
  EXPECT_LE(std::abs(state_norm_sq(Kind::added, 10, f, Branch::plus) - 4.033760289116381e+08), 1e-8 * 4.03e8);
}

TEST(OverlapTerm, MatchesOracleAndConjugation) {
  std::mt19937 rng(53);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const SqueezeFrame f(0.5);
  for (Kind kind : {Kind::added, Kind::subtracted}) {
    for (Branch b : {Branch::plus, Branch::minus}) {
      const FockVector v = oracle_branch(kind, 10, 0.5, b);
      for (int i = 0; i < 5; ++i) {
        const Complex d(u(rng), u(rng));
        const Complex t = overlap_term(kind, 10, f, b, DisplacementFrame(d, f));
        const Complex want = fock::displacement_expectation(v, v, d);
        EXPECT_LE(std::abs(t - want), 1e-8 * v.norm_sq()) << d;
        const Complex back = overlap_term(kind, 10, f, b, DisplacementFrame(-d, f));
        EXPECT_LE(std::abs(back - std::conj(t)), 1e-12 * v.norm_sq());
      }
    }
  }
}

TEST(OverlapSuperposition, OriginAndApproximationBound) {
  // Measured max deviation from the exact superposition on |dx|,|dp| <= 0.5:
  // 1.2e-3 (added), 1.3e-3 (subtracted).
  const SqueezeFrame f(0.5);
  const Complex c = 1.0 / kSqrt2;
  for (Family fam : {Family::spasvs, Family::spssvs}) {
    const Kind kind = kind_of(fam);
    EXPECT_NEAR(overlap_superposition(kind, 10, f, c, c, DisplacementFrame(0.0, f)), 1.0, 1e-14);
    const auto o = fock::oracle_state(StateSpec::pair(fam, 10, 0.5, c));
    const double o0 = o.overlap(0.0);
    double worst = 0.0;
    for (int i = 0; i <= 10; ++i) {
      for (int j = 0; j <= 10; ++j) {
        const Complex d = alpha(-0.5 + 0.1 * i, -0.5 + 0.1 * j);
        const double approx = overlap_superposition(kind, 10, f, c, c, DisplacementFrame(d, f));
        worst = std::max(worst, std::abs(approx - o.overlap(d) / o0));
      }
    }
    EXPECT_LE(worst, 0.02);
    EXPECT_LE(worst, 2e-3);
  }
}

TEST(OverlapMixture, MatchesOracle) {
  const SqueezeFrame f(0.5);
  const Complex c = 1.0 / kSqrt2;
  const auto o = fock::oracle_state(StateSpec::pair(Family::mix_pa, 15, 0.5, c));
  const double o0 = o.overlap(0.0);
  EXPECT_NEAR(overlap_mixture(Kind::added, 15, f, c, c, DisplacementFrame(0.0, f)), 1.0, 1e-14);
  for (int i = 0; i <= 15; ++i) {
    for (int j = 0; j <= 15; ++j) {
      const Complex d = alpha(-1.5 + 0.2 * i, -1.5 + 0.2 * j);
      EXPECT_NEAR(overlap_mixture(Kind::added, 15, f, c, c, DisplacementFrame(d, f)), o.overlap(d) / o0, 1e-6) << d;
    }
  }
}

TEST(OverlapMixture, DroppedTermsDecayWithN) {
  const SqueezeFrame f(0.5);
  const Complex c = 1.0 / kSqrt2;
  double previous = 1.0;
  for (int n : {5, 10, 15, 20}) {
    const auto o = fock::oracle_state(StateSpec::pair(Family::mix_ps, n, 0.5, c));
    const double o0 = o.overlap(0.0);
    double worst = 0.0;
    for (double t = 0.1; t <= 1.5; t += 0.1) {
      const Complex d = alpha(t, 0.3 * t);
      worst = std::max(worst, std::abs(overlap_mixture(Kind::subtracted, n, f, c, c, DisplacementFrame(d, f)) -
                                       o.overlap(d) / o0));
    }
    EXPECT_LT(worst, previous) << n;
    previous = worst;
  }
}

TEST(Overlaps, PointSymmetry) {
  std::mt19937 rng(59);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  const SqueezeFrame f(0.5);
  const Complex c1(0.6, 0.0);
  const Complex c2(0.0, 0.8);
  for (int i = 0; i < 20; ++i) {
    const Complex d(u(rng), u(rng));
    for (Kind kind : {Kind::added, Kind::subtracted}) {
      const double a = overlap_superposition(kind, 7, f, c1, c2, DisplacementFrame(d, f));
      const double b = overlap_superposition(kind, 7, f, c1, c2, DisplacementFrame(-d, f));
      EXPECT_NEAR(a, b, 1e-12);
      EXPECT_NEAR(overlap_mixture(kind, 7, f, c1, c2, DisplacementFrame(d, f)),
                  overlap_mixture(kind, 7, f, c1, c2, DisplacementFrame(-d, f)), 1e-12);
    }
    EXPECT_NEAR(overlap_compass_approx(12, d.real(), d.imag()), overlap_compass_approx(12, -d.real(), -d.imag()),
                1e-15);
  }
}

TEST(ParitySign, ClosedFormOrigin) {
  const SqueezeFrame f(0.5);
  const PhasePointMap m(0.0, f);
  for (int n = 0; n <= 20; ++n) {
    EXPECT_EQ(wigner_pasvs(n, f, Branch::plus, m) > 0, n % 2 == 0) << n;
    EXPECT_EQ(wigner_pssvs(n, f, Branch::plus, m) > 0, n % 2 == 0) << n;
  }
}

}  // namespace
}  // namespace subplanck::closedform
