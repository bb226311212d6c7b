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

#include "subplanck/phasespace.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

#include "subplanck/closedform.hpp"
#include "subplanck/error.hpp"
#include "subplanck/oracle_state.hpp"

namespace subplanck::phasespace {

namespace cf = closedform;

std::string_view to_string(Backend backend) { return backend == Backend::closedform ? "closedform" : "oracle"; }
std::string_view to_string(Quantity quantity) { return quantity == Quantity::wigner ? "wigner" : "overlap"; }
std::string_view to_string(Axis axis) { return axis == Axis::x ? "x" : "p"; }

Backend backend_from_string(std::string_view name) {
  if (name == "closedform") return Backend::closedform;
  if (name == "oracle") return Backend::oracle;
  fail(ErrorKind::invalid_argument, "unknown backend '" + std::string(name) + "'");
}

Quantity quantity_from_string(std::string_view name) {
  if (name == "wigner") return Quantity::wigner;
  if (name == "overlap") return Quantity::overlap;
  fail(ErrorKind::invalid_argument, "unknown quantity '" + std::string(name) + "'");
}

Axis axis_from_string(std::string_view name) {
  if (name == "x") return Axis::x;
  if (name == "p") return Axis::p;
  fail(ErrorKind::invalid_argument, "unknown axis '" + std::string(name) + "'");
}

// --- grid -------------------------------------------------------------------

GridSpec GridSpec::wigner_default() { return {}; }

GridSpec GridSpec::overlap_default() { return square(1.5, 121); }

GridSpec GridSpec::square(double half_width, int points) {
  return {-half_width, half_width, -half_width, half_width, points, points};
}

void GridSpec::validate() const {
  require(std::isfinite(x_min) && std::isfinite(x_max) && std::isfinite(p_min) && std::isfinite(p_max),
          "grid bounds must be finite");
  require(x_min < x_max && p_min < p_max, "grid bounds must be strictly increasing");
  require(nx >= 2 && np >= 2, "grid needs at least 2 points per axis");
}

namespace {

int origin_index(double lo, double hi, int count) {
  if (lo > 0.0 || hi < 0.0) return -1;
  const double step = (hi - lo) / (count - 1);
  const long k = std::lround(-lo / step);
  if (k < 0 || k >= count) return -1;
  const double at = lo + (hi - lo) * static_cast<double>(k) / (count - 1);
  return std::abs(at) <= 1e-12 * (hi - lo) ? static_cast<int>(k) : -1;
}

}  // namespace

int GridSpec::origin_i() const { return origin_index(x_min, x_max, nx); }
int GridSpec::origin_j() const { return origin_index(p_min, p_max, np); }

double ScalarField::peak_abs() const {
  double peak = 0.0;
  for (double v : values) peak = std::max(peak, std::abs(v));
  return peak;
}

// --- evaluator --------------------------------------------------------------

struct PointEvaluator::Impl {
  std::optional<cf::SqueezeFrame> frame;
  Kind kind = Kind::added;
  int n = 0;
  Branch branch = Branch::plus;
  // Closed form: weights rescaled to the unnormalized branch states, and the
  // norm of the resulting superposition or mixture.
  Complex c1{1.0, 0.0};
  Complex c2{0.0, 0.0};
  Complex scaled_c1{1.0, 0.0};
  Complex scaled_c2{0.0, 0.0};
  double norm = 1.0;
  Complex beta{0.0, 0.0};
  double x0 = 0.0;
  std::optional<fock::OracleState> oracle;
};

namespace {

double compass_norm_sq(double x0) {
  const double a = x0 / kSqrt2;
  const Complex centers[4] = {{a, 0.0}, {-a, 0.0}, {0.0, a}, {0.0, -a}};
  double total = 0.0;
  for (const Complex& bi : centers) {
    for (const Complex& bj : centers) {
      total += std::exp(-0.5 * std::norm(bi) - 0.5 * std::norm(bj) + std::conj(bi) * bj).real();
    }
  }
  return total;
}

}  // namespace

PointEvaluator::PointEvaluator(const StateSpec& spec, Backend backend, Quantity quantity)
    : spec_(spec), backend_(backend), quantity_(quantity), impl_(std::make_unique<Impl>()) {
  spec_.validate();
  Impl& m = *impl_;
  if (backend == Backend::oracle) {
    const fock::CutoffPolicy policy = fock::CutoffPolicy::for_pointwise(spec_.n.value_or(0));
    m.oracle = fock::oracle_state(spec_, &policy);
    return;
  }
  const Family f = spec_.family;
  if (uses_x0(f)) {
    m.x0 = *spec_.x0;
    m.beta = alpha_from_quadratures(m.x0, 0.0);
    if (f == Family::compass) m.norm = compass_norm_sq(m.x0);
    return;
  }
  m.frame.emplace(*spec_.r);
  m.n = spec_.n.value_or(0);
  m.kind = kind_of(f);
  if (spec_.branch) m.branch = *spec_.branch;
  if (f == Family::svs) return;
  if (f == Family::pasvs || f == Family::pssvs) {
    m.norm = cf::state_norm_sq(m.kind, m.n, *m.frame, m.branch);
    return;
  }
  m.c1 = *spec_.c1;
  m.c2 = *spec_.c2;
  const double n_plus = cf::state_norm_sq(m.kind, m.n, *m.frame, Branch::plus);
  const double n_minus = cf::state_norm_sq(m.kind, m.n, *m.frame, Branch::minus);
  m.scaled_c1 = m.c1 / std::sqrt(n_plus);
  m.scaled_c2 = m.c2 / std::sqrt(n_minus);
  m.norm = std::norm(m.c1) + std::norm(m.c2);
  if (!is_mixture(f)) {
    const Complex cross = cf::branch_cross_norm(m.kind, m.n, *m.frame);
    m.norm += 2.0 * (std::conj(m.scaled_c1) * m.scaled_c2 * cross).real();
  }
  if (!(m.norm > 0.0)) fail(ErrorKind::zero_norm, "state has zero norm: " + spec_.describe());
}

PointEvaluator::~PointEvaluator() = default;
PointEvaluator::PointEvaluator(PointEvaluator&&) noexcept = default;
PointEvaluator& PointEvaluator::operator=(PointEvaluator&&) noexcept = default;

int PointEvaluator::cutoff() const { return impl_->oracle ? impl_->oracle->cutoff : 0; }

double PointEvaluator::operator()(double x, double p) const {
  const Impl& m = *impl_;
  const Complex point = alpha_from_quadratures(x, p);
  if (m.oracle) return quantity_ == Quantity::wigner ? m.oracle->wigner(point) : m.oracle->overlap(point);

  const Family f = spec_.family;
  if (quantity_ == Quantity::wigner) {
    switch (f) {
      case Family::coherent:
        return cf::wigner_coherent(m.beta, point);
      case Family::compass:
        return cf::wigner_compass(m.x0, point) / m.norm;
      default:
        break;
    }
    const cf::PhasePointMap pt(point, *m.frame);
    switch (f) {
      case Family::svs:
        return cf::wigner_svs(*m.frame, m.branch, pt);
      case Family::pasvs:
      case Family::pssvs:
        return cf::wigner_branch(m.kind, m.n, *m.frame, m.branch, pt) / m.norm;
      case Family::spasvs:
      case Family::spssvs:
        return cf::wigner_superposition(m.kind, m.n, *m.frame, m.scaled_c1, m.scaled_c2, pt) / m.norm;
      default:
        return cf::wigner_mixture(m.kind, m.n, *m.frame, m.scaled_c1, m.scaled_c2, pt) / m.norm;
    }
  }

  switch (f) {
    case Family::coherent:
      return cf::overlap_coherent(point);
    case Family::compass:
      return cf::overlap_compass_approx(m.x0, x, p);
    default:
      break;
  }
  const cf::DisplacementFrame df(point, *m.frame);
  switch (f) {
    case Family::svs:
      return std::norm(cf::overlap_term_pasvs(0, *m.frame, m.branch, df));
    case Family::pasvs:
    case Family::pssvs:
      return std::norm(cf::overlap_term(m.kind, m.n, *m.frame, m.branch, df) / m.norm);
    case Family::spasvs:
    case Family::spssvs:
      return cf::overlap_superposition(m.kind, m.n, *m.frame, m.c1, m.c2, df);
    default:
      return cf::overlap_mixture(m.kind, m.n, *m.frame, m.c1, m.c2, df);
  }
}

double origin_scale(const PointEvaluator& eval) {
  const double v = eval(0.0, 0.0);
  return eval.quantity() == Quantity::wigner ? std::abs(v) : v;
}

// --- threads ----------------------------------------------------------------

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(int count, int threads, const std::function<void(int)>& f) {
  const int workers = std::min(resolve_threads(threads), std::max(count, 1));
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::mutex guard;
  int failed_index = count;
  std::exception_ptr failure;
  auto work = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        f(i);
      } catch (...) {
        std::lock_guard lock(guard);
        if (i < failed_index) {
          failed_index = i;
          failure = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

// --- fields -----------------------------------------------------------------

ScalarField evaluate_field(const StateSpec& spec, const GridSpec& grid, Backend backend, Quantity quantity,
                           int threads) {
  grid.validate();
  // Overlap maps are always reported relative to zero displacement.
  const bool to_origin = spec.normalization == Normalization::origin || quantity == Quantity::overlap;
  if (to_origin && !grid.contains_origin()) {
    fail(ErrorKind::invalid_argument, "origin normalization needs a grid node at (0, 0); use odd point counts");
  }
  const PointEvaluator eval(spec, backend, quantity);
  ScalarField field;
  field.grid = grid;
  field.backend = backend;
  field.quantity = quantity;
  field.spec = spec;
  field.cutoff = eval.cutoff();
  field.values.assign(static_cast<std::size_t>(grid.nx) * grid.np, 0.0);
  parallel_for(grid.nx, threads, [&](int i) {
    const double x = grid.x(i);
    for (int j = 0; j < grid.np; ++j) {
      try {
        field.at(i, j) = eval(x, grid.p(j));
      } catch (const Error& e) {
        throw Error(e.kind(), std::string(e.what()) + " at grid index (" + std::to_string(i) + ", " +
                                  std::to_string(j) + ")");
      }
    }
  });
  if (to_origin) return normalize_origin(field);
  if (quantity == Quantity::wigner) {
    for (double& v : field.values) v *= 0.5;  // per dx dp
  }
  if (grid.contains_origin()) field.origin_value = field.at(grid.origin_i(), grid.origin_j());
  return field;
}

ScalarField normalize_origin(const ScalarField& field) {
  if (field.normalized) return field;
  const int i = field.grid.origin_i();
  const int j = field.grid.origin_j();
  if (i < 0 || j < 0) fail(ErrorKind::invalid_argument, "normalize_origin: grid has no node at (0, 0)");
  const double origin = field.at(i, j);
  const double scale = field.quantity == Quantity::wigner ? std::abs(origin) : origin;
  if (!(std::abs(scale) >= 1e-300)) {
    fail(ErrorKind::degenerate_normalization, "normalize_origin: origin value " + std::to_string(origin));
  }
  ScalarField out = field;
  for (double& v : out.values) v /= scale;
  out.origin_value = origin;
  out.normalized = true;
  return out;
}

std::vector<double> marginal(const ScalarField& field, Axis axis) {
  const GridSpec& g = field.grid;
  const bool along_x = axis == Axis::x;
  const int outer = along_x ? g.nx : g.np;
  const int inner = along_x ? g.np : g.nx;
  const double h = along_x ? g.dp() : g.dx();
  std::vector<double> out(outer, 0.0);
  for (int a = 0; a < outer; ++a) {
    double sum = 0.0;
    for (int b = 0; b < inner; ++b) {
      const double v = along_x ? field.at(a, b) : field.at(b, a);
      sum += (b == 0 || b == inner - 1) ? 0.5 * v : v;
    }
    out[a] = sum * h;
  }
  return out;
}

double integrate(const ScalarField& field) {
  const std::vector<double> m = marginal(field, Axis::x);
  double sum = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) sum += (i == 0 || i + 1 == m.size()) ? 0.5 * m[i] : m[i];
  return sum * field.grid.dx();
}

ResidualStats residual_stats(const ScalarField& a, const ScalarField& b) {
  if (!(a.grid == b.grid) || a.values.size() != b.values.size()) {
    fail(ErrorKind::grid_mismatch, "residual_stats: fields are on different grids");
  }
  ResidualStats s;
  double sq = 0.0;
  for (std::size_t k = 0; k < a.values.size(); ++k) {
    const double d = std::abs(a.values[k] - b.values[k]);
    s.max_abs = std::max(s.max_abs, d);
    sq += d * d;
  }
  const double peak = std::max(a.peak_abs(), b.peak_abs());
  s.max_rel_to_peak = peak > 0.0 ? s.max_abs / peak : s.max_abs;
  s.rms = a.values.empty() ? 0.0 : std::sqrt(sq / static_cast<double>(a.values.size()));
  return s;
}

}  // namespace subplanck::phasespace
