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

#ifndef SUBPLANCK_PHASESPACE_HPP
#define SUBPLANCK_PHASESPACE_HPP

// Grid sampling of Wigner functions and overlap maps for a StateSpec, with
// either the closed-form expressions or the number-basis oracle behind it.

#include <functional>
#include <memory>
#include <string_view>
#include <vector>

#include "subplanck/state_spec.hpp"

namespace subplanck::phasespace {

enum class Backend { closedform, oracle };
enum class Quantity { wigner, overlap };
enum class Axis { x, p };

std::string_view to_string(Backend backend);
std::string_view to_string(Quantity quantity);
std::string_view to_string(Axis axis);
Backend backend_from_string(std::string_view name);
Quantity quantity_from_string(std::string_view name);
Axis axis_from_string(std::string_view name);

struct GridSpec {
  double x_min = -6.0;
  double x_max = 6.0;
  double p_min = -6.0;
  double p_max = 6.0;
  int nx = 241;
  int np = 241;

  /// [-6, 6]^2 at 241^2.
  static GridSpec wigner_default();
  /// [-1.5, 1.5]^2 at 121^2, in (dx, dp).
  static GridSpec overlap_default();
  static GridSpec square(double half_width, int points);

  void validate() const;
  double x(int i) const { return nx == 1 ? x_min : x_min + (x_max - x_min) * i / (nx - 1); }
  double p(int j) const { return np == 1 ? p_min : p_min + (p_max - p_min) * j / (np - 1); }
  double dx() const { return (x_max - x_min) / (nx - 1); }
  double dp() const { return (p_max - p_min) / (np - 1); }
  /// Index of the node at 0 along each axis, or -1 if there is none.
  int origin_i() const;
  int origin_j() const;
  bool contains_origin() const { return origin_i() >= 0 && origin_j() >= 0; }
  bool operator==(const GridSpec& other) const = default;
};

/// Values are stored x-major: values[i * np + j] is at (x(i), p(j)).
struct ScalarField {
  GridSpec grid;
  std::vector<double> values;
  double origin_value = 0.0;  // before normalization
  bool normalized = false;
  Backend backend = Backend::closedform;
  Quantity quantity = Quantity::wigner;
  StateSpec spec;
  int cutoff = 0;  // oracle truncation used, 0 for closed form

  double at(int i, int j) const { return values[static_cast<std::size_t>(i) * grid.np + j]; }
  double& at(int i, int j) { return values[static_cast<std::size_t>(i) * grid.np + j]; }
  double peak_abs() const;
};

/// Pointwise access to one quantity of one state. For Wigner, values are
/// tr[rho Delta(alpha)] / pi of the trace-normalized state; for overlaps,
/// tr{rho D rho D^dag} (closed-form superpositions use the cross-term-free
/// approximation). Construction does all per-state work (norms, oracle
/// state); evaluation is pure and thread-safe.
class PointEvaluator {
 public:
  PointEvaluator(const StateSpec& spec, Backend backend, Quantity quantity);
  ~PointEvaluator();
  PointEvaluator(PointEvaluator&&) noexcept;
  PointEvaluator& operator=(PointEvaluator&&) noexcept;

  double operator()(double x, double p) const;
  const StateSpec& spec() const { return spec_; }
  Backend backend() const { return backend_; }
  Quantity quantity() const { return quantity_; }
  int cutoff() const;

 private:
  struct Impl;
  StateSpec spec_;
  Backend backend_;
  Quantity quantity_;
  std::unique_ptr<Impl> impl_;
};

/// Wigner value at the origin used for origin normalization (|W(0)|), or the
/// overlap at zero displacement.
double origin_scale(const PointEvaluator& eval);

/// Fills the grid with `threads` workers (0 = hardware concurrency). The
/// output does not depend on the thread count. Normalization follows
/// spec.normalization.
ScalarField evaluate_field(const StateSpec& spec, const GridSpec& grid, Backend backend, Quantity quantity,
                           int threads = 1);

ScalarField normalize_origin(const ScalarField& field);
/// Trapezoidal integral over the other axis; the result is indexed along `axis`.
std::vector<double> marginal(const ScalarField& field, Axis axis);
/// Trapezoidal integral over the whole grid.
double integrate(const ScalarField& field);

struct ResidualStats {
  double max_abs = 0.0;
  double max_rel_to_peak = 0.0;
  double rms = 0.0;
};
ResidualStats residual_stats(const ScalarField& a, const ScalarField& b);

/// Runs f(i) for i in [0, count) on up to `threads` workers; the first
/// exception (lowest index) is rethrown.
void parallel_for(int count, int threads, const std::function<void(int)>& f);
int resolve_threads(int threads);

}  // namespace subplanck::phasespace

#endif  // SUBPLANCK_PHASESPACE_HPP
