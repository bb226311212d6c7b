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

#include <algorithm>
#include <cmath>
#include <limits>

#include "subplanck/closedform.hpp"

namespace subplanck::closedform {

LogComplex LogComplex::from(Complex z) {
  if (z == Complex(0.0, 0.0)) return zero();
  return {std::log(std::abs(z)), std::arg(z)};
}

LogComplex LogComplex::zero() { return {-std::numeric_limits<double>::infinity(), 0.0}; }

LogComplex LogComplex::one() { return {0.0, 0.0}; }

Complex LogComplex::value() const {
  if (is_zero()) return {0.0, 0.0};
  return std::polar(std::exp(log_magnitude), phase);
}

bool LogComplex::is_zero() const { return log_magnitude == -std::numeric_limits<double>::infinity(); }

LogComplex LogComplex::pow(int k) const {
  if (k == 0) return one();
  return {k * log_magnitude, k * phase};
}

LogComplex log_sum(const std::vector<LogComplex>& terms) {
  double top = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms) top = std::max(top, t.log_magnitude);
  if (top == -std::numeric_limits<double>::infinity()) return LogComplex::zero();

  // Neumaier's variant of compensated summation, per component: unlike plain
  // Kahan it keeps small terms that meet a larger one of opposite sign.
  auto add = [](double& sum, double& comp, double x) {
    const double t = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  };
  double re = 0.0, im = 0.0, re_c = 0.0, im_c = 0.0;
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    const Complex v = std::polar(std::exp(t.log_magnitude - top), t.phase);
    add(re, re_c, v.real());
    add(im, im_c, v.imag());
  }
  re += re_c;
  im += im_c;
  return LogComplex::from({re, im}) * LogComplex::from_log(top);
}

}  // namespace subplanck::closedform
