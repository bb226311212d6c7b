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

#include "subplanck/closedform.hpp"
#include "subplanck/error.hpp"

namespace subplanck::closedform {
namespace {

constexpr int kMaxOrder = 200;
constexpr double kUpper = 1e150;
constexpr double kLower = 1e-150;

// H_{k+1} = 2z H_k - 2k H_{k-1}, carried as (prev, cur) * exp(scale).
template <typename Sink>
void run_recurrence(int n, Complex z, Sink sink) {
  require(n >= 0 && n <= kMaxOrder, "hermite: order must be in [0, 200]");
  Complex prev(1.0, 0.0);
  double scale = 0.0;
  sink(0, LogComplex::one());
  if (n == 0) return;
  Complex cur = 2.0 * z;
  sink(1, LogComplex::from(cur));
  for (int k = 1; k < n; ++k) {
    const Complex next = 2.0 * z * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
    const double big = std::max(std::abs(prev), std::abs(cur));
    if (big > kUpper || (big < kLower && big > 0.0)) {
      prev /= big;
      cur /= big;
      scale += std::log(big);
    }
    sink(k + 1, LogComplex::from(cur) * LogComplex::from_log(scale));
  }
}

}  // namespace

LogComplex hermite(int n, Complex z) {
  LogComplex out = LogComplex::one();
  run_recurrence(n, z, [&](int k, LogComplex h) {
    if (k == n) out = h;
  });
  return out;
}

std::vector<LogComplex> hermite_table(int n, Complex z) {
  std::vector<LogComplex> out(static_cast<std::size_t>(std::max(n, 0)) + 1, LogComplex::one());
  run_recurrence(n, z, [&](int k, LogComplex h) { out[k] = h; });
  return out;
}

}  // namespace subplanck::closedform
