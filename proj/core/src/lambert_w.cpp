// Copyright 2026 The fedl-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fedl_lab/lambert_w.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fedl_lab/errors.hpp"

namespace fedl_lab {

namespace {

constexpr int kMaxHalleyIterations = 50;

double initial_guess(double x) {
  constexpr double e = std::numbers::e;
  if (x < -0.25) {
    // Series about the branch point in p = sqrt(2(ex + 1)).
    const double p = std::sqrt(std::max(0.0, 2.0 * (e * x + 1.0)));
    return -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
  }
  if (x < 3.0) {
    return std::log1p(x) * (1.0 - std::log1p(std::log1p(x)) /
                                      (2.0 + std::log1p(x)));
  }
  const double l1 = std::log(x);
  const double l2 = std::log(l1);
  return l1 - l2 + l2 / l1;
}

}  // namespace

double lambert_w0(double x) {
  constexpr double branch = -1.0 / std::numbers::e;
  if (std::isnan(x)) throw DomainError("lambert_w0: NaN argument");
  if (x < branch) {
    // Accept the rounding of -1/e itself.
    if (branch - x <= 4.0 * std::numeric_limits<double>::epsilon()) return -1.0;
    throw DomainError("lambert_w0: argument " + std::to_string(x) +
                      " is below -1/e");
  }
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return x;
  if (x - branch <= 4.0 * std::numeric_limits<double>::epsilon()) return -1.0;

  double w = initial_guess(x);
  for (int it = 0; it < kMaxHalleyIterations; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    const double step = f / denom;
    w -= step;
    if (w < -1.0) w = -1.0;
    if (std::abs(step) <= 1e-15 * (1.0 + std::abs(w))) break;
  }
  return w;
}

}  // namespace fedl_lab
