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

#include "fedl_lab/wireless/ue_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fedl_lab/errors.hpp"
#include "fedl_lab/lambert_w.hpp"

namespace fedl_lab::wireless {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw InvalidInputError(std::string(name) + " must be finite and > 0");
  }
}

// e^x (x - 1) + 1, which cancels badly for small x.
double exp_x_minus_one_plus_one(double x) {
  if (std::abs(x) < 0.05) {
    // sum_{k>=2} (k-1) x^k / k!
    double term = x * x / 2.0;  // x^k / k! at k = 2
    double sum = term;
    for (int k = 3; k < 14; ++k) {
      term *= x / k;
      sum += (k - 1) * term;
    }
    return sum;
  }
  return x * std::exp(x) - std::expm1(x);
}

}  // namespace

void UEProfile::validate() const {
  require_positive(c_n, "c_n");
  require_positive(D_n, "D_n");
  if (!(alpha_n >= 0.0) || !std::isfinite(alpha_n)) {
    throw InvalidInputError("alpha_n must be finite and >= 0");
  }
  require_positive(f_min, "f_min");
  require_positive(f_max, "f_max");
  if (f_min > f_max) throw InvalidInputError("f_min exceeds f_max");
  require_positive(hbar_n, "hbar_n");
  require_positive(p_min, "p_min");
  require_positive(p_max, "p_max");
  if (p_min > p_max) throw InvalidInputError("p_min exceeds p_max");
  require_positive(s_n, "s_n");
}

void SystemParams::validate() const {
  require_positive(B, "B");
  require_positive(N0, "N0");
  require_positive(kappa, "kappa");
}

void validate_instance(std::span<const UEProfile> ues,
                       const SystemParams& sys) {
  sys.validate();
  if (ues.empty()) throw InvalidInputError("instance has no UEs");
  if (sys.N != 0 && sys.N != ues.size()) {
    throw InvalidInputError("N = " + std::to_string(sys.N) + " but " +
                            std::to_string(ues.size()) + " UEs are listed");
  }
  for (std::size_t n = 0; n < ues.size(); ++n) {
    try {
      ues[n].validate();
    } catch (const InvalidInputError& e) {
      throw InvalidInputError("UE " + std::to_string(n) + ": " + e.what());
    }
  }
}

double energy_cp(const UEProfile& ue, double f) {
  return 0.5 * ue.alpha_n * ue.load() * f * f;
}

double time_cp(const UEProfile& ue, double f) { return ue.load() / f; }

double power_of_tau(const UEProfile& ue, const SystemParams& sys, double tau) {
  return (sys.N0 / ue.hbar_n) * std::expm1(ue.s_n / (tau * sys.B));
}

double energy_co(const UEProfile& ue, const SystemParams& sys, double tau) {
  return tau * power_of_tau(ue, sys, tau);
}

TauBounds tau_bounds(const UEProfile& ue, const SystemParams& sys) {
  const double snr = ue.hbar_n / sys.N0;
  return {ue.s_n / (sys.B * std::log1p(snr * ue.p_max)),
          ue.s_n / (sys.B * std::log1p(snr * ue.p_min))};
}

double g_fn(const UEProfile& ue, const SystemParams& sys, double kappa) {
  const double q = kappa * ue.hbar_n / sys.N0;
  const double arg = std::max((q - 1.0) / std::numbers::e, -1.0 / std::numbers::e);
  // y = 1 + W solves e^y (y - 1) + 1 = q. W is ill-conditioned near the branch
  // point, so polish y with Newton steps on the cancellation-free form.
  double y = 1.0 + lambert_w0(arg);
  for (int it = 0; it < 3 && y > 0.0; ++it) {
    y -= (exp_x_minus_one_plus_one(y) - q) / (y * std::exp(y));
  }
  return (ue.s_n / sys.B) / y;
}

double g_inv(const UEProfile& ue, const SystemParams& sys, double tau) {
  const double x = ue.s_n / (tau * sys.B);
  return (sys.N0 / ue.hbar_n) * exp_x_minus_one_plus_one(x);
}

}  // namespace fedl_lab::wireless
