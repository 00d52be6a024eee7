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

#include "fedl_lab/wireless/kkt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fedl_lab/errors.hpp"

namespace fedl_lab::wireless {

namespace {

constexpr double kTol = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

void raise(double& slot, double v) { slot = std::max(slot, std::abs(v)); }

}  // namespace

double KktReport::max_residual() const {
  return std::max({stationarity, primal_feasibility, dual_feasibility,
                   complementary_slackness});
}

KktReport kkt_check_sub1(const Sub1Solution& sol,
                         std::span<const UEProfile> ues,
                         const SystemParams& sys, double kappa) {
  (void)sys;
  const std::size_t n = ues.size();
  if (sol.f_star.size() != n) {
    throw InvalidInputError("solution and instance disagree on UE count");
  }
  const double T = sol.T_cp_star;
  KktReport rep;
  std::vector<double> lo(n, 0.0), hi(n, 0.0);
  std::vector<char> tight(n), at_min(n), at_max(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ue = ues[i];
    const double f = sol.f_star[i];
    tight[i] = std::abs(ue.load() / f - T) <= kTol * T;
    at_min[i] = f <= ue.f_min * (1.0 + kTol);
    at_max[i] = f >= ue.f_max * (1.0 - kTol);
    const double interior_lambda = ue.alpha_n * f * f * f;
    if (!tight[i]) continue;
    if (at_min[i] && at_max[i]) {
      hi[i] = kInf;
    } else if (at_min[i]) {
      hi[i] = interior_lambda;
    } else if (at_max[i]) {
      lo[i] = interior_lambda;
      hi[i] = kInf;
    } else {
      lo[i] = hi[i] = interior_lambda;
    }
  }

  // Spread kappa - sum(lo) over the UEs whose multiplier is not pinned.
  rep.lambda = lo;
  double rest = kappa;
  double room = 0.0;
  std::size_t unbounded = n;
  for (std::size_t i = 0; i < n; ++i) {
    rest -= lo[i];
    if (hi[i] == kInf) {
      if (unbounded == n) unbounded = i;
    } else {
      room += hi[i] - lo[i];
    }
  }
  if (rest > 0.0) {
    const double share = room > 0.0 ? std::min(1.0, rest / room) : 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (hi[i] != kInf) rep.lambda[i] += share * (hi[i] - lo[i]);
    }
    rest -= share * room;
    if (rest > 0.0 && unbounded != n) {
      rep.lambda[unbounded] += rest;
      rest = 0.0;
    }
  }
  double lambda_sum = 0.0;
  for (double l : rep.lambda) lambda_sum += l;
  raise(rep.stationarity, (lambda_sum - kappa) / kappa);

  for (std::size_t i = 0; i < n; ++i) {
    const auto& ue = ues[i];
    const double f = sol.f_star[i];
    const double grad_e = ue.alpha_n * ue.load() * f;
    const double grad_c = rep.lambda[i] * ue.load() / (f * f);
    const double scale = std::max({grad_e, grad_c, 1e-300});
    // d/df of energy + lambda (cD/f - T), before the bound multipliers.
    const double s = (grad_e - grad_c) / scale;
    if (at_min[i] && at_max[i]) {
      // Both bounds active: any sign is absorbed.
    } else if (at_max[i]) {
      raise(rep.dual_feasibility, std::max(0.0, s));  // mu = -s >= 0
    } else if (at_min[i]) {
      raise(rep.dual_feasibility, std::min(0.0, s));  // nu = s >= 0
    } else {
      raise(rep.stationarity, s);
    }
    raise(rep.primal_feasibility, std::max(0.0, ue.load() / f - T) / T);
    raise(rep.primal_feasibility, std::max(0.0, f - ue.f_max) / ue.f_max);
    raise(rep.primal_feasibility, std::max(0.0, ue.f_min - f) / ue.f_min);
    raise(rep.complementary_slackness,
          rep.lambda[i] * (T - ue.load() / f) / (kappa * T));
  }
  return rep;
}

KktReport kkt_check_sub2(const Sub2Solution& sol,
                         std::span<const UEProfile> ues,
                         const SystemParams& sys, double kappa) {
  const std::size_t n = ues.size();
  if (sol.tau_star.size() != n) {
    throw InvalidInputError("solution and instance disagree on UE count");
  }
  KktReport rep;
  rep.lambda = {kappa};
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ue = ues[i];
    const double tau = sol.tau_star[i];
    total += tau;
    const TauBounds tb = tau_bounds(ue, sys);
    const bool at_min = tau <= tb.tau_min * (1.0 + kTol);
    const bool at_max = tau >= tb.tau_max * (1.0 - kTol);
    // d/dtau of energy_co + lambda tau.
    const double s = (kappa - g_inv(ue, sys, tau)) / kappa;
    if (at_min && at_max) {
    } else if (at_max) {
      raise(rep.dual_feasibility, std::max(0.0, s));
    } else if (at_min) {
      raise(rep.dual_feasibility, std::min(0.0, s));
    } else {
      raise(rep.stationarity, s);
    }
    raise(rep.primal_feasibility, std::max(0.0, tb.tau_min - tau) / tb.tau_min);
    raise(rep.primal_feasibility, std::max(0.0, tau - tb.tau_max) / tb.tau_max);
  }
  raise(rep.primal_feasibility, (sol.T_co_star - total) / total);
  return rep;
}

}  // namespace fedl_lab::wireless
