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

#include "fedl_lab/wireless/sub3.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fedl_lab/errors.hpp"

namespace fedl_lab::wireless {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_point(double lo, double hi, std::size_t i, std::size_t count) {
  if (count == 1) return std::log(lo);
  const double t = static_cast<double>(i) / static_cast<double>(count - 1);
  return std::log(lo) + t * (std::log(hi) - std::log(lo));
}

}  // namespace

RoundCosts round_costs(const Sub1Solution& sub1, const Sub2Solution& sub2) {
  return {sub2.total_energy, sub2.T_co_star, sub1.total_energy,
          sub1.T_cp_star};
}

double sub3_objective(const RoundCosts& costs,
                      const fl::LocalSolverConstants& consts, double rho,
                      double kappa, double theta, double eta) {
  const double Theta = fl::theta_rate(theta, eta, rho);
  if (!(Theta > 0.0 && Theta < 1.0)) return kInf;
  const double kl = fl::k_l(theta, consts);
  return (costs.E_co + kl * costs.E_cp +
          kappa * (costs.T_co + kl * costs.T_cp)) /
         Theta;
}

Sub3Solution solve_sub3(const Sub1Solution& sub1, const Sub2Solution& sub2,
                        const fl::LocalSolverConstants& consts, double rho,
                        double kappa, const Sub3Options& options) {
  return solve_sub3(round_costs(sub1, sub2), consts, rho, kappa, options);
}

Sub3Solution solve_sub3(const RoundCosts& costs,
                        const fl::LocalSolverConstants& consts, double rho,
                        double kappa, const Sub3Options& options) {
  consts.validate();
  if (!(rho >= 1.0) || !std::isfinite(rho)) {
    throw InvalidInputError("rho must be finite and >= 1");
  }
  if (!(options.theta_lo > 0.0 && options.theta_lo < options.theta_hi &&
        options.theta_hi < 1.0 && options.eta_lo > 0.0 &&
        options.eta_lo < options.eta_hi && options.grid >= 2)) {
    throw InvalidInputError("malformed SUB3 search box");
  }

  const double lt_lo = std::log(options.theta_lo);
  const double lt_hi = std::log(options.theta_hi);
  const double le_lo = std::log(options.eta_lo);
  const double le_hi = std::log(options.eta_hi);
  auto eval = [&](double lt, double le) {
    return sub3_objective(costs, consts, rho, kappa, std::exp(lt),
                          std::exp(le));
  };

  double best = kInf;
  double best_lt = 0.0, best_le = 0.0;
  double max_Theta = -kInf;
  for (std::size_t i = 0; i < options.grid; ++i) {
    const double lt = log_point(options.theta_lo, options.theta_hi, i,
                                options.grid);
    for (std::size_t j = 0; j < options.grid; ++j) {
      const double le = log_point(options.eta_lo, options.eta_hi, j,
                                  options.grid);
      max_Theta = std::max(
          max_Theta, fl::theta_rate(std::exp(lt), std::exp(le), rho));
      const double v = eval(lt, le);
      if (v < best) {
        best = v;
        best_lt = lt;
        best_le = le;
      }
    }
  }
  if (!std::isfinite(best)) {
    std::ostringstream msg;
    msg << "no (theta, eta) in the search box gives Theta in (0, 1) at rho = "
        << rho << "; largest Theta found " << max_Theta;
    throw InfeasibleError(msg.str(), max_Theta);
  }

  // Coordinate descent from the best grid point, halving the step whenever
  // no axis move improves.
  double step = std::max((lt_hi - lt_lo), (le_hi - le_lo)) /
                static_cast<double>(options.grid - 1);
  while (step >= options.refine_tol) {
    bool moved = false;
    for (int axis = 0; axis < 2; ++axis) {
      for (double dir : {-1.0, 1.0}) {
        double lt = best_lt, le = best_le;
        (axis == 0 ? lt : le) += dir * step;
        lt = std::clamp(lt, lt_lo, lt_hi);
        le = std::clamp(le, le_lo, le_hi);
        const double v = eval(lt, le);
        if (v < best) {
          best = v;
          best_lt = lt;
          best_le = le;
          moved = true;
        }
      }
    }
    if (!moved) step *= 0.5;
  }

  Sub3Solution sol;
  sol.theta_star = std::exp(best_lt);
  sol.eta_star = std::exp(best_le);
  sol.Theta = fl::theta_rate(sol.theta_star, sol.eta_star, rho);
  sol.K_l = fl::k_l(sol.theta_star, consts);
  sol.objective = best;
  return sol;
}

}  // namespace fedl_lab::wireless
