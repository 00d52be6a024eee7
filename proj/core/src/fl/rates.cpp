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

#include "fedl_lab/fl/rates.hpp"

#include <cmath>

#include "fedl_lab/errors.hpp"

namespace fedl_lab::fl {

LocalSolverConstants LocalSolverConstants::gradient_descent(double rho) {
  if (!(rho >= 1.0) || !std::isfinite(rho)) {
    throw InvalidInputError("condition number must be finite and >= 1");
  }
  return {1.0, 1.0 / rho, rho};
}

void LocalSolverConstants::validate() const {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw InvalidInputError("local rate gamma must lie in (0, 1]");
  }
  if (!(C() > 0.0) || !std::isfinite(C())) {
    throw InvalidInputError("local rate prefactor C must be positive");
  }
}

double theta_rate(double theta, double eta, double rho) {
  const double tp1 = theta + 1.0;
  const double tm1 = theta - 1.0;
  const double r2 = rho * rho;
  const double num =
      eta * (2.0 * tm1 * tm1 - tp1 * theta * (3.0 * eta + 2.0) * r2 -
             tp1 * eta * r2);
  const double den = 2.0 * rho * (tp1 * tp1 * eta * eta * r2 + 1.0);
  return num / den;
}

double k_l(double theta, const LocalSolverConstants& consts) {
  consts.validate();
  if (!(theta > 0.0)) {
    throw InvalidInputError("local accuracy theta must be positive");
  }
  return (2.0 / consts.gamma) * std::log(consts.C() / theta);
}

double k_g(double Theta, double gap0, double eps) {
  if (!(gap0 > 0.0) || !(eps > 0.0)) {
    throw InvalidInputError("gap0 and eps must be positive");
  }
  return k_g_from_ratio(Theta, gap0 / eps);
}

double k_g_from_ratio(double Theta, double gap0_over_eps) {
  if (!(Theta > 0.0)) throw InvalidInputError("Theta must be positive");
  if (!(gap0_over_eps > 0.0)) {
    throw InvalidInputError("gap0/eps must be positive");
  }
  return std::log(gap0_over_eps) / Theta;
}

}  // namespace fedl_lab::fl
