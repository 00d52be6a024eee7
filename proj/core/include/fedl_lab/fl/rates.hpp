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

#pragma once

namespace fedl_lab::fl {

// Linear-rate constants of the local solver: after k iterations the local
// gradient norm has shrunk by at least C (1 - gamma)^k with C = c * rho.
struct LocalSolverConstants {
  double c = 1.0;
  double gamma = 1.0;
  double rho = 1.0;

  double C() const { return c * rho; }

  // Gradient descent with step 1/L on an L-smooth, beta-strongly convex
  // function: c = 1, gamma = 1/rho.
  static LocalSolverConstants gradient_descent(double rho);

  // Throws InvalidInputError unless gamma in (0, 1] and C > 0.
  void validate() const;
};

// Per-round contraction factor of the global optimality gap,
//   eta (2(theta-1)^2 - (theta+1) theta (3 eta + 2) rho^2 - (theta+1) eta rho^2)
//   / (2 rho ((1+theta)^2 eta^2 rho^2 + 1)).
// Plain evaluation; a value outside (0, 1) is legal and means the linear-rate
// guarantee does not apply.
double theta_rate(double theta, double eta, double rho);

// Local iterations sufficient for accuracy theta: (2/gamma) ln(C/theta).
double k_l(double theta, const LocalSolverConstants& consts);

// Global rounds for accuracy eps from an initial gap: ln(gap0/eps) / Theta.
double k_g(double Theta, double gap0, double eps);

// k_g expressed through the ratio gap0/eps.
double k_g_from_ratio(double Theta, double gap0_over_eps);

}  // namespace fedl_lab::fl
