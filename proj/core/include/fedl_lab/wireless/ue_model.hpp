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

#include <cstddef>
#include <span>

namespace fedl_lab::wireless {

// Physical profile of one UE. D_n is in bits and c_n in CPU cycles per bit;
// s_n is the uplink update size in nats.
struct UEProfile {
  double c_n = 0.0;
  double D_n = 0.0;
  double alpha_n = 0.0;  // energy per local round is (alpha_n/2) c_n D_n f^2
  double f_min = 0.0;    // Hz
  double f_max = 0.0;    // Hz
  double hbar_n = 0.0;   // mean channel gain
  double p_min = 0.0;    // W
  double p_max = 0.0;    // W
  double s_n = 0.0;      // nats

  // Cycles per local round, c_n D_n.
  double load() const { return c_n * D_n; }

  // Throws InvalidInputError naming the offending field.
  void validate() const;
};

struct SystemParams {
  double B = 1e6;     // Hz
  double N0 = 1e-10;  // W
  double kappa = 1.0;  // J/s
  std::size_t N = 0;

  void validate() const;
};

// Validates every profile, sys, and that sys.N matches (0 means "unset").
void validate_instance(std::span<const UEProfile> ues, const SystemParams& sys);

// (alpha/2) c D f^2
double energy_cp(const UEProfile& ue, double f);
// c D / f
double time_cp(const UEProfile& ue, double f);

// Transmit power needed to push s_n nats in tau seconds:
// (N0/hbar) (exp(s/(tau B)) - 1).
double power_of_tau(const UEProfile& ue, const SystemParams& sys, double tau);
// tau * power_of_tau(tau)
double energy_co(const UEProfile& ue, const SystemParams& sys, double tau);

struct TauBounds {
  double tau_min = 0.0;  // at p_max
  double tau_max = 0.0;  // at p_min
};

TauBounds tau_bounds(const UEProfile& ue, const SystemParams& sys);

// Transmission time minimizing energy_co(tau) + kappa tau without bounds:
// (s/B) / (1 + W0((kappa hbar/N0 - 1)/e)). Strictly decreasing in kappa.
double g_fn(const UEProfile& ue, const SystemParams& sys, double kappa);

// Inverse of g_fn, -d energy_co / d tau = (N0/hbar)(e^x (x - 1) + 1) with
// x = s/(tau B).
double g_inv(const UEProfile& ue, const SystemParams& sys, double tau);

}  // namespace fedl_lab::wireless
