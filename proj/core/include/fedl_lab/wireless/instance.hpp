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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fedl_lab/fl/rates.hpp"
#include "fedl_lab/wireless/ue_model.hpp"

namespace fedl_lab::wireless {

// Random instance with the benchmark scales: distances U(2, 50) m, mean
// gain g0 (d0/d)^4 with exponential fading, sizes U(5, 10) MB, c U(10, 30)
// cycles/bit, f_max U(1, 2) GHz, f_min 0.3 GHz, power in [0.2, 1] W.
struct InstanceOptions {
  std::size_t n_ues = 5;
  std::uint64_t seed = 0;
  double distance_min = 2.0;     // m
  double distance_max = 50.0;    // m
  double g0 = 1e-4;              // -40 dB at d0 = 1 m
  double path_loss_exponent = 4.0;
  bool fading = true;            // exponential around the mean gain
  double bandwidth = 1e6;        // Hz
  double noise = 1e-10;          // W
  double p_min = 0.2;            // W
  double p_max = 1.0;            // W
  double data_mb_min = 5.0;      // MB, 1 MB = 8e6 bits
  double data_mb_max = 10.0;
  double c_min = 10.0;           // cycles/bit
  double c_max = 30.0;
  double f_max_min = 1e9;        // Hz
  double f_max_max = 2e9;
  double f_min = 0.3e9;
  double alpha = 2e-28;
  double s_nats = 25000.0;
  double kappa = 1.0;
};

struct Instance {
  SystemParams sys;
  std::vector<UEProfile> ues;
  double rho = 2.0;  // condition number used by SUB3
  fl::LocalSolverConstants consts = fl::LocalSolverConstants::gradient_descent(2.0);
  double gap0_over_eps = 2.718281828459045;
};

Instance generate_instance(const InstanceOptions& options);

// JSON document {"system": {B, N0, kappa, N}, "ues": [{c_n, D_n, alpha_n,
// f_min, f_max, hbar_n, p_min, p_max, s_n}, ...], "rho", "local_solver":
// {"c", "gamma"}, "gap0_over_eps"}. The last three are optional; the local
// solver defaults to c = 1, gamma = 1/rho.
Instance parse_instance(std::string_view json_text);
std::string instance_to_json(const Instance& instance);

}  // namespace fedl_lab::wireless
