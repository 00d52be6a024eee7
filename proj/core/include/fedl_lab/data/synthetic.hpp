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

#include "fedl_lab/dataset.hpp"

namespace fedl_lab::data {

// Heterogeneous linear-regression data. UE n draws features from
// N(0, sigma_n * Sigma) with Sigma_ii = i^{-p}, p = log(target_rho)/log(dim),
// sigma_n ~ U(sigma_min, sigma_max). Labels are y = <x, w_true> + noise with a
// single w_true ~ N(0, I) shared by all UEs.
struct SyntheticSpec {
  std::size_t n_users = 100;
  std::size_t dim = 40;
  double target_rho = 1.0;
  std::size_t size_min = 500;
  std::size_t size_max = 5326;
  // D_n = size_min + floor((size_max - size_min) * u^size_law), u ~ U(0,1).
  double size_law = 3.0;
  double split = 0.75;  // train fraction
  std::uint64_t seed = 0;
  double sigma_min = 1.0;
  double sigma_max = 10.0;
  double noise_variance = 0.05;

  // Throws InvalidInputError describing the first violated constraint.
  void validate() const;
};

struct SyntheticData {
  std::vector<UEDataset> train;
  std::vector<UEDataset> test;
  std::vector<double> w_true;
  std::vector<double> sigma;  // per-UE covariance scale
};

// Diagonal of Sigma for the given spec (length dim).
std::vector<double> covariance_diagonal(std::size_t dim, double target_rho);

// Deterministic in spec (including seed).
SyntheticData generate_synthetic(const SyntheticSpec& spec);

// JSON object with keys n_users, dim, target_rho, size_range [min, max],
// size_law, split, seed, sigma_range [min, max] and noise_variance. Missing
// keys keep their defaults; unknown keys and invalid specs throw
// InvalidInputError.
SyntheticSpec parse_synthetic_spec(std::string_view json_text);
std::string synthetic_spec_to_json(const SyntheticSpec& spec);

}  // namespace fedl_lab::data
