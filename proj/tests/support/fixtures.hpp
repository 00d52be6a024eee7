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

// Small random problems shared by the test binaries.
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fedl_lab/dataset.hpp"
#include "fedl_lab/model_vector.hpp"
#include "fedl_lab/rng.hpp"
#include "fedl_lab/wireless/instance.hpp"

namespace fedl_lab::testing {

ModelVector random_vector(Rng& rng, std::size_t dim, double scale = 1.0);

// Gaussian features with per-column scales in [1, spread], labels from a
// random linear model plus noise.
UEDataset regression_ue(Rng& rng, std::size_t rows, std::size_t dim,
                        double spread = 1.0, double noise = 0.1);

// Gaussian features, labels drawn uniformly from {0, ..., classes-1}.
UEDataset classification_ue(Rng& rng, std::size_t rows, std::size_t dim,
                            std::size_t classes);

// Several regression UEs with size-proportional weights.
std::vector<UEDataset> regression_ues(std::uint64_t seed, std::size_t count,
                                      std::size_t rows, std::size_t dim);

// Five-UE instance at the benchmark scales.
wireless::Instance wireless_instance(std::uint64_t seed, double kappa = 1.0,
                                 std::size_t n_ues = 5);

}  // namespace fedl_lab::testing
