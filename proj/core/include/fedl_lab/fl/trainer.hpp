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
#include <vector>

#include "fedl_lab/dataset.hpp"
#include "fedl_lab/fl/trace.hpp"
#include "fedl_lab/loss.hpp"
#include "fedl_lab/model_vector.hpp"

namespace fedl_lab::fl {

struct LocalUpdate {
  std::size_t ue = 0;
  double weight = 0.0;  // p_n before renormalization
  ModelVector w;
  ModelVector grad;
};

struct Aggregate {
  ModelVector w;
  ModelVector gbar;
};

// Weighted averages of the local models and gradients with weights
// renormalized over the given updates, summed in ascending UE order.
// Throws InvalidInputError for an empty set or non-positive total weight.
Aggregate aggregate(std::span<const LocalUpdate> locals);

struct RunOptions {
  std::span<const UEDataset> test;  // accuracy source; may be empty
  ModelVector w0;                   // empty: zero vector
};

// FEDL. Every round samples S UEs uniformly without replacement,
// solves each surrogate to accuracy theta (at most K_l steps of size h) and
// aggregates models and gradients. Initial feedback gbar0 is the aggregated
// gradient at w0 over all UEs. Throws DivergenceError with the partial trace.
TrainingTrace run_fedl(const TrainConfig& cfg,
                       std::span<const UEDataset> ues, const LossModel& model,
                       const RunOptions& options = {});

// FedAvg baseline: K_l local (mini-batch) GD steps on F_n, model averaging
// with the same sampling and renormalization as run_fedl.
TrainingTrace run_fedavg(const TrainConfig& cfg,
                         std::span<const UEDataset> ues,
                         const LossModel& model,
                         const RunOptions& options = {});

// Sampled UE indices for a round, ascending. Exposed for tests.
std::vector<std::size_t> sample_ues(std::size_t n_ues, std::size_t subset,
                                    std::uint64_t seed, std::size_t round);

}  // namespace fedl_lab::fl
