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
#include <optional>

#include "fedl_lab/dataset.hpp"
#include "fedl_lab/loss.hpp"
#include "fedl_lab/model_vector.hpp"
#include "fedl_lab/rng.hpp"

namespace fedl_lab::fl {

// Gradient of the local surrogate
//   J(w) = F_n(w) + <eta * gbar - grad F_n(w_prev), w>,
// i.e. grad F_n(w) + eta * gbar - grad F_n(w_prev).
ModelVector surrogate_grad(const ModelVector& w, const ModelVector& w_prev,
                           const ModelVector& gbar, double eta,
                           const UEDataset& ue, const LossModel& model);

// J(w) itself, for finite-difference checks.
double surrogate_value(const ModelVector& w, const ModelVector& w_prev,
                       const ModelVector& gbar, double eta,
                       const UEDataset& ue, const LossModel& model);

struct LocalSolveOptions {
  double eta = 1.0;
  double theta = 0.1;
  std::size_t cap = 20;
  double h = 0.01;
  std::optional<std::size_t> batch;  // nullopt: full batch
};

struct LocalResult {
  ModelVector w;
  ModelVector grad_f;  // full-batch grad F_n at w, sent to the server
  std::size_t iterations = 0;
  bool hit_cap = false;  // stopped at the cap without meeting theta
};

// Gradient descent on J from z0 = w_prev until
// ||grad J(z_k)|| <= theta ||grad J(w_prev)|| or k == cap. Mini-batch steps
// draw indices from `rng`; the stopping test always uses the full-batch
// surrogate gradient. Throws DivergenceError (tagged with ue_index) when an
// iterate is not finite.
LocalResult local_solve(const LocalObjective& objective,
                        const ModelVector& w_prev, const ModelVector& gbar,
                        const LocalSolveOptions& options, Rng& rng,
                        std::size_t ue_index = 0);

LocalResult local_solve(const ModelVector& w_prev, const ModelVector& gbar,
                        const LocalSolveOptions& options, const UEDataset& ue,
                        const LossModel& model, std::uint64_t seed = 0);

// `steps` iterations of (mini-batch) gradient descent on F_n alone.
LocalResult local_gd(const LocalObjective& objective, const ModelVector& w0,
                     std::size_t steps, double h,
                     std::optional<std::size_t> batch, Rng& rng,
                     std::size_t ue_index = 0);

}  // namespace fedl_lab::fl
