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
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "fedl_lab/errors.hpp"
#include "fedl_lab/model_vector.hpp"

namespace fedl_lab::fl {

struct TrainConfig {
  double eta = 1.0;     // hyper-learning rate
  double theta = 0.1;   // local accuracy
  std::size_t K_g = 200;
  std::size_t K_l = 20;  // local iteration cap
  double h = 0.01;       // local step size
  std::optional<std::size_t> batch;  // nullopt: full batch
  std::optional<std::size_t> S;      // UEs per round; nullopt: all
  std::uint64_t seed = 0;

  std::size_t subset_size(std::size_t n_ues) const { return S.value_or(n_ues); }

  // Throws InvalidInputError on the first violated constraint. eta = 0 is
  // accepted: it pins the model at w0.
  void validate(std::size_t n_ues) const;
};

struct RoundRecord {
  std::size_t round = 0;  // 1-based
  double global_loss = 0.0;
  double test_accuracy = std::numeric_limits<double>::quiet_NaN();
  double grad_bar_norm = 0.0;
  double mean_local_iters = 0.0;
  double elapsed_ms = 0.0;  // since the start of training
  std::vector<std::size_t> sampled;      // ascending UE indices
  std::vector<std::size_t> local_iters;  // aligned with sampled
  std::vector<bool> hit_cap;             // aligned with sampled
};

struct TrainingTrace {
  std::string algorithm;
  double initial_loss = 0.0;  // F(w0)
  std::vector<RoundRecord> rounds;
  ModelVector final_w;
};

// A local iterate or the aggregated model stopped being finite. Carries the
// rounds completed before the failure.
class DivergenceError : public NumericalError {
 public:
  static constexpr std::size_t kServer = std::numeric_limits<std::size_t>::max();

  DivergenceError(const std::string& what, std::size_t ue, std::size_t round,
                  TrainingTrace partial = {})
      : NumericalError(what), ue_(ue), round_(round),
        partial_(std::move(partial)) {}

  std::size_t ue() const { return ue_; }
  std::size_t round() const { return round_; }
  const TrainingTrace& partial_trace() const { return partial_; }

 private:
  std::size_t ue_;
  std::size_t round_;
  TrainingTrace partial_;
};

}  // namespace fedl_lab::fl
