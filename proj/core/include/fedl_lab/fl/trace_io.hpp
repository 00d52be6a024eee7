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

#include <optional>
#include <string>
#include <string_view>

#include "fedl_lab/fl/trace.hpp"
#include "fedl_lab/loss.hpp"

namespace fedl_lab::fl {

// Training configuration as JSON. Keys are exactly the TrainConfig field
// names (eta, theta, K_g, K_l, h, batch, S, seed); batch is an integer or
// "FULL". An optional "loss" object {"kind", "classes", "reg"} selects the
// model. Unknown keys are rejected.
struct TrainFile {
  TrainConfig config;
  LossModel model;
};

TrainFile parse_train_config(std::string_view json_text);
std::string train_config_to_json(const TrainConfig& cfg,
                                 const LossModel& model);

// round,global_loss,test_accuracy,grad_bar_norm,mean_local_iters,elapsed_ms
std::string trace_to_csv(const TrainingTrace& trace);

}  // namespace fedl_lab::fl
