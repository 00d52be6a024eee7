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
#include <span>
#include <string>
#include <string_view>

#include "fedl_lab/dataset.hpp"
#include "fedl_lab/model_vector.hpp"

namespace fedl_lab {

enum class LossKind { kMseLinear, kMultinomialLogistic };

std::string_view to_string(LossKind kind);
// Accepts "mse-linear" and "multinomial-logistic".
LossKind parse_loss_kind(std::string_view name);

// Empirical loss definition shared by all UEs.
//
//   mse-linear:            F_n(w) = 1/D_n sum (<x_i, w> - y_i)^2
//   multinomial-logistic:  F_n(w) = -1/D_n sum log softmax(W x_i)_{y_i}
//                                   + reg/2 ||w||^2
struct LossModel {
  LossKind kind = LossKind::kMseLinear;
  std::size_t classes = 1;  // C, multinomial only
  double reg = 0.0;         // l2 coefficient, multinomial only

  static LossModel mse_linear() { return {}; }
  static LossModel multinomial(std::size_t classes, double reg) {
    return {LossKind::kMultinomialLogistic, classes, reg};
  }

  // Length of w for feature dimension d.
  std::size_t parameter_count(std::size_t feature_dim) const;

  // Throws InvalidInputError when the model itself is malformed.
  void validate() const;
};

double loss(const LossModel& model, const ModelVector& w,
            const UEDataset& data);

// Gradient of the empirical loss over `batch` (sample indices) or over all
// samples when batch is absent. An empty batch is an InvalidInputError.
ModelVector grad(const LossModel& model, const ModelVector& w,
                 const UEDataset& data,
                 std::optional<std::span<const std::size_t>> batch = {});

// Global objective F(w) = sum_n p_n F_n(w).
double global_loss(const LossModel& model, const ModelVector& w,
                   std::span<const UEDataset> datasets);

// Fraction of correctly classified samples pooled over all datasets.
// Multinomial only.
double accuracy(const LossModel& model, const ModelVector& w,
                std::span<const UEDataset> datasets);

// Full-batch evaluator for one UE. For mse-linear it caches XᵀX/D_n, Xᵀy/D_n
// and yᵀy/D_n so each call costs O(d^2) instead of O(D_n d); other models
// fall through to loss()/grad().
class LocalObjective {
 public:
  LocalObjective(const LossModel& model, const UEDataset& data);

  double value(const ModelVector& w) const;
  ModelVector gradient(const ModelVector& w) const;

  const UEDataset& data() const { return *data_; }
  const LossModel& model() const { return model_; }

 private:
  LossModel model_;
  const UEDataset* data_;
  bool quadratic_ = false;
  DenseMatrix xtx_;              // XᵀX / D_n
  std::vector<double> xty_;      // Xᵀy / D_n
  double yty_ = 0.0;             // yᵀy / D_n
};

}  // namespace fedl_lab
