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

#include "fedl_lab/linalg.hpp"

namespace fedl_lab {

// One UE's local samples. Labels are real targets for regression and class
// indices stored as doubles for classification. weight is p_n = D_n / D.
struct UEDataset {
  DenseMatrix features;
  std::vector<double> labels;
  double weight = 0.0;

  std::size_t size() const { return labels.size(); }
  std::size_t dim() const { return features.cols(); }

  friend bool operator==(const UEDataset&, const UEDataset&) = default;
};

// Sets p_n = D_n / sum D. Throws InvalidInputError on an empty dataset.
void assign_size_weights(std::span<UEDataset> datasets);

// Throws InvalidInputError when labels/features disagree or any UE is empty,
// SchemaError when the feature dimension differs across UEs.
void validate_datasets(std::span<const UEDataset> datasets);

}  // namespace fedl_lab
