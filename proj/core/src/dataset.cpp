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

#include "fedl_lab/dataset.hpp"

#include <string>

#include "fedl_lab/errors.hpp"

namespace fedl_lab {

void assign_size_weights(std::span<UEDataset> datasets) {
  double total = 0.0;
  for (std::size_t n = 0; n < datasets.size(); ++n) {
    if (datasets[n].size() == 0) {
      throw InvalidInputError("UE " + std::to_string(n) + " has no samples");
    }
    total += static_cast<double>(datasets[n].size());
  }
  for (auto& ds : datasets) {
    ds.weight = static_cast<double>(ds.size()) / total;
  }
}

void validate_datasets(std::span<const UEDataset> datasets) {
  if (datasets.empty()) throw InvalidInputError("no UE datasets");
  const std::size_t d = datasets.front().dim();
  for (std::size_t n = 0; n < datasets.size(); ++n) {
    const auto& ds = datasets[n];
    if (ds.size() == 0) {
      throw InvalidInputError("UE " + std::to_string(n) + " has no samples");
    }
    if (ds.features.rows() != ds.labels.size()) {
      throw InvalidInputError("UE " + std::to_string(n) +
                              ": feature rows and labels disagree");
    }
    if (ds.dim() != d) {
      throw SchemaError("UE " + std::to_string(n) + " has dimension " +
                        std::to_string(ds.dim()) + ", expected " +
                        std::to_string(d));
    }
  }
}

}  // namespace fedl_lab
