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

#include "fedl_lab/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fedl_lab/errors.hpp"

namespace fedl_lab {

double CurvatureConstants::rho() const {
  if (beta <= 0.0) return std::numeric_limits<double>::infinity();
  return L / beta;
}

CurvatureConstants estimate_curvature(const LossModel& model,
                                      std::span<const UEDataset> datasets) {
  model.validate();
  validate_datasets(datasets);
  CurvatureConstants out;
  double max_top = 0.0;
  double min_bottom = std::numeric_limits<double>::infinity();
  for (const auto& ds : datasets) {
    const double scale = (model.kind == LossKind::kMseLinear ? 2.0 : 1.0) /
                         static_cast<double>(ds.size());
    const DenseMatrix g = gram(ds.features, scale);
    max_top = std::max(max_top, largest_eigenvalue(g).value);
    if (model.kind == LossKind::kMseLinear) {
      min_bottom = std::min(min_bottom, smallest_eigenvalue(g).value);
    }
  }
  if (model.kind == LossKind::kMseLinear) {
    out.L = max_top;
    out.beta = std::max(0.0, min_bottom);
  } else {
    // Softmax cross-entropy Hessian is bounded by (1/2)(I - 11ᵀ/C) ⊗ XᵀX/D.
    out.L = 0.5 * max_top + model.reg;
    out.beta = model.reg;
  }
  return out;
}

}  // namespace fedl_lab
