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

#include <span>

#include "fedl_lab/dataset.hpp"
#include "fedl_lab/loss.hpp"

namespace fedl_lab {

// Uniform smoothness / strong-convexity bounds over all UEs.
struct CurvatureConstants {
  double L = 0.0;
  double beta = 0.0;

  // L / beta; +inf when beta == 0. Callers must reject an infinite value.
  double rho() const;
};

// mse-linear: L and beta are the extreme eigenvalues of (2/D_n) XᵀX taken
// over all UEs (max of the largest, min of the smallest).
// multinomial-logistic: beta = reg, L = max_n lambda_max(XᵀX/D_n)/2 + reg.
// Singular unregularized data reports beta = 0.
CurvatureConstants estimate_curvature(const LossModel& model,
                                      std::span<const UEDataset> datasets);

}  // namespace fedl_lab
