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

#include "fedl_lab/data/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "fedl_lab/errors.hpp"
#include "fedl_lab/rng.hpp"

namespace fedl_lab::data {

void SyntheticSpec::validate() const {
  if (n_users < 1) throw InvalidInputError("n_users must be >= 1");
  if (dim < 1) throw InvalidInputError("dim must be >= 1");
  if (!(target_rho >= 1.0)) throw InvalidInputError("target_rho must be >= 1");
  if (size_min > size_max) {
    throw InvalidInputError("size_range: min " + std::to_string(size_min) +
                            " exceeds max " + std::to_string(size_max));
  }
  if (size_min < 2) {
    throw InvalidInputError("size_range: min must be >= 2 so both splits "
                            "are non-empty");
  }
  if (!(size_law > 0.0)) throw InvalidInputError("size_law must be > 0");
  if (!(split > 0.0 && split < 1.0)) {
    throw InvalidInputError("split must lie in (0, 1)");
  }
  if (!(sigma_min > 0.0 && sigma_min <= sigma_max)) {
    throw InvalidInputError("sigma range must satisfy 0 < min <= max");
  }
  if (!(noise_variance >= 0.0)) {
    throw InvalidInputError("noise_variance must be >= 0");
  }
}

std::vector<double> covariance_diagonal(std::size_t dim, double target_rho) {
  std::vector<double> diag(dim, 1.0);
  if (dim < 2) return diag;
  const double p = std::log(target_rho) / std::log(static_cast<double>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    diag[i] = std::pow(static_cast<double>(i + 1), -p);
  }
  return diag;
}

SyntheticData generate_synthetic(const SyntheticSpec& spec) {
  spec.validate();
  // Single stream, consumed in a fixed order.
  Rng rng = make_stream(spec.seed, 0x5eed);
  std::normal_distribution<double> std_normal(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> sigma_dist(spec.sigma_min,
                                                    spec.sigma_max);

  SyntheticData out;
  const std::size_t d = spec.dim;
  const auto diag = covariance_diagonal(d, spec.target_rho);

  out.w_true.resize(d);
  for (double& v : out.w_true) v = std_normal(rng);

  const double noise_sd = std::sqrt(spec.noise_variance);
  const double span = static_cast<double>(spec.size_max - spec.size_min);
  for (std::size_t n = 0; n < spec.n_users; ++n) {
    const double sigma =
        spec.sigma_min == spec.sigma_max ? spec.sigma_min : sigma_dist(rng);
    out.sigma.push_back(sigma);
    const double u = unit(rng);
    const auto size = spec.size_min + static_cast<std::size_t>(std::floor(
                                          span * std::pow(u, spec.size_law)));

    DenseMatrix features(size, d);
    std::vector<double> labels(size);
    for (std::size_t i = 0; i < size; ++i) {
      auto row = features.row(i);
      for (std::size_t j = 0; j < d; ++j) {
        row[j] = std_normal(rng) * std::sqrt(sigma * diag[j]);
      }
      double y = 0.0;
      for (std::size_t j = 0; j < d; ++j) y += row[j] * out.w_true[j];
      labels[i] = y + noise_sd * std_normal(rng);
    }

    std::vector<std::size_t> order(size);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    auto n_train = static_cast<std::size_t>(
        std::floor(spec.split * static_cast<double>(size)));
    n_train = std::clamp<std::size_t>(n_train, 1, size - 1);

    UEDataset train;
    UEDataset test;
    for (std::size_t k = 0; k < size; ++k) {
      UEDataset& dst = k < n_train ? train : test;
      dst.features.push_row(features.row(order[k]));
      dst.labels.push_back(labels[order[k]]);
    }
    out.train.push_back(std::move(train));
    out.test.push_back(std::move(test));
  }
  assign_size_weights(out.train);
  assign_size_weights(out.test);
  return out;
}

}  // namespace fedl_lab::data
