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

#include "support/fixtures.hpp"

#include <random>

namespace fedl_lab::testing {

ModelVector random_vector(Rng& rng, std::size_t dim, double scale) {
  std::normal_distribution<double> n(0.0, scale);
  ModelVector v(dim);
  for (auto& x : v) x = n(rng);
  return v;
}

UEDataset regression_ue(Rng& rng, std::size_t rows, std::size_t dim,
                        double spread, double noise) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::uniform_real_distribution<double> u(1.0, spread);
  std::vector<double> scale(dim);
  for (auto& s : scale) s = spread > 1.0 ? u(rng) : 1.0;
  const ModelVector w = random_vector(rng, dim);
  UEDataset ue;
  ue.features = DenseMatrix(rows, dim);
  ue.labels.resize(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    double y = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
      ue.features(i, j) = scale[j] * n(rng);
      y += ue.features(i, j) * w[j];
    }
    ue.labels[i] = y + noise * n(rng);
  }
  ue.weight = 1.0;
  return ue;
}

UEDataset classification_ue(Rng& rng, std::size_t rows, std::size_t dim,
                            std::size_t classes) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> label(0, classes - 1);
  UEDataset ue;
  ue.features = DenseMatrix(rows, dim);
  ue.labels.resize(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < dim; ++j) ue.features(i, j) = n(rng);
    ue.labels[i] = static_cast<double>(label(rng));
  }
  ue.weight = 1.0;
  return ue;
}

std::vector<UEDataset> regression_ues(std::uint64_t seed, std::size_t count,
                                      std::size_t rows, std::size_t dim) {
  Rng rng = make_stream(seed, 77);
  std::vector<UEDataset> out;
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(regression_ue(rng, rows + 7 * k, dim, 2.0));
  }
  assign_size_weights(out);
  return out;
}

wireless::Instance wireless_instance(std::uint64_t seed, double kappa,
                                 std::size_t n_ues) {
  wireless::InstanceOptions opt;
  opt.seed = seed;
  opt.kappa = kappa;
  opt.n_ues = n_ues;
  return wireless::generate_instance(opt);
}

}  // namespace fedl_lab::testing
