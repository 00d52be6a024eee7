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

#include <gtest/gtest.h>

#include <vector>

#include "fedl_lab/dataset.hpp"
#include "fedl_lab/errors.hpp"
#include "fedl_lab/linalg.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace fedl_lab {
namespace {

DenseMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c) {
  std::normal_distribution<double> n(0.0, 1.0);
  DenseMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = n(rng);
  }
  return m;
}

TEST(Linalg, GramIsScaledTransposeProduct) {
  Rng rng = make_stream(1);
  const auto x = random_matrix(rng, 30, 4);
  const auto g = gram(x, 0.5);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      double s = 0.0;
      for (std::size_t r = 0; r < 30; ++r) s += x(r, i) * x(r, j);
      EXPECT_NEAR(g(i, j), 0.5 * s, 1e-12);
    }
  }
}

TEST(Linalg, CholeskySolveRecoversRightHandSide) {
  Rng rng = make_stream(2);
  const auto a = gram(random_matrix(rng, 50, 6), 1.0);
  const auto l = cholesky(a);
  ASSERT_TRUE(l.has_value());
  const auto x = testing::random_vector(rng, 6);
  std::vector<double> b(6);
  mat_vec(a, x.values(), b);
  cholesky_solve(*l, b);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(b[i], x[i], 1e-10);
}

TEST(Linalg, CholeskyRejectsSingularMatrix) {
  DenseMatrix a(2, 2, 1.0);
  EXPECT_FALSE(cholesky(a).has_value());
}

TEST(Linalg, ExtremeEigenvaluesMatchDenseSolver) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Rng rng = make_stream(seed, 3);
    const auto a = gram(random_matrix(rng, 40, 8), 1.0 / 40);
    const auto ref = testing::symmetric_spectrum(a);
    const auto hi = largest_eigenvalue(a);
    const auto lo = smallest_eigenvalue(a);
    EXPECT_TRUE(hi.converged);
    EXPECT_TRUE(lo.converged);
    EXPECT_NEAR(hi.value, ref.max, 1e-6 * ref.max);
    EXPECT_NEAR(lo.value, ref.min, 1e-6 * ref.max);
  }
}

TEST(Linalg, PushRowChecksWidth) {
  DenseMatrix m;
  const std::vector<double> r3{1, 2, 3}, r2{1, 2};
  m.push_row(r3);
  m.push_row(r3);
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m.cols(), 3u);
  EXPECT_THROW(m.push_row(r2), InvalidInputError);
}

TEST(Datasets, SizeWeightsSumToOne) {
  auto ues = testing::regression_ues(4, 7, 13, 3);
  double total = 0.0;
  for (const auto& ue : ues) total += ue.weight;
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(ues[0].weight / ues[1].weight, 13.0 / 20.0);
}

TEST(Datasets, ValidationCatchesMismatchedDimensions) {
  auto ues = testing::regression_ues(5, 2, 10, 3);
  EXPECT_NO_THROW(validate_datasets(ues));
  Rng rng = make_stream(5);
  ues.push_back(testing::regression_ue(rng, 10, 4));
  EXPECT_THROW(validate_datasets(ues), SchemaError);
  std::vector<UEDataset> none;
  EXPECT_THROW(validate_datasets(none), InvalidInputError);
}

}  // namespace
}  // namespace fedl_lab
