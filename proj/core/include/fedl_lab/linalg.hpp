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
#include <vector>

namespace fedl_lab {

// Row-major dense matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<double> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  std::span<const double> data() const { return data_; }

  // Appends a row; the first call on an empty 0x0 matrix fixes cols().
  void push_row(std::span<const double> values);

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// scale * XᵀX as a cols x cols matrix.
DenseMatrix gram(const DenseMatrix& x, double scale);

// y = A v for square A.
void mat_vec(const DenseMatrix& a, std::span<const double> v,
             std::span<double> y);

// Lower-triangular Cholesky factor, or nullopt when A is not positive
// definite to working precision.
std::optional<DenseMatrix> cholesky(const DenseMatrix& a);

// Solves L Lᵀ x = b in place given the Cholesky factor.
void cholesky_solve(const DenseMatrix& l, std::span<double> b);

struct EigenEstimate {
  double value = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

// Largest eigenvalue of a symmetric PSD matrix by power iteration. Stops when
// the Rayleigh quotient changes by less than rel_tol relative.
EigenEstimate largest_eigenvalue(const DenseMatrix& a, double rel_tol = 1e-8,
                                 std::size_t max_iter = 20000);

// Smallest eigenvalue of a symmetric matrix by inverse iteration on its
// Cholesky factor. Returns value 0 when A is singular or indefinite.
EigenEstimate smallest_eigenvalue(const DenseMatrix& a, double rel_tol = 1e-8,
                                  std::size_t max_iter = 20000);

}  // namespace fedl_lab
