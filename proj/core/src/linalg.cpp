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

#include "fedl_lab/linalg.hpp"

#include <cmath>
#include <numeric>

#include "fedl_lab/errors.hpp"

namespace fedl_lab {

void DenseMatrix::push_row(std::span<const double> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) {
    throw InvalidInputError("push_row: expected " + std::to_string(cols_) +
                            " columns, got " + std::to_string(values.size()));
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

DenseMatrix gram(const DenseMatrix& x, double scale) {
  const std::size_t d = x.cols();
  DenseMatrix g(d, d);
  for (std::size_t r = 0; r < x.rows(); ++r) {
    auto row = x.row(r);
    for (std::size_t i = 0; i < d; ++i) {
      const double xi = row[i];
      if (xi == 0.0) continue;
      for (std::size_t j = i; j < d; ++j) g(i, j) += xi * row[j];
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      g(i, j) *= scale;
      g(j, i) = g(i, j);
    }
  }
  return g;
}

void mat_vec(const DenseMatrix& a, std::span<const double> v,
             std::span<double> y) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto row = a.row(i);
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += row[j] * v[j];
    y[i] = s;
  }
}

std::optional<DenseMatrix> cholesky(const DenseMatrix& a) {
  const std::size_t n = a.rows();
  DenseMatrix l(n, n);
  double max_diag = 0.0;
  for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, a(i, i));
  const double floor = 64.0 * n * 2.2e-16 * max_diag;
  for (std::size_t j = 0; j < n; ++j) {
    double diag = a(j, j);
    for (std::size_t k = 0; k < j; ++k) diag -= l(j, k) * l(j, k);
    if (!(diag > floor)) return std::nullopt;
    const double ljj = std::sqrt(diag);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / ljj;
    }
  }
  return l;
}

void cholesky_solve(const DenseMatrix& l, std::span<double> b) {
  const std::size_t n = l.rows();
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * b[k];
    b[i] = s / l(i, i);
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= l(k, i) * b[k];
    b[i] = s / l(i, i);
  }
}

namespace {

double normalize(std::vector<double>& v) {
  double n = 0.0;
  for (double x : v) n += x * x;
  n = std::sqrt(n);
  if (n > 0.0) {
    for (double& x : v) x /= n;
  }
  return n;
}

// Deterministic start vector with a component along every axis.
std::vector<double> start_vector(std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 0.37 * std::sin(1.0 + i);
  normalize(v);
  return v;
}

}  // namespace

EigenEstimate largest_eigenvalue(const DenseMatrix& a, double rel_tol,
                                 std::size_t max_iter) {
  const std::size_t n = a.rows();
  EigenEstimate out;
  if (n == 0) return out;
  std::vector<double> v = start_vector(n);
  std::vector<double> av(n);
  double lambda = 0.0;
  for (std::size_t it = 1; it <= max_iter; ++it) {
    mat_vec(a, v, av);
    double rq = 0.0;
    for (std::size_t i = 0; i < n; ++i) rq += v[i] * av[i];
    v = av;
    const double len = normalize(v);
    out.iterations = it;
    if (len == 0.0) {
      out.value = 0.0;
      out.converged = true;
      return out;
    }
    if (it > 1 && std::abs(rq - lambda) <= rel_tol * std::abs(rq)) {
      out.value = rq;
      out.converged = true;
      return out;
    }
    lambda = rq;
  }
  out.value = lambda;
  return out;
}

EigenEstimate smallest_eigenvalue(const DenseMatrix& a, double rel_tol,
                                  std::size_t max_iter) {
  const std::size_t n = a.rows();
  EigenEstimate out;
  if (n == 0) return out;
  auto l = cholesky(a);
  if (!l) {
    out.converged = true;
    return out;
  }
  std::vector<double> v = start_vector(n);
  std::vector<double> av(n);
  double lambda = 0.0;
  for (std::size_t it = 1; it <= max_iter; ++it) {
    std::vector<double> w = v;
    cholesky_solve(*l, w);
    normalize(w);
    mat_vec(a, w, av);
    double rq = 0.0;
    for (std::size_t i = 0; i < n; ++i) rq += w[i] * av[i];
    v = std::move(w);
    out.iterations = it;
    if (it > 1 && std::abs(rq - lambda) <= rel_tol * std::abs(rq)) {
      out.value = rq;
      out.converged = true;
      return out;
    }
    lambda = rq;
  }
  out.value = lambda;
  return out;
}

}  // namespace fedl_lab
