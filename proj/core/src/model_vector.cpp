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

#include "fedl_lab/model_vector.hpp"

#include <cmath>
#include <string>

#include "fedl_lab/errors.hpp"

namespace fedl_lab {

ModelVector& ModelVector::operator+=(const ModelVector& other) {
  require_same_size(*this, other, "operator+=");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other[i];
  return *this;
}

ModelVector& ModelVector::operator-=(const ModelVector& other) {
  require_same_size(*this, other, "operator-=");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other[i];
  return *this;
}

ModelVector& ModelVector::operator*=(double s) {
  for (double& v : values_) v *= s;
  return *this;
}

ModelVector& ModelVector::axpy(double a, const ModelVector& x) {
  require_same_size(*this, x, "axpy");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += a * x[i];
  return *this;
}

bool ModelVector::all_finite() const {
  for (double v : values_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

ModelVector operator+(ModelVector a, const ModelVector& b) { return a += b; }
ModelVector operator-(ModelVector a, const ModelVector& b) { return a -= b; }
ModelVector operator*(double s, ModelVector a) { return a *= s; }

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double dot(const ModelVector& a, const ModelVector& b) {
  require_same_size(a, b, "dot");
  return dot(a.values(), b.values());
}

double squared_norm(const ModelVector& a) { return dot(a, a); }

double norm(const ModelVector& a) { return std::sqrt(squared_norm(a)); }

void require_same_size(const ModelVector& a, const ModelVector& b,
                       const char* what) {
  if (a.size() != b.size()) {
    throw InvalidInputError(std::string(what) + ": dimension mismatch (" +
                            std::to_string(a.size()) + " vs " +
                            std::to_string(b.size()) + ")");
  }
}

}  // namespace fedl_lab
