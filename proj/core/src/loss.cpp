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

#include "fedl_lab/loss.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fedl_lab/errors.hpp"

namespace fedl_lab {

std::string_view to_string(LossKind kind) {
  switch (kind) {
    case LossKind::kMseLinear:
      return "mse-linear";
    case LossKind::kMultinomialLogistic:
      return "multinomial-logistic";
  }
  return "unknown";
}

LossKind parse_loss_kind(std::string_view name) {
  if (name == "mse-linear") return LossKind::kMseLinear;
  if (name == "multinomial-logistic") return LossKind::kMultinomialLogistic;
  throw InvalidInputError("unknown loss kind '" + std::string(name) + "'");
}

std::size_t LossModel::parameter_count(std::size_t feature_dim) const {
  return kind == LossKind::kMseLinear ? feature_dim : classes * feature_dim;
}

void LossModel::validate() const {
  if (kind == LossKind::kMultinomialLogistic && classes < 2) {
    throw InvalidInputError("multinomial-logistic needs at least 2 classes");
  }
  if (!(reg >= 0.0) || !std::isfinite(reg)) {
    throw InvalidInputError("regularization must be finite and >= 0");
  }
}

namespace {

void check_shapes(const LossModel& model, const ModelVector& w,
                  const UEDataset& data) {
  model.validate();
  if (data.size() == 0) throw InvalidInputError("dataset is empty");
  if (data.features.rows() != data.labels.size()) {
    throw InvalidInputError("feature rows and labels disagree");
  }
  if (w.size() != model.parameter_count(data.dim())) {
    throw InvalidInputError("model has " + std::to_string(w.size()) +
                            " parameters, data needs " +
                            std::to_string(model.parameter_count(data.dim())));
  }
}

std::size_t class_of(const LossModel& model, double label) {
  const auto c = static_cast<long long>(std::llround(label));
  if (c < 0 || static_cast<std::size_t>(c) >= model.classes ||
      static_cast<double>(c) != label) {
    throw InvalidInputError("label " + std::to_string(label) +
                            " is not a class index below " +
                            std::to_string(model.classes));
  }
  return static_cast<std::size_t>(c);
}

// Fills logits[c] = <w_c, x>; returns log-sum-exp with the max shift.
double log_softmax_normalizer(const LossModel& model, const ModelVector& w,
                              std::span<const double> x,
                              std::vector<double>& logits) {
  const std::size_t d = x.size();
  logits.resize(model.classes);
  double mx = -INFINITY;
  for (std::size_t c = 0; c < model.classes; ++c) {
    logits[c] = dot(w.values().subspan(c * d, d), x);
    mx = std::max(mx, logits[c]);
  }
  double s = 0.0;
  for (double z : logits) s += std::exp(z - mx);
  return mx + std::log(s);
}

template <typename IndexFn>
ModelVector grad_impl(const LossModel& model, const ModelVector& w,
                      const UEDataset& data, std::size_t count,
                      IndexFn index) {
  const std::size_t d = data.dim();
  ModelVector g(w.size());
  const double inv = 1.0 / static_cast<double>(count);
  if (model.kind == LossKind::kMseLinear) {
    for (std::size_t k = 0; k < count; ++k) {
      const std::size_t i = index(k);
      auto x = data.features.row(i);
      const double r = dot(w.values(), x) - data.labels[i];
      const double a = 2.0 * r * inv;
      for (std::size_t j = 0; j < d; ++j) g[j] += a * x[j];
    }
    return g;
  }
  std::vector<double> logits;
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t i = index(k);
    auto x = data.features.row(i);
    const double lse = log_softmax_normalizer(model, w, x, logits);
    const std::size_t y = class_of(model, data.labels[i]);
    for (std::size_t c = 0; c < model.classes; ++c) {
      const double p = std::exp(logits[c] - lse) - (c == y ? 1.0 : 0.0);
      const double a = p * inv;
      for (std::size_t j = 0; j < d; ++j) g[c * d + j] += a * x[j];
    }
  }
  g.axpy(model.reg, w);
  return g;
}

}  // namespace

double loss(const LossModel& model, const ModelVector& w,
            const UEDataset& data) {
  check_shapes(model, w, data);
  const double inv = 1.0 / static_cast<double>(data.size());
  double total = 0.0;
  if (model.kind == LossKind::kMseLinear) {
    for (std::size_t i = 0; i < data.size(); ++i) {
      const double r = dot(w.values(), data.features.row(i)) - data.labels[i];
      total += r * r;
    }
    return total * inv;
  }
  std::vector<double> logits;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double lse =
        log_softmax_normalizer(model, w, data.features.row(i), logits);
    total += lse - logits[class_of(model, data.labels[i])];
  }
  return total * inv + 0.5 * model.reg * squared_norm(w);
}

ModelVector grad(const LossModel& model, const ModelVector& w,
                 const UEDataset& data,
                 std::optional<std::span<const std::size_t>> batch) {
  check_shapes(model, w, data);
  if (!batch) {
    return grad_impl(model, w, data, data.size(),
                     [](std::size_t k) { return k; });
  }
  if (batch->empty()) throw InvalidInputError("empty mini-batch");
  for (std::size_t i : *batch) {
    if (i >= data.size()) {
      throw InvalidInputError("batch index " + std::to_string(i) +
                              " out of range");
    }
  }
  return grad_impl(model, w, data, batch->size(),
                   [&](std::size_t k) { return (*batch)[k]; });
}

double global_loss(const LossModel& model, const ModelVector& w,
                   std::span<const UEDataset> datasets) {
  double total = 0.0;
  for (const auto& ds : datasets) total += ds.weight * loss(model, w, ds);
  return total;
}

double accuracy(const LossModel& model, const ModelVector& w,
                std::span<const UEDataset> datasets) {
  if (model.kind != LossKind::kMultinomialLogistic) {
    throw InvalidInputError("accuracy is defined for classification only");
  }
  std::size_t correct = 0;
  std::size_t total = 0;
  std::vector<double> logits;
  for (const auto& ds : datasets) {
    check_shapes(model, w, ds);
    for (std::size_t i = 0; i < ds.size(); ++i) {
      log_softmax_normalizer(model, w, ds.features.row(i), logits);
      const auto best = static_cast<std::size_t>(
          std::max_element(logits.begin(), logits.end()) - logits.begin());
      if (best == class_of(model, ds.labels[i])) ++correct;
      ++total;
    }
  }
  return total == 0 ? 0.0
                    : static_cast<double>(correct) / static_cast<double>(total);
}

LocalObjective::LocalObjective(const LossModel& model, const UEDataset& data)
    : model_(model), data_(&data) {
  model.validate();
  if (data.size() == 0) throw InvalidInputError("dataset is empty");
  if (model.kind != LossKind::kMseLinear) return;
  quadratic_ = true;
  const double inv = 1.0 / static_cast<double>(data.size());
  xtx_ = gram(data.features, inv);
  xty_.assign(data.dim(), 0.0);
  for (std::size_t i = 0; i < data.size(); ++i) {
    auto x = data.features.row(i);
    const double y = data.labels[i];
    for (std::size_t j = 0; j < x.size(); ++j) xty_[j] += x[j] * y;
    yty_ += y * y;
  }
  for (double& v : xty_) v *= inv;
  yty_ *= inv;
}

double LocalObjective::value(const ModelVector& w) const {
  if (!quadratic_) return loss(model_, w, *data_);
  if (w.size() != xty_.size()) {
    throw InvalidInputError("model dimension mismatch");
  }
  std::vector<double> gw(w.size());
  mat_vec(xtx_, w.values(), gw);
  return dot(w.values(), gw) - 2.0 * dot(w.values(), xty_) + yty_;
}

ModelVector LocalObjective::gradient(const ModelVector& w) const {
  if (!quadratic_) return grad(model_, w, *data_);
  if (w.size() != xty_.size()) {
    throw InvalidInputError("model dimension mismatch");
  }
  ModelVector g(w.size());
  mat_vec(xtx_, w.values(), g.values());
  for (std::size_t j = 0; j < g.size(); ++j) g[j] = 2.0 * (g[j] - xty_[j]);
  return g;
}

}  // namespace fedl_lab
