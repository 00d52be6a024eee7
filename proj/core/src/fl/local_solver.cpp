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

#include "fedl_lab/fl/local_solver.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "fedl_lab/errors.hpp"
#include "fedl_lab/fl/trace.hpp"

namespace fedl_lab::fl {

namespace {

// Draws `size` distinct sample indices (partial Fisher-Yates).
std::vector<std::size_t> draw_batch(std::size_t n, std::size_t size,
                                    std::vector<std::size_t>& pool, Rng& rng) {
  if (pool.size() != n) {
    pool.resize(n);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
  }
  size = std::min(size, n);
  for (std::size_t i = 0; i < size; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  return {pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size)};
}

ModelVector step_gradient(const LocalObjective& objective, const ModelVector& z,
                          const ModelVector& full_grad,
                          std::optional<std::size_t> batch,
                          std::vector<std::size_t>& pool, Rng& rng) {
  const auto& data = objective.data();
  if (!batch || *batch >= data.size()) return full_grad;
  const auto idx = draw_batch(data.size(), *batch, pool, rng);
  return grad(objective.model(), z, data, std::span<const std::size_t>(idx));
}

void check_finite(const ModelVector& z, std::size_t ue, std::size_t k) {
  if (!z.all_finite()) {
    throw DivergenceError("local iterate of UE " + std::to_string(ue) +
                              " is not finite after " + std::to_string(k) +
                              " steps",
                          ue, 0);
  }
}

}  // namespace

ModelVector surrogate_grad(const ModelVector& w, const ModelVector& w_prev,
                           const ModelVector& gbar, double eta,
                           const UEDataset& ue, const LossModel& model) {
  require_same_size(w, w_prev, "surrogate_grad");
  require_same_size(w, gbar, "surrogate_grad");
  ModelVector g = grad(model, w, ue);
  g -= grad(model, w_prev, ue);
  g.axpy(eta, gbar);
  return g;
}

double surrogate_value(const ModelVector& w, const ModelVector& w_prev,
                       const ModelVector& gbar, double eta,
                       const UEDataset& ue, const LossModel& model) {
  require_same_size(w, w_prev, "surrogate_value");
  require_same_size(w, gbar, "surrogate_value");
  ModelVector shift = eta * gbar;
  shift -= grad(model, w_prev, ue);
  return loss(model, w, ue) + dot(shift, w);
}

LocalResult local_solve(const LocalObjective& objective,
                        const ModelVector& w_prev, const ModelVector& gbar,
                        const LocalSolveOptions& options, Rng& rng,
                        std::size_t ue_index) {
  require_same_size(w_prev, gbar, "local_solve");
  if (!(options.h > 0.0)) throw InvalidInputError("step size h must be > 0");
  if (!(options.theta >= 0.0 && options.theta <= 1.0)) {
    throw InvalidInputError("theta must lie in [0, 1]");
  }
  if (options.batch && *options.batch == 0) {
    throw InvalidInputError("batch size must be positive");
  }

  // shift = eta * gbar - grad F_n(w_prev); grad J(z) = grad F_n(z) + shift.
  ModelVector shift = options.eta * gbar;
  shift -= objective.gradient(w_prev);
  const double target = options.theta * norm(options.eta * gbar);

  LocalResult out;
  out.w = w_prev;
  out.grad_f = objective.gradient(out.w);
  std::vector<std::size_t> pool;
  for (std::size_t k = 0;; ++k) {
    // At z0 = w_prev the surrogate gradient is exactly eta * gbar; forming it
    // as grad_f + shift could round above the target when theta = 1.
    ModelVector gj = k == 0 ? options.eta * gbar : out.grad_f + shift;
    if (norm(gj) <= target) {
      out.iterations = k;
      return out;
    }
    if (k == options.cap) {
      out.iterations = k;
      out.hit_cap = true;
      return out;
    }
    if (options.batch) {
      ModelVector gb = step_gradient(objective, out.w, out.grad_f,
                                     options.batch, pool, rng);
      gb += shift;
      gj = std::move(gb);
    }
    out.w.axpy(-options.h, gj);
    check_finite(out.w, ue_index, k + 1);
    out.grad_f = objective.gradient(out.w);
  }
}

LocalResult local_solve(const ModelVector& w_prev, const ModelVector& gbar,
                        const LocalSolveOptions& options, const UEDataset& ue,
                        const LossModel& model, std::uint64_t seed) {
  LocalObjective objective(model, ue);
  Rng rng = make_stream(seed);
  return local_solve(objective, w_prev, gbar, options, rng);
}

LocalResult local_gd(const LocalObjective& objective, const ModelVector& w0,
                     std::size_t steps, double h,
                     std::optional<std::size_t> batch, Rng& rng,
                     std::size_t ue_index) {
  if (!(h > 0.0)) throw InvalidInputError("step size h must be > 0");
  LocalResult out;
  out.w = w0;
  out.grad_f = objective.gradient(out.w);
  std::vector<std::size_t> pool;
  for (std::size_t k = 0; k < steps; ++k) {
    const ModelVector g =
        step_gradient(objective, out.w, out.grad_f, batch, pool, rng);
    out.w.axpy(-h, g);
    check_finite(out.w, ue_index, k + 1);
    out.grad_f = objective.gradient(out.w);
  }
  out.iterations = steps;
  return out;
}

}  // namespace fedl_lab::fl
