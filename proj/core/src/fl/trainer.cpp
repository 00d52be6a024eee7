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

#include "fedl_lab/fl/trainer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "fedl_lab/errors.hpp"
#include "fedl_lab/fl/local_solver.hpp"
#include "fedl_lab/parallel.hpp"
#include "fedl_lab/rng.hpp"

namespace fedl_lab::fl {

namespace {

constexpr std::uint64_t kServerStream = 0x5e17e5ULL;

using LocalStep = std::function<LocalResult(
    const LocalObjective&, const ModelVector& w, const ModelVector& gbar,
    Rng& rng, std::size_t ue)>;

struct Evaluator {
  std::vector<LocalObjective> objectives;
  std::span<const UEDataset> ues;
  std::span<const UEDataset> test;
  LossModel model;

  double global_loss(const ModelVector& w) const {
    double total = 0.0;
    for (std::size_t n = 0; n < objectives.size(); ++n) {
      total += ues[n].weight * objectives[n].value(w);
    }
    return total;
  }

  double test_accuracy(const ModelVector& w) const {
    if (model.kind != LossKind::kMultinomialLogistic || test.empty()) {
      return std::numeric_limits<double>::quiet_NaN();
    }
    return accuracy(model, w, test);
  }
};

TrainingTrace run_loop(const char* name, const TrainConfig& cfg,
                       std::span<const UEDataset> ues, const LossModel& model,
                       const RunOptions& options, const LocalStep& step) {
  model.validate();
  validate_datasets(ues);
  cfg.validate(ues.size());
  const std::size_t n_params = model.parameter_count(ues.front().dim());

  Evaluator eval{{}, ues, options.test, model};
  eval.objectives.reserve(ues.size());
  for (const auto& ue : ues) eval.objectives.emplace_back(model, ue);

  TrainingTrace trace;
  trace.algorithm = name;
  ModelVector w = options.w0.empty() ? ModelVector(n_params) : options.w0;
  if (w.size() != n_params) {
    throw InvalidInputError("initial model has the wrong length");
  }
  trace.initial_loss = eval.global_loss(w);

  ModelVector gbar(n_params);
  {
    std::vector<LocalUpdate> all(ues.size());
    for (std::size_t n = 0; n < ues.size(); ++n) {
      all[n] = {n, ues[n].weight, w, eval.objectives[n].gradient(w)};
    }
    gbar = aggregate(all).gbar;
  }

  const auto start = std::chrono::steady_clock::now();
  const std::size_t subset = cfg.subset_size(ues.size());
  for (std::size_t t = 1; t <= cfg.K_g; ++t) {
    const auto sampled = sample_ues(ues.size(), subset, cfg.seed, t);
    std::vector<LocalResult> results(sampled.size());
    try {
      parallel_for(sampled.size(), [&](std::size_t k) {
        const std::size_t n = sampled[k];
        Rng rng = make_stream(cfg.seed, n + 1, t);
        results[k] = step(eval.objectives[n], w, gbar, rng, n);
      });
    } catch (const DivergenceError& e) {
      trace.final_w = w;
      throw DivergenceError(
          std::string(e.what()) + " in round " + std::to_string(t), e.ue(), t,
          std::move(trace));
    }

    std::vector<LocalUpdate> updates(sampled.size());
    RoundRecord rec;
    rec.round = t;
    rec.sampled = sampled;
    double iters = 0.0;
    for (std::size_t k = 0; k < sampled.size(); ++k) {
      updates[k] = {sampled[k], ues[sampled[k]].weight,
                    std::move(results[k].w), std::move(results[k].grad_f)};
      rec.local_iters.push_back(results[k].iterations);
      rec.hit_cap.push_back(results[k].hit_cap);
      iters += static_cast<double>(results[k].iterations);
    }
    Aggregate agg = aggregate(updates);
    w = std::move(agg.w);
    gbar = std::move(agg.gbar);

    rec.global_loss = eval.global_loss(w);
    rec.test_accuracy = eval.test_accuracy(w);
    rec.grad_bar_norm = norm(gbar);
    rec.mean_local_iters = iters / static_cast<double>(sampled.size());
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    if (!w.all_finite() || !std::isfinite(rec.global_loss)) {
      trace.final_w = w;
      throw DivergenceError(
          "aggregated model is not finite in round " + std::to_string(t),
          DivergenceError::kServer, t, std::move(trace));
    }
    trace.rounds.push_back(std::move(rec));
  }
  trace.final_w = std::move(w);
  return trace;
}

}  // namespace

void TrainConfig::validate(std::size_t n_ues) const {
  if (!(eta >= 0.0) || !std::isfinite(eta)) {
    throw InvalidInputError("eta must be finite and >= 0");
  }
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw InvalidInputError("theta must lie in [0, 1]");
  }
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw InvalidInputError("step size h must be finite and > 0");
  }
  if (batch && *batch == 0) throw InvalidInputError("batch must be positive");
  if (S && (*S == 0 || *S > n_ues)) {
    throw InvalidInputError("S must lie in [1, " + std::to_string(n_ues) +
                            "]");
  }
}

Aggregate aggregate(std::span<const LocalUpdate> locals) {
  if (locals.empty()) throw InvalidInputError("no local updates to aggregate");
  std::vector<std::size_t> order(locals.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return locals[a].ue < locals[b].ue;
                   });
  double total = 0.0;
  for (std::size_t k : order) total += locals[k].weight;
  if (!(total > 0.0)) {
    throw InvalidInputError("aggregation weights must sum to a positive value");
  }
  const std::size_t dim = locals.front().w.size();
  Aggregate out{ModelVector(dim), ModelVector(dim)};
  for (std::size_t k : order) {
    const auto& u = locals[k];
    if (u.w.size() != dim || u.grad.size() != dim) {
      throw InvalidInputError("local updates differ in length");
    }
    const double p = u.weight / total;
    out.w.axpy(p, u.w);
    out.gbar.axpy(p, u.grad);
  }
  return out;
}

std::vector<std::size_t> sample_ues(std::size_t n_ues, std::size_t subset,
                                    std::uint64_t seed, std::size_t round) {
  std::vector<std::size_t> all(n_ues);
  std::iota(all.begin(), all.end(), std::size_t{0});
  if (subset >= n_ues) return all;
  std::vector<std::size_t> out;
  out.reserve(subset);
  Rng rng = make_stream(seed, kServerStream, round);
  std::sample(all.begin(), all.end(), std::back_inserter(out), subset, rng);
  return out;
}

TrainingTrace run_fedl(const TrainConfig& cfg, std::span<const UEDataset> ues,
                       const LossModel& model, const RunOptions& options) {
  const LocalSolveOptions local{cfg.eta, cfg.theta, cfg.K_l, cfg.h, cfg.batch};
  return run_loop("fedl", cfg, ues, model, options,
                  [&](const LocalObjective& obj, const ModelVector& w,
                      const ModelVector& gbar, Rng& rng, std::size_t ue) {
                    return local_solve(obj, w, gbar, local, rng, ue);
                  });
}

TrainingTrace run_fedavg(const TrainConfig& cfg,
                         std::span<const UEDataset> ues,
                         const LossModel& model, const RunOptions& options) {
  return run_loop("fedavg", cfg, ues, model, options,
                  [&](const LocalObjective& obj, const ModelVector& w,
                      const ModelVector&, Rng& rng, std::size_t ue) {
                    return local_gd(obj, w, cfg.K_l, cfg.h, cfg.batch, rng,
                                    ue);
                  });
}

}  // namespace fedl_lab::fl
